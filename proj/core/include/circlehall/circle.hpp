#pragma once

#include <compare>
#include <string>
#include <vector>

#include "circlehall/rational.hpp"

namespace circlehall {

// Point of Q/Z, stored as a reduced rational in [0,1).
class CirclePoint {
 public:
  CirclePoint() : v_(0) {}
  explicit CirclePoint(const Rat& r) : v_(rat_frac(r)) {}

  const Rat& value() const { return v_; }
  long long denominator_ll() const { return to_ll(rat_den(v_)); }

  CirclePoint operator+(const Rat& r) const { return CirclePoint(v_ + r); }
  bool operator==(const CirclePoint& o) const { return v_ == o.v_; }
  bool operator<(const CirclePoint& o) const { return v_ < o.v_; }

 private:
  Rat v_;
};

// Half-open arc on the circle, stored by right endpoint and positive length.
// The arc is [right - len, right); len >= 1 wraps (torsion objects only).
struct Arc {
  CirclePoint right;
  Rat len;

  Arc() : len(0) {}
  Arc(CirclePoint r, Rat l) : right(r), len(std::move(l)) {
    if (len <= 0) throw precondition_error("arc length must be positive");
  }
  static Arc interval(const Rat& a, const Rat& b);  // [a,b) with b-a in (0,1]

  CirclePoint left() const { return CirclePoint(right.value() - len); }
  bool is_strict() const { return len < 1; }
  long long denominator() const;  // lcm of denominators of right and len

  bool operator==(const Arc& o) const { return right == o.right && len == o.len; }
  bool operator<(const Arc& o) const {
    if (!(right == o.right)) return right < o.right;
    return len < o.len;
  }
  std::string to_string() const;
};

// Finitely presented step function S^1_Q -> Z: value(i) on [i/n,(i+1)/n).
// Always normalized to the minimal denominator.
class StepFunction {
 public:
  StepFunction() : n_(1), v_{0} {}
  StepFunction(long long n, std::vector<long long> values);

  static StepFunction zero(long long n = 1) { return StepFunction(n, std::vector<long long>(static_cast<size_t>(n), 0)); }
  static StepFunction constant(long long c) { return StepFunction(1, {c}); }
  static StepFunction indicator(const Arc& a);  // wrapped characteristic function
  // Basis vector e_{n,i}, i in 1..n: characteristic function of [(i-1)/n, i/n).
  static StepFunction unit(long long n, long long i);

  long long denominator() const { return n_; }
  const std::vector<long long>& values() const { return v_; }
  // Length-m value vector (n | m) regardless of normalization.
  std::vector<long long> values_at(long long m) const;
  long long value_at_cell(long long m) const { return v_[static_cast<size_t>(((m % n_) + n_) % n_)]; }
  // One-sided limits at x.
  long long left_limit(const Rat& x) const;
  long long right_limit(const Rat& x) const;

  bool is_zero() const;
  long long total() const;  // sum over cells (n * average)
  bool nonnegative() const;

  StepFunction refined(long long m) const;  // represent at denominator m (n | m)
  StepFunction operator+(const StepFunction& o) const;
  StepFunction operator-(const StepFunction& o) const;
  StepFunction operator-() const;
  StepFunction scaled(long long c) const;
  bool operator==(const StepFunction& o) const { return n_ == o.n_ && v_ == o.v_; }
  bool operator<(const StepFunction& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return v_ < o.v_;
  }

  std::string to_string() const;

 private:
  void normalize();
  long long n_;
  std::vector<long long> v_;
};

// <f,g> = sum_x f_-(x) (g_-(x) - g_+(x))   (finite sum over breakpoints).
long long interval_euler_form(const StepFunction& f, const StepFunction& g);
long long symmetric_interval_euler_form(const StepFunction& f, const StepFunction& g);

// Class in numerical K-theory: rank plus degree step function.
struct KClass {
  long long rank = 0;
  StepFunction dim;

  KClass() = default;
  KClass(long long r, StepFunction d) : rank(r), dim(std::move(d)) {}
  bool is_torsion() const { return rank == 0; }
  KClass refined(long long m) const { return KClass(rank, dim.refined(m)); }
  KClass operator+(const KClass& o) const { return KClass(rank + o.rank, dim + o.dim); }
  bool operator==(const KClass& o) const = default;
};

// <F,E> = rs(1-g) + r e_1 - d_n s + <d,e>  at a common refinement.
long long kclass_euler_form(const KClass& a, const KClass& b, long long genus);
long long symmetric_kclass_euler_form(const KClass& a, const KClass& b, long long genus);

// Lattice dictionary at denominator n: d_i = f((i-1)/n), i = 1..n.
std::vector<long long> lattice_from_step(const StepFunction& f, long long n);
StepFunction step_from_lattice(const std::vector<long long>& d);

struct StackInvariants {
  Rat deg_n;
  bool slope_infinite = false;
  Rat slope;  // valid when !slope_infinite
  Rat chi_n;
  Rat virtual_genus;
};

// deg_n = (sum d_i)/n, slope = deg_n/rank, chi_n = n deg_n + r chi_n(O),
// chi_n(O) = (n^2+n-2g n^2)/2, virtual genus = (2ng-n+1)/2.
StackInvariants stack_invariants(long long n, long long genus, const KClass& k);

}  // namespace circlehall
