#pragma once

#include <array>
#include <string>

#include "circlehall/rational.hpp"

namespace circlehall {

// Coefficient ring at a fixed prime power q:
//
//   Q[u] / (u^4 - q),   v = u^2  (so v^2 = q, u = v^{1/2}).
//
// Every Laurent monomial in u normalizes into the basis {1, u, u^2, u^3}
// via u^{-1} = u^3/q. A default-constructed Scalar is the zero element with
// unspecified q; it merges with any operand.
class Scalar {
 public:
  Scalar() : q_(0) { c_.fill(Rat(0)); }
  Scalar(int q, std::array<Rat, 4> c) : q_(q), c_(std::move(c)) { normalize(); }

  static Scalar zero(int q = 0) { return Scalar(q, {Rat(0), Rat(0), Rat(0), Rat(0)}); }
  static Scalar one(int q) { return of_rat(q, Rat(1)); }
  static Scalar of_rat(int q, const Rat& r) { return Scalar(q, {r, Rat(0), Rat(0), Rat(0)}); }
  static Scalar of_int(int q, long long n) { return of_rat(q, Rat(n)); }
  // u^k and v^k for any k in Z (v = u^2).
  static Scalar u_pow(int q, long long k);
  static Scalar v_pow(int q, long long k) { return u_pow(q, 2 * k); }
  // v^{k/2} for k in Z: half-integer powers of v live in the u-basis.
  static Scalar v_half_pow(int q, long long k) { return u_pow(q, k); }

  int q() const { return q_; }
  const std::array<Rat, 4>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  const Rat& rational_part() const { return c_[0]; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Multiplicative inverse. Throws precondition_error on a non-unit
  // (the ring has zero divisors when x^4 - q is reducible over Q).
  Scalar inverse() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

  bool is_unit() const;

  // u-degree inversion u^k -> u^{-k} on normalized representatives.
  // Multiplicative only on products that do not wrap past u^4 = q;
  // see the coefficient tests.
  Scalar bar() const;

  // Total order for canonical term ordering (lexicographic on coordinates).
  int compare(const Scalar& o) const;

  std::string to_string() const;  // e.g. "3/2 + 1/2*u^2"

  // [d] = (v^d - v^{-d}) / (v - v^{-1}), as the symmetric Laurent sum.
  static Scalar quantum_integer(int q, long long d);

 private:
  void normalize();
  void merge_q(const Scalar& o, int& q_out) const;

  int q_;  // 0 = unspecified (zero element only)
  std::array<Rat, 4> c_;
};

Scalar operator*(const Rat& r, const Scalar& s);

}  // namespace circlehall
