#include "circlehall/circle.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace circlehall {

Arc Arc::interval(const Rat& a, const Rat& b) {
  Rat len = b - a;
  if (len <= 0) len += rat_floor(-len) + 1;  // wrap once: [a,b) with b <= a on the circle
  while (len > 1) len -= 1;
  if (len <= 0) throw precondition_error("degenerate interval");
  return Arc(CirclePoint(b), len);
}

long long Arc::denominator() const {
  Int d = lcm_int(rat_den(right.value()), rat_den(len));
  return to_ll(d);
}

std::string Arc::to_string() const {
  std::ostringstream os;
  os << "[" << rat_to_string(right.value() - len) << "," << rat_to_string(right.value()) << ")";
  return os.str();
}

StepFunction::StepFunction(long long n, std::vector<long long> values) : n_(n), v_(std::move(values)) {
  if (n_ <= 0 || v_.size() != static_cast<size_t>(n_))
    throw precondition_error("step function size mismatch");
  normalize();
}

void StepFunction::normalize() {
  // Minimal d | n with values constant on blocks of size n/d.
  for (long long d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    long long block = n_ / d;
    bool ok = true;
    for (long long i = 0; i < n_ && ok; ++i)
      if (v_[static_cast<size_t>(i)] != v_[static_cast<size_t>((i / block) * block)]) ok = false;
    if (ok) {
      if (d == n_) return;
      std::vector<long long> w(static_cast<size_t>(d));
      for (long long i = 0; i < d; ++i) w[static_cast<size_t>(i)] = v_[static_cast<size_t>(i * block)];
      n_ = d;
      v_ = std::move(w);
      return;
    }
  }
}

StepFunction StepFunction::indicator(const Arc& a) {
  long long n = a.denominator();
  std::vector<long long> v(static_cast<size_t>(n), 0);
  // Arc [right-len, right): covers len*n cells ending at cell right*n - 1.
  long long r = to_ll(rat_num(a.right.value()) * (n / to_ll(rat_den(a.right.value()))));
  long long k = to_ll(rat_num(a.len) * (n / to_ll(rat_den(a.len))));
  for (long long t = 1; t <= k; ++t) v[static_cast<size_t>(((r - t) % n + n) % n)] += 1;
  return StepFunction(n, std::move(v));
}

StepFunction StepFunction::unit(long long n, long long i) {
  std::vector<long long> v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>((((i - 1) % n) + n) % n)] = 1;
  return StepFunction(n, std::move(v));
}

long long StepFunction::left_limit(const Rat& x) const {
  // Value just left of x: the cell whose right endpoint is x when x is a
  // breakpoint of the n-grid, otherwise the cell containing x.
  Rat fx = rat_frac(x);
  Rat pos = fx * n_;
  if (rat_den(pos) == 1) {
    long long i = to_ll(rat_num(pos));
    return value_at_cell(i - 1);
  }
  return value_at_cell(to_ll(rat_num(rat_floor(pos))));
}

long long StepFunction::right_limit(const Rat& x) const {
  Rat fx = rat_frac(x);
  return value_at_cell(to_ll(rat_num(rat_floor(fx * n_))));
}

bool StepFunction::is_zero() const {
  for (long long x : v_)
    if (x != 0) return false;
  return true;
}

long long StepFunction::total() const {
  return std::accumulate(v_.begin(), v_.end(), 0LL);
}

bool StepFunction::nonnegative() const {
  for (long long x : v_)
    if (x < 0) return false;
  return true;
}

std::vector<long long> StepFunction::values_at(long long m) const {
  if (m % n_ != 0) throw precondition_error("refinement target not a multiple");
  long long k = m / n_;
  std::vector<long long> w(static_cast<size_t>(m));
  for (long long i = 0; i < n_; ++i)
    for (long long j = 0; j < k; ++j) w[static_cast<size_t>(i * k + j)] = v_[static_cast<size_t>(i)];
  return w;
}

StepFunction StepFunction::refined(long long m) const {
  return StepFunction(m, values_at(m));
}

StepFunction StepFunction::operator+(const StepFunction& o) const {
  long long m = to_ll(lcm_int(Int(n_), Int(o.n_)));
  std::vector<long long> a = values_at(m), b = o.values_at(m);
  for (long long i = 0; i < m; ++i) a[static_cast<size_t>(i)] += b[static_cast<size_t>(i)];
  return StepFunction(m, std::move(a));
}

StepFunction StepFunction::operator-(const StepFunction& o) const { return *this + (-o); }

StepFunction StepFunction::operator-() const {
  std::vector<long long> w = v_;
  for (auto& x : w) x = -x;
  return StepFunction(n_, std::move(w));
}

StepFunction StepFunction::scaled(long long c) const {
  std::vector<long long> w = v_;
  for (auto& x : w) x *= c;
  return StepFunction(n_, std::move(w));
}

std::string StepFunction::to_string() const {
  std::ostringstream os;
  os << "(n=" << n_ << ";";
  for (size_t i = 0; i < v_.size(); ++i) os << (i ? "," : " ") << v_[i];
  os << ")";
  return os.str();
}

long long interval_euler_form(const StepFunction& f, const StepFunction& g) {
  long long m = to_ll(lcm_int(Int(f.denominator()), Int(g.denominator())));
  std::vector<long long> a = f.values_at(m), b = g.values_at(m);
  // sum_j a[j] (b[j] - b[j+1]) over cells mod m
  long long acc = 0;
  for (long long j = 0; j < m; ++j)
    acc += a[static_cast<size_t>(j)] *
           (b[static_cast<size_t>(j)] - b[static_cast<size_t>((j + 1) % m)]);
  return acc;
}

long long symmetric_interval_euler_form(const StepFunction& f, const StepFunction& g) {
  return interval_euler_form(f, g) + interval_euler_form(g, f);
}

long long kclass_euler_form(const KClass& a, const KClass& b, long long genus) {
  long long m = to_ll(lcm_int(Int(a.dim.denominator()), Int(b.dim.denominator())));
  std::vector<long long> d = a.dim.values_at(m), e = b.dim.values_at(m);
  long long r = a.rank, s = b.rank;
  long long e1 = e.front();
  long long dn = d.back();
  return r * s * (1 - genus) + r * e1 - dn * s + interval_euler_form(a.dim, b.dim);
}

long long symmetric_kclass_euler_form(const KClass& a, const KClass& b, long long genus) {
  return kclass_euler_form(a, b, genus) + kclass_euler_form(b, a, genus);
}

std::vector<long long> lattice_from_step(const StepFunction& f, long long n) {
  return f.values_at(n);  // d_i = f((i-1)/n)
}

StepFunction step_from_lattice(const std::vector<long long>& d) {
  return StepFunction(static_cast<long long>(d.size()), d);
}

StackInvariants stack_invariants(long long n, long long genus, const KClass& k) {
  if (n % k.dim.denominator() != 0)
    throw precondition_error("class not representable at denominator n");
  StackInvariants out;
  std::vector<long long> d = k.dim.values_at(n);
  long long total = 0;
  for (long long x : d) total += x;
  out.deg_n = Rat(total, n);
  out.slope_infinite = (k.rank == 0);
  if (!out.slope_infinite) out.slope = out.deg_n / k.rank;
  Rat chi_O = Rat(n * n + n - 2 * genus * n * n, 2);
  out.chi_n = Rat(n) * out.deg_n + Rat(k.rank) * chi_O;
  out.virtual_genus = Rat(2 * n * genus - n + 1, 2);
  return out;
}

}  // namespace circlehall
