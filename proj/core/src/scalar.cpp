#include "circlehall/scalar.hpp"

#include <sstream>

namespace circlehall {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << rat_num(r);
  if (rat_den(r) != 1) os << "/" << rat_den(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::exception&) {
    throw parse_error("bad rational: " + s);
  }
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

void Scalar::normalize() {
  if (is_zero()) q_ = q_;  // zero keeps its q tag; comparisons ignore it
}

bool Scalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

void Scalar::merge_q(const Scalar& o, int& q_out) const {
  if (q_ == 0) {
    q_out = o.q_;
  } else if (o.q_ == 0) {
    q_out = q_;
  } else if (q_ != o.q_) {
    throw precondition_error("scalar arithmetic across different q");
  } else {
    q_out = q_;
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  int q;
  merge_q(o, q);
  return Scalar(q, {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  return Scalar(q_, {-c_[0], -c_[1], -c_[2], -c_[3]});
}

Scalar Scalar::operator*(const Scalar& o) const {
  int q;
  merge_q(o, q);
  std::array<Rat, 4> r{Rat(0), Rat(0), Rat(0), Rat(0)};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      int k = i + j;
      if (k < 4)
        r[k] += c_[i] * o.c_[j];
      else
        r[k - 4] += c_[i] * o.c_[j] * q;  // u^4 = q
    }
  }
  return Scalar(q, std::move(r));
}

bool Scalar::operator==(const Scalar& o) const {
  if (q_ != 0 && o.q_ != 0 && q_ != o.q_) return is_zero() && o.is_zero();
  return c_ == o.c_;
}

Scalar Scalar::u_pow(int q, long long k) {
  long long e = ((k % 4) + 4) % 4;
  long long wraps = (k - e) / 4;  // u^k = q^wraps * u^e
  Rat c(1);
  Rat qq(q);
  for (long long i = 0; i < (wraps >= 0 ? wraps : -wraps); ++i) {
    if (wraps >= 0)
      c *= qq;
    else
      c /= qq;
  }
  std::array<Rat, 4> a{Rat(0), Rat(0), Rat(0), Rat(0)};
  a[static_cast<size_t>(e)] = c;
  return Scalar(q, std::move(a));
}

bool Scalar::is_unit() const {
  if (is_zero()) return false;
  try {
    (void)inverse();
    return true;
  } catch (const precondition_error&) {
    return false;
  }
}

Scalar Scalar::inverse() const {
  if (q_ == 0 || is_zero()) throw precondition_error("inverse of zero scalar");
  // Solve (this * x) = 1 in the 4-dimensional basis: Gaussian elimination on
  // the multiplication-by-this matrix.
  Rat m[4][5];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) m[i][j] = 0;
  for (int j = 0; j < 4; ++j) {
    // Column j = coordinates of this * u^j.
    Scalar col = *this * u_pow(q_, j);
    for (int i = 0; i < 4; ++i) m[i][j] = col.c_[i];
  }
  m[0][4] = 1;
  for (int col = 0, row = 0; col < 4 && row < 4; ++col) {
    int piv = -1;
    for (int i = row; i < 4; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw precondition_error("division by non-unit scalar");
    for (int j = 0; j < 5; ++j) std::swap(m[piv][j], m[row][j]);
    Rat p = m[row][col];
    for (int j = 0; j < 5; ++j) m[row][j] /= p;
    for (int i = 0; i < 4; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 5; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  std::array<Rat, 4> x{m[0][4], m[1][4], m[2][4], m[3][4]};
  Scalar inv(q_, std::move(x));
  if (!((*this * inv) == one(q_))) throw precondition_error("division by non-unit scalar");
  return inv;
}

Scalar Scalar::bar() const {
  if (q_ == 0) return *this;
  Rat qq(q_);
  return Scalar(q_, {c_[0], c_[3] / qq, c_[2] / qq, c_[1] / qq});
}

int Scalar::compare(const Scalar& o) const {
  for (int i = 0; i < 4; ++i) {
    if (c_[i] < o.c_[i]) return -1;
    if (c_[i] > o.c_[i]) return 1;
  }
  return 0;
}

Scalar Scalar::quantum_integer(int q, long long d) {
  // [d] = v^{d-1} + v^{d-3} + ... + v^{1-d}; [-d] = -[d].
  if (d == 0) return zero(q);
  long long s = d > 0 ? 1 : -1;
  long long a = d > 0 ? d : -d;
  Scalar acc = zero(q);
  for (long long k = a - 1; k >= -(a - 1); k -= 2) acc += v_pow(q, k);
  return s > 0 ? acc : -acc;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  static const char* basis[4] = {"", "u", "u^2", "u^3"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_to_string(c_[i]);
    if (i > 0) os << "*" << basis[i];
    first = false;
  }
  return os.str();
}

Scalar operator*(const Rat& r, const Scalar& s) {
  auto c = s.coeffs();
  for (auto& x : c) x *= r;
  return Scalar(s.q(), std::move(c));
}

}  // namespace circlehall
