#include "circlehall/series.hpp"

namespace circlehall {

IntPoly poly_trim(IntPoly p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  return p;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {Int(0)};
  IntPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return poly_trim(std::move(r));
}

RationalFunctionSeries::RationalFunctionSeries(int q, IntPoly num, IntPoly den)
    : q_(q), num_(poly_trim(std::move(num))), den_(poly_trim(std::move(den))) {
  if (den_.empty() || den_[0] == 0)
    throw precondition_error("series denominator vanishes at 0");
}

Rat RationalFunctionSeries::coeff_rat(size_t i) const {
  // c_i = (num_i - sum_{j=1..i} den_j * c_{i-j}) / den_0
  while (cache_.size() <= i) {
    size_t k = cache_.size();
    Rat acc = k < num_.size() ? Rat(num_[k]) : Rat(0);
    for (size_t j = 1; j < den_.size() && j <= k; ++j)
      acc -= Rat(den_[j]) * cache_[k - j];
    cache_.push_back(acc / Rat(den_[0]));
  }
  return cache_[i];
}

Scalar RationalFunctionSeries::coeff(size_t i) const {
  return Scalar::of_rat(q_, coeff_rat(i));
}

std::vector<Scalar> RationalFunctionSeries::expand(size_t order) const {
  std::vector<Scalar> out;
  out.reserve(order + 1);
  for (size_t i = 0; i <= order; ++i) out.push_back(coeff(i));
  return out;
}

RationalFunctionSeries RationalFunctionSeries::operator*(const RationalFunctionSeries& o) const {
  int q = q_ ? q_ : o.q_;
  return RationalFunctionSeries(q, poly_mul(num_, o.num_), poly_mul(den_, o.den_));
}

RationalFunctionSeries RationalFunctionSeries::operator/(const RationalFunctionSeries& o) const {
  int q = q_ ? q_ : o.q_;
  if (o.num_.empty() || o.num_[0] == 0)
    throw precondition_error("series division by function vanishing at 0");
  return RationalFunctionSeries(q, poly_mul(num_, o.den_), poly_mul(den_, o.num_));
}

bool RationalFunctionSeries::series_equal(const RationalFunctionSeries& o, size_t order) const {
  for (size_t i = 0; i <= order; ++i)
    if (coeff_rat(i) != o.coeff_rat(i)) return false;
  return true;
}

}  // namespace circlehall
