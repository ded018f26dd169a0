#pragma once

#include <vector>

#include "circlehall/scalar.hpp"

namespace circlehall {

// Dense integer-coefficient polynomial in one variable z, constant term first.
using IntPoly = std::vector<Int>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_trim(IntPoly p);

// num(z)/den(z) with den(0) != 0, expanded on demand by long division.
// Coefficients of the expansion are rationals embedded in Scalar.
class RationalFunctionSeries {
 public:
  RationalFunctionSeries() = default;
  RationalFunctionSeries(int q, IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  int q() const { return q_; }

  // Coefficient of z^i.
  Scalar coeff(size_t i) const;
  Rat coeff_rat(size_t i) const;
  std::vector<Scalar> expand(size_t order) const;  // coefficients 0..order

  RationalFunctionSeries operator*(const RationalFunctionSeries& o) const;
  RationalFunctionSeries operator/(const RationalFunctionSeries& o) const;
  bool series_equal(const RationalFunctionSeries& o, size_t order) const;

 private:
  int q_ = 0;
  IntPoly num_{Int(0)};
  IntPoly den_{Int(1)};
  mutable std::vector<Rat> cache_;
};

}  // namespace circlehall
