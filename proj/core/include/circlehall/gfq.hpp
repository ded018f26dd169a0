#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "circlehall/rational.hpp"

namespace circlehall {

// Arithmetic tables for F_q, q = p^k a prime power. Elements are indices
// 0..q-1; 0 and 1 are the additive and multiplicative identities.
class GFq {
 public:
  static const GFq& get(int q);  // cached per q

  int q() const { return q_; }
  int p() const { return p_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[idx(a, b)]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;

  static bool is_prime_power(int q);

 private:
  explicit GFq(int q);
  size_t idx(uint8_t a, uint8_t b) const { return static_cast<size_t>(a) * q_ + b; }
  int q_, p_, k_;
  std::vector<uint8_t> add_, mul_, neg_, inv_;
};

// Dense matrix over F_q. Rows x cols, row-major.
class MatFq {
 public:
  MatFq() : field_(nullptr), rows_(0), cols_(0) {}
  MatFq(const GFq& f, int rows, int cols)
      : field_(&f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static MatFq identity(const GFq& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint8_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }
  const GFq& field() const { return *field_; }

  MatFq operator*(const MatFq& o) const;
  MatFq operator+(const MatFq& o) const;
  bool operator==(const MatFq& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  int rank() const;
  // Solution space basis of M x = 0 (columns of the returned matrix).
  MatFq null_space() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  // Column span membership / restriction helpers.
  // Rows of `basis` span a subspace of F_q^{cols}; returns true if v (length
  // cols) lies in it.
  static bool in_row_span(const MatFq& basis, const std::vector<uint8_t>& v);

 private:
  const GFq* field_;
  int rows_, cols_;
  std::vector<uint8_t> a_;
};

// All subspaces of F_q^d as reduced row-echelon basis matrices (rows = basis
// vectors). Index 0 is the zero subspace.
std::vector<MatFq> all_subspaces(const GFq& f, int d);
// Only those of a given dimension.
std::vector<MatFq> subspaces_of_dim(const GFq& f, int d, int k);

// Row-reduce to RREF in place; returns rank.
int rref(MatFq& m);

}  // namespace circlehall
