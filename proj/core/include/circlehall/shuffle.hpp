#pragma once

#include <optional>

#include "circlehall/series.hpp"
#include "circlehall/circle.hpp"

namespace circlehall {

// Curve input: genus and the Weil numerator P(z), P(0) = 1, deg P <= 2g.
// zeta(z) = P(z)/((1-z)(1-qz)).
struct ZetaData {
  long long genus = 0;
  int q = 2;
  IntPoly numerator{Int(1)};

  ZetaData() = default;
  ZetaData(long long g, int qq, IntPoly num = {Int(1)});
  // P(z) = q^g z^{2g} P(1/(qz)), i.e. p_{2g-i} = q^{g-i} p_i.
  bool functional_equation_ok() const;

  RationalFunctionSeries zeta() const;
  RationalFunctionSeries xi() const;       // zeta(z)/zeta(z/q)
  RationalFunctionSeries xi_circ() const;  // xi(z) (1-z)/(1-z/q)
  RationalFunctionSeries kernel_h() const;  // q^{1-g} xi(z)
  // Swap/stay kernel factors of the braiding (rational parts; the swap factor
  // carries an extra v^{-1}):
  RationalFunctionSeries swap_factor() const;  // h(z)(1-z)/(1-z/q)   = q^{1-g} xi_circ
  RationalFunctionSeries stay_factor() const;  // h(z)(1-1/q)/(1-z/q)
};

enum class SeriesKind { Zeta, Xi, XiCirc, KernelH };
SeriesKind series_kind_from_string(const std::string& s);
RationalFunctionSeries zeta_series(const ZetaData& zd, SeriesKind kind);

// Independent point-counting oracle for xi/xi_circ: the divisor sum over
// closed points, with point counts from the Weil numbers.
Rat xi_oracle(const ZetaData& zd, long long s, bool omit_base_point);

struct ShuffleContext {
  ZetaData zd;
  size_t order = 3;
  // custom kernel for braid experiments; kernel_h() of zd when absent
  std::optional<RationalFunctionSeries> kernel;
  // stay-term exponent shift (d2+1, d1-1) in the lower-label-first case;
  // disabling it breaks the braid relation (negative control)
  bool stay_shift = true;

  RationalFunctionSeries h() const { return kernel ? *kernel : zd.kernel_h(); }
};

// Monomial key: labels in Q cap [0,1) and integer exponents, one per slot.
struct ShuffleKey {
  std::vector<Rat> labels;
  std::vector<long long> expo;
  bool operator<(const ShuffleKey& o) const;
  bool operator==(const ShuffleKey& o) const { return labels == o.labels && expo == o.expo; }
};

struct ShuffleElement {
  ShuffleContext ctx;
  std::map<ShuffleKey, Scalar> terms;

  static ShuffleElement monomial(const ShuffleContext& c, std::vector<Rat> labels,
                                 std::vector<long long> expo, Scalar coeff);
  size_t rank() const;
  ShuffleElement operator+(const ShuffleElement& o) const;
  ShuffleElement scaled(const Scalar& c) const;
  void prune();
  bool is_zero() const;
  std::string to_string() const;
};

// Degree-1 dictionary: 1^{ss}_{1,d} -> x^{floor(d/n)} v_{ {d}_n / n }.
ShuffleElement rank1_generator(const ShuffleContext& ctx, long long n, long long d);
// Rational variant: 1^{ss}_{1,a} -> x^{floor(a)} v_{ {a} }.
ShuffleElement rank1_generator_rat(const ShuffleContext& ctx, const Rat& a);

// The braiding applied in one slot (0-based, < rank-1), expanded to ctx.order.
ShuffleElement varpi_apply(const ShuffleElement& x, size_t slot);
// Composite over a reduced word, rightmost letter applied first.
ShuffleElement varpi_word(const ShuffleElement& x, const std::vector<size_t>& word);

ShuffleElement shuffle_product(const ShuffleElement& a, const ShuffleElement& b);

// Closed form of the rank-2 constant term of a product of two degree-1
// generators, per branch on {d2-d1} mod n.
ShuffleElement constant_term_rank2(long long d1, long long d2, long long n,
                                   const ShuffleContext& ctx);

// Truncation-aware comparison: agree on all monomials within total partial-sum
// shift <= ctx.order of the minimal base profile per label pattern.
bool shuffle_equal_to_order(const ShuffleElement& a, const ShuffleElement& b,
                            const std::vector<std::vector<long long>>& base_profiles_hint = {});

// (varpi_1 varpi_2 varpi_1 = varpi_2 varpi_1 varpi_2) on rank-3 monomials over
// all label patterns from `labels`; truncation-aware.
bool braid_check(const ShuffleContext& ctx, const std::vector<Rat>& labels);

// Exact rational-function identities behind the kernel:
//   h(z) h(1/z) = 1 and the 2x2 unitarity of the swap/stay block.
bool kernel_symmetry_check(const ZetaData& zd);
// swap = q^{1-g} xi_circ and stay = q^{1-g}(xi - q^{-1} xi_circ), exactly.
bool kernel_factor_identities(const ZetaData& zd);

}  // namespace circlehall
