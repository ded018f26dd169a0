#pragma once

#include "circlehall/words.hpp"

namespace circlehall {

// Vector in the basis u_y, y rational; finitely supported.
struct RepVector {
  int q = 2;
  std::map<Rat, Scalar> terms;

  static RepVector basis(int q, const Rat& y) {
    RepVector v{q, {}};
    v.terms[y] = Scalar::one(q);
    return v;
  }
  RepVector operator+(const RepVector& o) const;
  RepVector operator-(const RepVector& o) const;
  RepVector scaled(const Scalar& c) const;
  bool is_zero() const;
  void prune();
  bool operator==(const RepVector& o) const;
};

enum class RepVariant { Circle, AffineN, HeisenbergExtended };

// One generator applied to one vector.
//   circle:    F_[a,b) u_y = d_{{b+y},0} v^{1/2} u_{y+b-a}
//              E_[a,b) u_y = d_{{a+y},0} v^{-1/2} u_{y+a-b}
//              K^&        = v^{+-(d_{{b+y},0}-d_{{a+y},0})} u_y
//   affine-n:  same through the unit-cell dictionary u_d <-> u_{d/n}
//   heisenberg-extended: 1_{S_[a,b)} u_y = d_{{b+y},0} v^{-1} u_{y+b-a},
//              K^& = v^{+-(d_{{a+y},0}-d_{{b+y},0})} u_y.
RepVector fund_rep_apply(const GeneratorSymbol& g, const RepVector& v, RepVariant variant, int q);

// Z_r-type shift: u_y -> constant * u_{y+shift}.
RepVector heisenberg_shift_apply(const Scalar& constant, const Rat& shift, const RepVector& v);

// Join-consistent module normalization (E_J = v^{1/2} 1_{S_J} acting by Hecke
// raising); the relation checker runs on this action. On unit cells it is the
// E<->F, K<->K^{-1}, v<->v^{-1} relabeling of fund_rep_apply's circle variant.
RepVector hecke_double_apply(const GeneratorSymbol& g, const RepVector& v, int q);

// Apply a scalar combination of generator words (right-to-left).
struct OperatorWord {
  Scalar coeff;
  std::vector<GeneratorSymbol> word;
};
RepVector apply_operator(const std::vector<OperatorWord>& op, const RepVector& v,
                         RepVariant variant, int q);

// Every relation family instance at denominators <= max_den kills the module:
// returns the number of (instance, basis vector) pairs checked; throws on
// failure. Basis vectors run over a periodicity-complete transversal.
long long fund_rep_check_relations(long long max_den, int q);

// V_n dictionary: the affine-n action on u_d agrees with the circle action on
// u_{d/n} for the unit-cell generators. Returns number of checks.
long long fund_rep_check_lattice_dictionary(long long n, int q);

}  // namespace circlehall
