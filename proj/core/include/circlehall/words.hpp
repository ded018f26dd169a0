#pragma once

#include <string>
#include <vector>

#include "circlehall/hall.hpp"

namespace circlehall {

enum class GenKind { E, F, K, Kinv };

// Interval generator of the presented quantum group. E/F intervals must be
// strict (length < 1); K may be any interval including the full circle.
struct GeneratorSymbol {
  GenKind kind;
  Arc interval;

  GeneratorSymbol(GenKind k, Arc a) : kind(k), interval(std::move(a)) {
    if ((kind == GenKind::E || kind == GenKind::F) && !interval.is_strict())
      throw precondition_error("E/F generators require a strict interval");
  }
  std::string to_string() const;
};

// Normal word at level n: unit-cell E letters, a K-exponent lattice vector,
// unit-cell F letters. Letters are one-based cell indices 1..n; the cell
// with right endpoint i/n carries index i.
struct NormalWord {
  std::vector<int> e_word;
  std::vector<long long> k;  // size n
  std::vector<int> f_word;
  auto operator<=>(const NormalWord&) const = default;
};

struct DoubleElement {
  long long n = 1;
  int q = 2;
  std::map<NormalWord, Scalar> terms;

  static DoubleElement zero(long long n, int q) { return DoubleElement{n, q, {}}; }
  static DoubleElement one(long long n, int q);

  DoubleElement operator+(const DoubleElement& o) const;
  DoubleElement operator-(const DoubleElement& o) const;
  DoubleElement operator*(const DoubleElement& o) const;
  DoubleElement scaled(const Scalar& c) const;
  void prune();
  bool is_syntactically_zero() const;

  // E-degree, F-degree and K-offset grading (conserved by straightening).
  std::vector<long long> grading() const;
  std::string to_string() const;
};

// Expansion of one generator into unit-cell letters at level n via the join
// relations. K expands additively into its lattice vector.
DoubleElement chevalley_expand(const GeneratorSymbol& g, long long n, int q);

// Normal form of an arbitrary word of generators (E-K-F ordering).
DoubleElement straighten(const std::vector<GeneratorSymbol>& word, long long n, int q);

// Hall-model image of the E-only part: E_i -> v^{1/2} 1_{S_i}, products via
// the Hall product. Words with F letters are rejected.
HallElement evaluate_positive_part(const DoubleElement& x, const Bounds& b = {});
// F-only mirror: F-words evaluated through the same underlying algebra.
HallElement evaluate_negative_part(const DoubleElement& x, const Bounds& b = {});

// Semantic equality of double elements: per K-component, the U+ (x) U-
// tensor is evaluated in the Hall model on both sides.
bool double_equal(const DoubleElement& a, const DoubleElement& b, const Bounds& bounds = {});

enum class RelationFamily { DJ, Join, Nest, DisjointNest, EFCommutator, KJoin, KCommute };

RelationFamily relation_family_from_string(const std::string& s);
std::string relation_family_to_string(RelationFamily f);

struct RelationCertificate {
  bool holds = false;
  std::string family;
  std::string lhs, rhs;
};

// Checks one relation instance. E/F-only families are evaluated in the Hall
// model; mixed families go through straighten with Hall-backed equality.
RelationCertificate verify_relation(RelationFamily family, const Arc& j1, const Arc& j2,
                                    long long n, int q, const Bounds& b = {});

// All instances of every family over intervals at denominator n, E side,
// F side and mixed. Returns the number of instances checked; throws on the
// first failure when `collect` is null, else records failures.
long long verify_all_relations(long long n, int q, const Bounds& b,
                               std::vector<RelationCertificate>* failures = nullptr,
                               int threads = 1);

// One component of the twisted coproduct of a generator at a cut point.
// For E_{[a,b)} at a < c < b: v^{-1/2}(v - v^{-1}) E_{[a,c)} K_{[c,b)} (x) E_{[c,b)};
// boundary cuts c = a, c = b give K (x) E and E (x) 1.
struct GeneratorCoproductTerm {
  Scalar coeff;
  HallElement left;   // carries K-exponent
  HallElement right;
};
GeneratorCoproductTerm coproduct_generator_component(const GeneratorSymbol& g, const Rat& cut,
                                                     long long n, int q);

// Parse "E[0,1/2)", "F[1/3,2/3)", "K[0,1)", "K^-1[0,1/2)" words.
std::vector<GeneratorSymbol> parse_word(const std::string& text);

}  // namespace circlehall
