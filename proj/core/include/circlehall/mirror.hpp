#pragma once

#include "circlehall/hall.hpp"

namespace circlehall {

// Interval sheaf on the circle in the open-closed convention: (a,b] on the
// cover with b - a > 0, translation-normalized so b lies in [0,1).
struct MirrorInterval {
  Rat a, b;

  MirrorInterval() : a(0), b(0) {}
  MirrorInterval(const Rat& left, const Rat& right);

  Rat length() const { return b - a; }
  bool operator==(const MirrorInterval& o) const { return a == o.a && b == o.b; }
  bool operator<(const MirrorInterval& o) const { return std::tie(b, a) < std::tie(o.b, o.a); }
  std::string to_string() const;

  // Endpoint-preserving dictionary (a,b] <-> [a,b).
  Arc to_arc() const { return Arc(CirclePoint(b), length()); }
  static MirrorInterval from_arc(const Arc& arc);
};

struct MirrorObject {
  std::vector<MirrorInterval> parts;  // sorted

  MirrorObject() = default;
  explicit MirrorObject(std::vector<MirrorInterval> p);
  bool operator==(const MirrorObject& o) const { return parts == o.parts; }
  bool operator<(const MirrorObject& o) const { return parts < o.parts; }
  TorsionObject to_torsion() const;
  std::string to_string() const;
};

struct HomExt {
  long long hom = 0;
  long long ext1 = 0;
};

// Candidate combinatorial rule, summed over integer translates of B:
//   Hom((a,b], (c,d]) = 1  iff  c <= a < d <= b
//   Ext1((a,b], (c,d]) = 1 iff  a < c <= b < d.
// Additive in direct sums.
HomExt hom_ext_dims(const MirrorInterval& A, const MirrorInterval& B);
HomExt hom_ext_dims(const MirrorObject& A, const MirrorObject& B);
// Line variant (no translates): intervals inside [0,1], type-A quiver case.
HomExt hom_ext_dims_line(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2);

// Twisted Hall product of two interval generators: supports the split sum and,
// when ext1 = 1, the glued middle.
struct MirrorElement {
  int q = 2;
  std::map<MirrorObject, Scalar> terms;
  void prune();
  std::string to_string() const;
};
MirrorElement mirror_hall_product(const MirrorInterval& j1, const MirrorInterval& j2, int q);

// Structure-constant comparison against the quiver model at level n, plus the
// relation families evaluated on the mirror side.
struct MirrorCompareReport {
  bool match = true;
  long long pairs_checked = 0;
  long long relations_checked = 0;
  std::string first_mismatch;
};
MirrorCompareReport compare_with_quiver(long long n, int q, const Bounds& b = {});

// The D-type boundary case table (graded Hom dimensions by degree).
struct GradedDims {
  long long h0 = 0;
  long long h1 = 0;
};
enum class DTypeCase { T, Y, V, Tp, Yp, Vp };
DTypeCase dtype_case_from_string(const std::string& s);
// Cases T/V ignore (a,b); case Y compares a and b. Two entries are returned
// for case T (the two directions); others fill only the first.
std::pair<GradedDims, GradedDims> dtype_hom_ext(DTypeCase c, const Rat& a, const Rat& b);

}  // namespace circlehall
