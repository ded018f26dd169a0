#pragma once
#include <algorithm>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circlehall/circle.hpp"
#include "circlehall/gfq.hpp"

namespace circlehall {

// Iso class of a torsion object: a finite multiset of arcs (multisegment).
// Each arc [right-len, right) is a uniserial module whose socle sits at the
// cell just left of the right endpoint; len >= 1 wraps around the circle.
class TorsionObject {
 public:
  TorsionObject() = default;
  explicit TorsionObject(std::vector<Arc> arcs);

  static TorsionObject zero() { return TorsionObject(); }
  // Segment with right endpoint i/n and length j/n cells (one-based i).
  static TorsionObject segment(long long n, long long i, long long j);

  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_zero() const { return arcs_.empty(); }
  long long denominator() const;  // minimal n supporting all arcs
  StepFunction dim_function() const;
  long long total_dim(long long n) const;  // dimension over F_q of the rep at level n

  // Socle cell indices at level n (cell = n*right - 1 mod n), one per arc.
  std::vector<long long> socle_cells(long long n) const;
  bool socle_square_free(long long n) const;

  bool operator==(const TorsionObject& o) const { return arcs_ == o.arcs_; }
  bool operator<(const TorsionObject& o) const {
    return std::lexicographical_compare(arcs_.begin(), arcs_.end(), o.arcs_.begin(), o.arcs_.end());
  }
  std::string to_string() const;

 private:
  std::vector<Arc> arcs_;  // sorted
};

// Nilpotent representation of the cyclic quiver with n vertices over F_q.
// Internal vertex v in 0..n-1 is the cell [v/n,(v+1)/n); the arrow at v maps
// V_v -> V_{v+1 mod n}.
struct QuiverRep {
  const GFq* field = nullptr;
  long long n = 0;
  std::vector<int> dims;       // size n
  std::vector<MatFq> maps;     // maps[v]: dims[v+1] x dims[v]

  bool is_nilpotent() const;
  // Path matrix V_v -> V_{v+len}: composite of len arrows starting at v.
  MatFq path(long long v, long long len) const;
};

// Matrix model of a multisegment at level n.
QuiverRep build_rep(const GFq& f, long long n, const TorsionObject& m);

// Multisegment of a nilpotent representation, from path ranks.
TorsionObject classify_rep(const QuiverRep& r);

// All multisegments with the given dimension step function, each once,
// in a canonical deterministic order.
std::vector<TorsionObject> enumerate_objects(long long n, const StepFunction& d);

struct AutEnd {
  long long end_dim = 0;
  Int aut_order = 0;
};

// End(M) dimension by linear algebra; |Aut(M)| by exhaustive scan over the
// q^end_dim endomorphisms. Throws bound_exceeded above the scan bound.
AutEnd aut_and_end(const TorsionObject& m, long long n, int q, long long max_end_dim = 24);

}  // namespace circlehall
