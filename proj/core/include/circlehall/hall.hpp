#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>

#include "circlehall/scalar.hpp"
#include "circlehall/torsion.hpp"

namespace circlehall {

// Enumeration limits. total_dim is the hard cap on the dimension (over F_q at
// the ambient level) of any object fed to the subobject/extension scans.
struct Bounds {
  long long total_dim = 6;
  long long max_end_dim = 24;

  static Bounds defaults_for(int q) {
    Bounds b;
    b.total_dim = q <= 2 ? 6 : (q == 3 ? 5 : 4);
    return b;
  }
  static Bounds with_total(long long t) {
    Bounds b;
    b.total_dim = t;
    return b;
  }
};

// Structure constants for one graded piece: all objects R of a fixed
// dimension function, with g[r][(M, N)] = #{N' <= R : N' ~ N, R/N' ~ M}.
struct HallTable {
  std::vector<TorsionObject> objects;
  std::map<TorsionObject, size_t> index;
  std::vector<std::map<std::pair<TorsionObject, TorsionObject>, long long>> g;
};

// Shared memo for Hall tables, Ext data and automorphism counts, keyed by
// (n, q, dim). Concurrent readers, exclusive writers; results deterministic.
class HallCache {
 public:
  static HallCache& global();

  const HallTable& table(long long n, int q, const StepFunction& d, const Bounds& b);
  AutEnd aut(long long n, int q, const TorsionObject& m, const Bounds& b);

  // Optional persistence root (CIRCLEHALL_CACHE_DIR); loaded lazily.
  void set_directory(std::string dir) { dir_ = std::move(dir); }

 private:
  std::unique_ptr<HallTable> load_table_file(const std::string& path, const std::string& key);
  void save_table_file(const std::string& path, const std::string& key, const HallTable& t);

  std::shared_mutex mu_;
  std::map<std::string, std::unique_ptr<HallTable>> tables_;
  std::map<std::string, AutEnd> auts_;
  std::string dir_;
};

// Element of the twisted torsion Hall algebra at level n over F_q: a finitely
// supported Scalar combination of iso classes, with an optional K-exponent.
struct HallElement {
  long long n = 1;
  int q = 2;
  std::map<TorsionObject, Scalar> terms;
  std::optional<StepFunction> kexp;

  static HallElement zero(long long n, int q) { return HallElement{n, q, {}, std::nullopt}; }
  static HallElement unit(long long n, int q);
  static HallElement characteristic(long long n, int q, const TorsionObject& m, Scalar c);

  bool is_zero() const;
  HallElement operator+(const HallElement& o) const;
  HallElement operator-(const HallElement& o) const;
  HallElement scaled(const Scalar& c) const;
  bool operator==(const HallElement& o) const;

  void prune();
  std::string to_string() const;
};

// Exact Hall number g^R_{M,N} via exhaustive subobject enumeration.
long long hall_number(const TorsionObject& R, const TorsionObject& M, const TorsionObject& N,
                      long long n, int q, const Bounds& b = {});

// Twisted product: (x y)(R) = sum v^{<M,N>} g^R_{M,N} x(M) y(N), with
// K-exponents folded through k_a 1_F = v^{(a,dim F)} 1_F k_a.
HallElement hall_product(const HallElement& x, const HallElement& y, const Bounds& b = {});

// One graded component of the twisted coproduct: pairs (M,N) with
// dim M = alpha, dim N = beta; the left tensor factor implicitly carries
// k_beta.
struct TensorComponent {
  long long n = 1;
  int q = 2;
  StepFunction alpha, beta;
  std::map<std::pair<TorsionObject, TorsionObject>, Scalar> terms;

  bool is_zero() const;
  bool operator==(const TensorComponent& o) const;
};

TensorComponent coproduct_component(const HallElement& x, const StepFunction& alpha,
                                    const StepFunction& beta, const Bounds& b = {});

// Green pairing (1_M k_a, 1_N k_b) = delta_{M,N} |Aut M|^{-1} v^{(a,b)}.
Scalar green_pairing(const HallElement& x, const HallElement& y, const Bounds& b = {});

// (x (x) y, component) — pairing of a pure tensor against a coproduct slice.
Scalar pair_tensor(const HallElement& x, const HallElement& y, const TensorComponent& t,
                   const Bounds& b = {});

// Level change n -> kn: arcs are unchanged as subsets of the circle.
HallElement omega_pullback(const HallElement& x, long long target_n);

// Central elements: c_r = sum over square-free-socle objects of dim r*delta of
// (-1)^{dim End} |Aut| 1_F; z_r = r c_r - sum_{l<r} z_l c_{r-l}.
HallElement central_c(long long r, long long n, int q, const Bounds& b = {});
HallElement central_z(long long r, long long n, int q, const Bounds& b = {});

struct CentralityReport {
  bool central = true;
  std::optional<TorsionObject> witness;
};

// Checks [x, 1_M] = 0 for every M with dim <= bound (componentwise at level n).
CentralityReport is_central(const HallElement& x, const StepFunction& dim_bound,
                            const Bounds& b = {});

// Minimal level at which x is supported.
long long valuation(const HallElement& x);

}  // namespace circlehall
