#include "circlehall/hall.hpp"

#include <mutex>
#include <fstream>
#include <json.hpp>
#include <algorithm>
#include <sstream>

namespace circlehall {

namespace {

std::string dim_key(long long n, int q, const StepFunction& d) {
  std::ostringstream os;
  os << n << "|" << q << "|" << d.to_string();
  return os.str();
}

std::string key_filename(const std::string& key) {
  // stable content hash, hex-encoded
  uint64_t h = 1469598103934665603ull;
  for (char c : key) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h << ".json";
  return os.str();
}

// All subspace tuples (U_v) of R with x_v(U_v) <= U_{v+1}, visited once each.
// Calls visit(U) for every subrepresentation.
void for_each_subrep(const QuiverRep& r,
                     const std::vector<std::vector<MatFq>>& spaces_per_vertex,
                     const std::function<void(const std::vector<const MatFq*>&)>& visit) {
  long long n = r.n;
  std::vector<const MatFq*> choice(static_cast<size_t>(n), nullptr);
  const GFq& f = *r.field;

  // Image rows of `space` under arrow v all lie in the row span of `target`?
  auto maps_into = [&](const MatFq& space, long long v, const MatFq& target) {
    int dout = r.dims[static_cast<size_t>((v + 1) % n)];
    for (int i = 0; i < space.rows(); ++i) {
      std::vector<uint8_t> vec(static_cast<size_t>(dout), 0);
      for (int out = 0; out < dout; ++out) {
        uint8_t acc = 0;
        for (int in = 0; in < space.cols(); ++in) {
          uint8_t m = r.maps[static_cast<size_t>(v)].at(out, in);
          if (m && space.at(i, in)) acc = f.add(acc, f.mul(m, space.at(i, in)));
        }
        vec[static_cast<size_t>(out)] = acc;
      }
      if (!MatFq::in_row_span(target, vec)) return false;
    }
    return true;
  };

  std::function<void(long long)> rec = [&](long long v) {
    if (v == n) {
      if (maps_into(*choice[static_cast<size_t>(n - 1)], n - 1, *choice[0])) visit(choice);
      return;
    }
    for (const MatFq& cand : spaces_per_vertex[static_cast<size_t>(v)]) {
      if (v > 0 && !maps_into(*choice[static_cast<size_t>(v - 1)], v - 1, cand)) continue;
      choice[static_cast<size_t>(v)] = &cand;
      rec(v + 1);
    }
  };
  rec(0);
}

}  // namespace

HallCache& HallCache::global() {
  static HallCache cache;
  return cache;
}

std::unique_ptr<HallTable> HallCache::load_table_file(const std::string& path,
                                                      const std::string& key) {
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    nlohmann::json j;
    in >> j;
    if (j.at("key").get<std::string>() != key) return nullptr;
    auto tab = std::make_unique<HallTable>();
    for (const auto& jo : j.at("objects")) {
      std::vector<Arc> arcs;
      for (const auto& ja : jo) {
        arcs.emplace_back(CirclePoint(rat_from_string(ja.at("right").get<std::string>())),
                          rat_from_string(ja.at("len").get<std::string>()));
      }
      tab->objects.emplace_back(std::move(arcs));
    }
    for (size_t i = 0; i < tab->objects.size(); ++i) tab->index[tab->objects[i]] = i;
    tab->g.resize(tab->objects.size());
    auto parse_obj = [](const nlohmann::json& jo) {
      std::vector<Arc> arcs;
      for (const auto& ja : jo)
        arcs.emplace_back(CirclePoint(rat_from_string(ja.at("right").get<std::string>())),
                          rat_from_string(ja.at("len").get<std::string>()));
      return TorsionObject(std::move(arcs));
    };
    for (const auto& je : j.at("g")) {
      size_t r = je.at("r").get<size_t>();
      long long count = je.at("count").get<long long>();
      tab->g.at(r)[{parse_obj(je.at("m")), parse_obj(je.at("n"))}] = count;
    }
    return tab;
  } catch (const std::exception&) {
    return nullptr;  // corrupt cache entry, recompute
  }
}

void HallCache::save_table_file(const std::string& path, const std::string& key,
                                const HallTable& t) {
  auto dump_obj = [](const TorsionObject& obj) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : obj.arcs())
      arcs.push_back({{"right", rat_to_string(a.right.value())}, {"len", rat_to_string(a.len)}});
    return arcs;
  };
  nlohmann::json objects = nlohmann::json::array();
  for (const auto& obj : t.objects) objects.push_back(dump_obj(obj));
  nlohmann::json g = nlohmann::json::array();
  for (size_t r = 0; r < t.g.size(); ++r)
    for (const auto& [mn, count] : t.g[r])
      g.push_back({{"r", r}, {"m", dump_obj(mn.first)}, {"n", dump_obj(mn.second)}, {"count", count}});
  nlohmann::json out{{"key", key}, {"objects", objects}, {"g", g}};
  std::ofstream os(path);
  if (os) os << out.dump();
}

const HallTable& HallCache::table(long long n, int q, const StepFunction& d, const Bounds& b) {
  std::string key = dim_key(n, q, d);
  {
    std::shared_lock lock(mu_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return *it->second;
  }
  if (!dir_.empty()) {
    if (auto loaded = load_table_file(dir_ + "/" + key_filename(key), key)) {
      std::unique_lock lock(mu_);
      auto [it, inserted] = tables_.emplace(key, std::move(loaded));
      return *it->second;
    }
  }
  std::vector<long long> dvals = d.values_at(n);
  long long dtot = 0;
  for (long long x : dvals) dtot += x;
  if (dtot > b.total_dim)
    throw bound_exceeded("enumeration bound exceeded: total dim " + std::to_string(dtot) +
                         " > " + std::to_string(b.total_dim));

  auto tab = std::make_unique<HallTable>();
  tab->objects = enumerate_objects(n, d);
  for (size_t i = 0; i < tab->objects.size(); ++i) tab->index[tab->objects[i]] = i;
  tab->g.resize(tab->objects.size());

  const GFq& f = GFq::get(q);

  // Precompute subspace lists per dimension once.
  std::map<int, std::vector<MatFq>> spaces;
  for (long long v = 0; v < n; ++v) {
    int dv = static_cast<int>(dvals[static_cast<size_t>(v)]);
    if (!spaces.count(dv)) spaces[dv] = all_subspaces(f, dv);
  }

  // Signature cache: path-rank profile -> iso class.
  std::map<std::vector<long long>, TorsionObject> sig_cache;
  auto object_of_ranks = [&](const std::vector<long long>& sig, long long L) -> const TorsionObject& {
    auto it = sig_cache.find(sig);
    if (it != sig_cache.end()) return it->second;
    // invert: sig layout: for v in 0..n-1, for l in 0..L: rank
    auto N = [&](long long v, long long l) -> long long {
      long long vv = ((v % n) + n) % n;
      if (l > L) return 0;
      return sig[static_cast<size_t>(vv * (L + 1) + l)];
    };
    auto c = [&](long long v, long long l) -> long long { return N(v, l) - N(v, l + 1); };
    std::vector<Arc> arcs;
    for (long long s = 0; s < n; ++s)
      for (long long j = 1; j <= L; ++j) {
        long long mult = c(s - j + 1, j - 1) - c(s - j, j);
        for (long long t = 0; t < mult; ++t) arcs.emplace_back(CirclePoint(Rat(s + 1, n)), Rat(j, n));
      }
    return sig_cache.emplace(sig, TorsionObject(std::move(arcs))).first->second;
  };

  for (size_t ridx = 0; ridx < tab->objects.size(); ++ridx) {
    QuiverRep rep = build_rep(f, n, tab->objects[ridx]);
    long long L = dtot;

    // Path matrices of the ambient rep.
    std::vector<std::vector<MatFq>> paths(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v) {
      paths[static_cast<size_t>(v)].reserve(static_cast<size_t>(L) + 1);
      MatFq acc = MatFq::identity(f, rep.dims[static_cast<size_t>(v)]);
      paths[static_cast<size_t>(v)].push_back(acc);
      for (long long l = 1; l <= L; ++l) {
        acc = rep.maps[static_cast<size_t>((v + l - 1) % n)] * acc;
        paths[static_cast<size_t>(v)].push_back(acc);
      }
    }

    std::vector<std::vector<MatFq>> per_vertex(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v)
      per_vertex[static_cast<size_t>(v)] = spaces.at(rep.dims[static_cast<size_t>(v)]);

    auto& out = tab->g[ridx];
    for_each_subrep(rep, per_vertex, [&](const std::vector<const MatFq*>& U) {
      // signatures: sub path ranks and quotient path ranks
      std::vector<long long> sub_sig(static_cast<size_t>(n * (L + 1)), 0);
      std::vector<long long> quo_sig(static_cast<size_t>(n * (L + 1)), 0);
      for (long long v = 0; v < n; ++v) {
        const MatFq& Uv = *U[static_cast<size_t>(v)];
        for (long long l = 0; l <= L; ++l) {
          const MatFq& P = paths[static_cast<size_t>(v)][static_cast<size_t>(l)];
          long long w = (v + l) % n;
          const MatFq& Uw = *U[static_cast<size_t>(w)];
          // rank of P * Uv^T  (image of the subspace)
          MatFq img(f, Uv.rows(), P.rows());
          for (int i = 0; i < Uv.rows(); ++i)
            for (int out_c = 0; out_c < P.rows(); ++out_c) {
              uint8_t acc = 0;
              for (int in_c = 0; in_c < P.cols(); ++in_c) {
                uint8_t m = P.at(out_c, in_c);
                if (m && Uv.at(i, in_c)) acc = f.add(acc, f.mul(m, Uv.at(i, in_c)));
              }
              img.set(i, out_c, acc);
            }
          sub_sig[static_cast<size_t>(v * (L + 1) + l)] = img.rank();
          // quotient rank: rank [P | Uw rows] - rank Uw
          MatFq stacked(f, P.cols() + Uw.rows(), P.rows());
          for (int i = 0; i < P.cols(); ++i)
            for (int j = 0; j < P.rows(); ++j) stacked.set(i, j, P.at(j, i));
          for (int i = 0; i < Uw.rows(); ++i)
            for (int j = 0; j < Uw.cols(); ++j) stacked.set(P.cols() + i, j, Uw.at(i, j));
          quo_sig[static_cast<size_t>(v * (L + 1) + l)] = stacked.rank() - Uw.rows();
        }
      }
      const TorsionObject& sub = object_of_ranks(sub_sig, L);
      const TorsionObject& quo = object_of_ranks(quo_sig, L);
      out[{quo, sub}] += 1;
    });
  }

  if (!dir_.empty()) save_table_file(dir_ + "/" + key_filename(key), key, *tab);
  std::unique_lock lock(mu_);
  auto [it, inserted] = tables_.emplace(key, std::move(tab));
  return *it->second;
}

AutEnd HallCache::aut(long long n, int q, const TorsionObject& m, const Bounds& b) {
  std::string key = dim_key(n, q, m.dim_function()) + "#" + m.to_string();
  {
    std::shared_lock lock(mu_);
    auto it = auts_.find(key);
    if (it != auts_.end()) return it->second;
  }
  AutEnd r = aut_and_end(m, n, q, b.max_end_dim);
  std::unique_lock lock(mu_);
  auts_[key] = r;
  return r;
}

HallElement HallElement::unit(long long n, int q) {
  HallElement e{n, q, {}, std::nullopt};
  e.terms[TorsionObject::zero()] = Scalar::one(q);
  return e;
}

HallElement HallElement::characteristic(long long n, int q, const TorsionObject& m, Scalar c) {
  HallElement e{n, q, {}, std::nullopt};
  e.terms[m] = std::move(c);
  e.prune();
  return e;
}

bool HallElement::is_zero() const {
  for (const auto& [obj, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

void HallElement::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

HallElement HallElement::operator+(const HallElement& o) const {
  if (n != o.n || q != o.q) throw precondition_error("hall element context mismatch");
  if (kexp.has_value() != o.kexp.has_value() ||
      (kexp && !(*kexp == *o.kexp)))
    throw precondition_error("adding elements with different K-exponents");
  HallElement r = *this;
  for (const auto& [obj, c] : o.terms) {
    auto it = r.terms.find(obj);
    if (it == r.terms.end())
      r.terms.emplace(obj, c);
    else
      it->second += c;
  }
  r.prune();
  return r;
}

HallElement HallElement::operator-(const HallElement& o) const {
  return *this + o.scaled(Scalar::of_int(q, -1));
}

HallElement HallElement::scaled(const Scalar& c) const {
  HallElement r = *this;
  for (auto& [obj, coeff] : r.terms) coeff *= c;
  r.prune();
  return r;
}

bool HallElement::operator==(const HallElement& o) const {
  HallElement d = *this - o;
  return d.is_zero();
}

std::string HallElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [obj, c] : terms) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*1_{" << obj.to_string() << "}";
    first = false;
  }
  if (kexp && !kexp->is_zero()) os << " k" << kexp->to_string();
  return os.str();
}

long long hall_number(const TorsionObject& R, const TorsionObject& M, const TorsionObject& N,
                      long long n, int q, const Bounds& b) {
  StepFunction dR = R.dim_function();
  StepFunction sum = M.dim_function() + N.dim_function();
  if (!(dR == sum)) return 0;
  const HallTable& t = HallCache::global().table(n, q, dR.refined(n), b);
  size_t r_idx = t.index.at(R);
  auto git = t.g[r_idx].find({M, N});
  return git == t.g[r_idx].end() ? 0 : git->second;
}

HallElement hall_product(const HallElement& x, const HallElement& y, const Bounds& b) {
  if (x.q != y.q) throw precondition_error("hall product across different q");
  long long n = to_ll(lcm_int(Int(x.n), Int(y.n)));
  HallElement xr = omega_pullback(x, n), yr = omega_pullback(y, n);
  int q = x.q;

  HallElement out = HallElement::zero(n, q);
  // K-exponent of the product; twist v^{(kx, dim N)} per right-hand term.
  StepFunction kx = xr.kexp.value_or(StepFunction::zero());
  StepFunction ky = yr.kexp.value_or(StepFunction::zero());
  StepFunction ksum = kx + ky;
  if (!ksum.is_zero() || xr.kexp || yr.kexp) out.kexp = ksum;

  HallCache& cache = HallCache::global();
  for (const auto& [M, cm] : xr.terms) {
    StepFunction dM = M.dim_function();
    for (const auto& [N, cn] : yr.terms) {
      StepFunction dN = N.dim_function();
      long long twist = interval_euler_form(dM, dN);
      long long ktwist = xr.kexp ? symmetric_interval_euler_form(kx, dN) : 0;
      Scalar coeff = cm * cn * Scalar::v_pow(q, twist + ktwist);
      const HallTable& t = cache.table(n, q, (dM + dN).refined(n), b);
      for (size_t ri = 0; ri < t.objects.size(); ++ri) {
        auto git = t.g[ri].find({M, N});
        if (git == t.g[ri].end()) continue;
        Scalar add = coeff * Scalar::of_int(q, git->second);
        auto it = out.terms.find(t.objects[ri]);
        if (it == out.terms.end())
          out.terms.emplace(t.objects[ri], add);
        else
          it->second += add;
      }
    }
  }
  out.prune();
  return out;
}

namespace {

// Extension classes of M by N (group Ext^1(M,N)) realized as representative
// cocycles phi_v: M_v -> N_{v+1}; returns the middle's iso class per class.
std::vector<TorsionObject> extension_middles(const TorsionObject& M, const TorsionObject& N,
                                             long long n, int q, const Bounds& b) {
  const GFq& f = GFq::get(q);
  QuiverRep a = build_rep(f, n, M);  // quotient
  QuiverRep c = build_rep(f, n, N);  // sub

  // Cocycles C^1 = sum_v Hom(M_v, N_{v+1}); coboundary D: C^0 -> C^1,
  // (D s)_v = c_v s_v - s_{v+1} a_v with s_v: M_v -> N_v.
  int c1_dim = 0, c0_dim = 0;
  std::vector<int> off1(static_cast<size_t>(n) + 1, 0), off0(static_cast<size_t>(n) + 1, 0);
  for (long long v = 0; v < n; ++v) {
    off1[static_cast<size_t>(v) + 1] = off1[static_cast<size_t>(v)] +
        a.dims[static_cast<size_t>(v)] * c.dims[static_cast<size_t>((v + 1) % n)];
    off0[static_cast<size_t>(v) + 1] = off0[static_cast<size_t>(v)] +
        a.dims[static_cast<size_t>(v)] * c.dims[static_cast<size_t>(v)];
  }
  c1_dim = off1[static_cast<size_t>(n)];
  c0_dim = off0[static_cast<size_t>(n)];

  // Matrix of D: rows = C^1 coords, cols = C^0 coords.
  MatFq D(f, std::max(c1_dim, 1), std::max(c0_dim, 1));
  for (long long v = 0; v < n; ++v) {
    long long w = (v + 1) % n;
    int mv = a.dims[static_cast<size_t>(v)];
    int nv = c.dims[static_cast<size_t>(v)];
    int nw = c.dims[static_cast<size_t>(w)];
    int mw = a.dims[static_cast<size_t>(w)];
    // phi_v[i][j]: i < nw (target N_{v+1}), j < mv (source M_v); coordinate
    // off1[v] + i*mv + j.
    // (c_v s_v)[i][j] = sum_k c_v[i][k] s_v[k][j]
    for (int i = 0; i < nw; ++i)
      for (int j = 0; j < mv; ++j) {
        int row = off1[static_cast<size_t>(v)] + i * mv + j;
        for (int k = 0; k < nv; ++k) {
          uint8_t coef = c.maps[static_cast<size_t>(v)].at(i, k);
          if (coef) {
            int col = off0[static_cast<size_t>(v)] + k * mv + j;
            D.set(row, col, f.add(D.at(row, col), coef));
          }
        }
        // (- s_{v+1} a_v)[i][j] = - sum_k s_{v+1}[i][k] a_v[k][j]
        for (int k = 0; k < mw; ++k) {
          uint8_t coef = a.maps[static_cast<size_t>(v)].at(k, j);
          if (coef) {
            int col = off0[static_cast<size_t>(w)] + i * mw + k;
            D.set(row, col, f.sub(D.at(row, col), coef));
          }
        }
      }
  }

  // Complement of im(D) in C^1: coordinates not reachable; use RREF of D^T
  // row space and extend to a basis of C^1.
  // Simpler: column space basis of D, then choose complement coordinates.
  MatFq Dt(f, std::max(c0_dim, 1), std::max(c1_dim, 1));
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) Dt.set(j, i, D.at(i, j));
  int rkD = rref(Dt);  // rows of Dt now span im(D) in RREF
  int e = c1_dim - rkD;
  if (e > 26) throw bound_exceeded("Ext enumeration bound exceeded");

  // Complement basis: standard vectors at non-pivot coordinates.
  std::vector<bool> pivot(static_cast<size_t>(std::max(c1_dim, 1)), false);
  for (int r = 0, ccol = 0; r < rkD; ++r) {
    while (ccol < c1_dim && !Dt.at(r, ccol)) ++ccol;
    if (ccol < c1_dim) pivot[static_cast<size_t>(ccol)] = true;
  }
  std::vector<int> freecoords;
  for (int i = 0; i < c1_dim; ++i)
    if (!pivot[static_cast<size_t>(i)]) freecoords.push_back(i);

  // Assemble middles: X_phi with spaces N_v + M_v and maps [[c, phi],[0, a]].
  std::vector<TorsionObject> middles;
  std::vector<uint8_t> coef(static_cast<size_t>(e), 0);
  while (true) {
    QuiverRep x;
    x.field = &f;
    x.n = n;
    x.dims.resize(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v)
      x.dims[static_cast<size_t>(v)] = c.dims[static_cast<size_t>(v)] + a.dims[static_cast<size_t>(v)];
    std::vector<uint8_t> phi(static_cast<size_t>(std::max(c1_dim, 1)), 0);
    for (int j = 0; j < e; ++j)
      if (coef[static_cast<size_t>(j)])
        phi[static_cast<size_t>(freecoords[static_cast<size_t>(j)])] = coef[static_cast<size_t>(j)];
    for (long long v = 0; v < n; ++v) {
      long long w = (v + 1) % n;
      int nv = c.dims[static_cast<size_t>(v)], nw = c.dims[static_cast<size_t>(w)];
      int mv = a.dims[static_cast<size_t>(v)], mw = a.dims[static_cast<size_t>(w)];
      MatFq mat(f, nw + mw, nv + mv);
      for (int i = 0; i < nw; ++i)
        for (int j = 0; j < nv; ++j) mat.set(i, j, c.maps[static_cast<size_t>(v)].at(i, j));
      for (int i = 0; i < mw; ++i)
        for (int j = 0; j < mv; ++j) mat.set(nw + i, nv + j, a.maps[static_cast<size_t>(v)].at(i, j));
      for (int i = 0; i < nw; ++i)
        for (int j = 0; j < mv; ++j)
          mat.set(i, nv + j, phi[static_cast<size_t>(off1[static_cast<size_t>(v)] + i * mv + j)]);
      x.maps.push_back(std::move(mat));
    }
    middles.push_back(classify_rep(x));
    int pos = 0;
    while (pos < e) {
      if (++coef[static_cast<size_t>(pos)] < f.q()) break;
      coef[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == e) break;
  }
  (void)b;
  return middles;
}

}  // namespace

TensorComponent coproduct_component(const HallElement& x, const StepFunction& alpha,
                                    const StepFunction& beta, const Bounds& b) {
  TensorComponent out;
  out.n = x.n;
  out.q = x.q;
  out.alpha = alpha;
  out.beta = beta;
  if (x.kexp && !x.kexp->is_zero())
    throw precondition_error("coproduct of K-twisted elements not supported");

  std::vector<TorsionObject> Ms = enumerate_objects(x.n, alpha.refined(x.n));
  std::vector<TorsionObject> Ns = enumerate_objects(x.n, beta.refined(x.n));
  for (const auto& M : Ms) {
    for (const auto& N : Ns) {
      auto middles = extension_middles(M, N, x.n, x.q, b);
      Scalar acc = Scalar::zero(x.q);
      for (const auto& X : middles) {
        auto it = x.terms.find(X);
        if (it != x.terms.end()) acc += it->second;
      }
      if (acc.is_zero()) continue;
      long long tw = interval_euler_form(M.dim_function(), N.dim_function());
      // v^{-<M,N>} / |Ext^1(M,N)|; middles.size() = q^e.
      Scalar coeff = acc * Scalar::v_pow(x.q, -tw) *
                     Scalar::of_rat(x.q, Rat(1, static_cast<long long>(middles.size())));
      out.terms[{M, N}] = coeff;
    }
  }
  return out;
}

bool TensorComponent::is_zero() const {
  for (const auto& [k, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

bool TensorComponent::operator==(const TensorComponent& o) const {
  std::map<std::pair<TorsionObject, TorsionObject>, Scalar> diff = terms;
  for (const auto& [k, c] : o.terms) {
    auto it = diff.find(k);
    if (it == diff.end())
      diff[k] = -c;
    else
      it->second -= c;
  }
  for (const auto& [k, c] : diff)
    if (!c.is_zero()) return false;
  return true;
}

Scalar green_pairing(const HallElement& x, const HallElement& y, const Bounds& b) {
  if (x.q != y.q) throw precondition_error("pairing across different q");
  long long n = to_ll(lcm_int(Int(x.n), Int(y.n)));
  HallElement xr = omega_pullback(x, n), yr = omega_pullback(y, n);
  Scalar acc = Scalar::zero(x.q);
  for (const auto& [obj, cx] : xr.terms) {
    auto it = yr.terms.find(obj);
    if (it == yr.terms.end()) continue;
    AutEnd ae = HallCache::global().aut(n, x.q, obj, b);
    acc += cx * it->second * Scalar::of_rat(x.q, Rat(1) / Rat(ae.aut_order));
  }
  long long kk = 0;
  if (xr.kexp && yr.kexp) kk = symmetric_interval_euler_form(*xr.kexp, *yr.kexp);
  return acc * Scalar::v_pow(x.q, kk);
}

Scalar pair_tensor(const HallElement& x, const HallElement& y, const TensorComponent& t,
                   const Bounds& b) {
  // (x (x) y, sum a_{M,N} 1_M k_beta (x) 1_N) with x, y untwisted.
  Scalar acc = Scalar::zero(t.q);
  long long n = t.n;
  for (const auto& [mn, c] : t.terms) {
    const auto& [M, N] = mn;
    HallElement left = HallElement::characteristic(n, t.q, M, Scalar::one(t.q));
    left.kexp = t.beta;
    HallElement right = HallElement::characteristic(n, t.q, N, Scalar::one(t.q));
    acc += c * green_pairing(x, left, b) * green_pairing(y, right, b);
  }
  return acc;
}

HallElement omega_pullback(const HallElement& x, long long target_n) {
  if (target_n % x.n != 0) throw precondition_error("pullback target not a multiple of n");
  HallElement r = x;
  r.n = target_n;
  if (r.kexp) r.kexp = r.kexp->refined(target_n);
  return r;
}

HallElement central_c(long long r, long long n, int q, const Bounds& b) {
  StepFunction delta = StepFunction::constant(1).refined(n).scaled(r);
  HallElement out = HallElement::zero(n, q);
  for (const auto& obj : enumerate_objects(n, delta)) {
    if (!obj.socle_square_free(n)) continue;
    AutEnd ae = HallCache::global().aut(n, q, obj, b);
    Scalar c = Scalar::of_rat(q, Rat(ae.aut_order));
    if (ae.end_dim % 2 == 1) c = -c;
    out.terms[obj] = c;
  }
  out.prune();
  return out;
}

HallElement central_z(long long r, long long n, int q, const Bounds& b) {
  std::vector<HallElement> z;
  z.push_back(HallElement::zero(n, q));  // unused slot 0
  for (long long s = 1; s <= r; ++s) {
    HallElement cs = central_c(s, n, q, b);
    HallElement acc = cs.scaled(Scalar::of_int(q, s));
    for (long long l = 1; l < s; ++l)
      acc = acc - hall_product(z[static_cast<size_t>(l)], central_c(s - l, n, q, b), b);
    z.push_back(acc);
  }
  return z[static_cast<size_t>(r)];
}

CentralityReport is_central(const HallElement& x, const StepFunction& dim_bound, const Bounds& b) {
  CentralityReport rep;
  long long n = x.n;
  std::vector<long long> bvals = dim_bound.values_at(n);
  // Iterate all dim vectors 0 <= d <= bound componentwise.
  std::vector<long long> d(static_cast<size_t>(n), 0);
  while (true) {
    StepFunction dd(n, d);
    for (const auto& M : enumerate_objects(n, dd)) {
      if (M.is_zero()) continue;
      HallElement m = HallElement::characteristic(n, x.q, M, Scalar::one(x.q));
      if (!(hall_product(x, m, b) == hall_product(m, x, b))) {
        rep.central = false;
        rep.witness = M;
        return rep;
      }
    }
    size_t pos = 0;
    while (pos < d.size()) {
      if (++d[pos] <= bvals[pos]) break;
      d[pos] = 0;
      ++pos;
    }
    if (pos == d.size()) break;
  }
  return rep;
}

long long valuation(const HallElement& x) {
  if (x.is_zero()) throw precondition_error("valuation of zero element");
  Int v(1);
  for (const auto& [obj, c] : x.terms)
    if (!c.is_zero()) v = lcm_int(v, Int(obj.denominator()));
  return to_ll(v);
}

}  // namespace circlehall
