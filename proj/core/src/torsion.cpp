#include "circlehall/torsion.hpp"

#include <algorithm>
#include <sstream>

namespace circlehall {

TorsionObject::TorsionObject(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
}

TorsionObject TorsionObject::segment(long long n, long long i, long long j) {
  if (j <= 0) throw precondition_error("segment length must be positive");
  return TorsionObject({Arc(CirclePoint(Rat(i, n)), Rat(j, n))});
}

long long TorsionObject::denominator() const {
  Int d(1);
  for (const auto& a : arcs_) d = lcm_int(d, Int(a.denominator()));
  return to_ll(d);
}

StepFunction TorsionObject::dim_function() const {
  StepFunction f = StepFunction::zero();
  for (const auto& a : arcs_) f = f + StepFunction::indicator(a);
  return f;
}

long long TorsionObject::total_dim(long long n) const {
  long long t = 0;
  for (const auto& a : arcs_) {
    Rat cells = a.len * n;
    t += to_ll(rat_num(cells));  // len has denominator dividing n
  }
  return t;
}

std::vector<long long> TorsionObject::socle_cells(long long n) const {
  std::vector<long long> out;
  for (const auto& a : arcs_) {
    Rat r = a.right.value() * n;
    long long i = to_ll(rat_num(r));  // right endpoint i/n
    out.push_back(((i - 1) % n + n) % n);
  }
  return out;
}

bool TorsionObject::socle_square_free(long long n) const {
  auto s = socle_cells(n);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::string TorsionObject::to_string() const {
  if (arcs_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < arcs_.size(); ++i) os << (i ? "+" : "") << arcs_[i].to_string();
  return os.str();
}

bool QuiverRep::is_nilpotent() const {
  for (long long v = 0; v < n; ++v) {
    MatFq loop = path(v, n);
    MatFq power = loop;
    for (int i = 1; i < dims[static_cast<size_t>(v)]; ++i) power = power * loop;
    if (dims[static_cast<size_t>(v)] > 0 && !power.is_zero()) return false;
  }
  return true;
}

MatFq QuiverRep::path(long long v, long long len) const {
  long long start = ((v % n) + n) % n;
  MatFq acc = MatFq::identity(*field, dims[static_cast<size_t>(start)]);
  for (long long t = 0; t < len; ++t) {
    long long at = (start + t) % n;
    acc = maps[static_cast<size_t>(at)] * acc;
  }
  return acc;
}

QuiverRep build_rep(const GFq& f, long long n, const TorsionObject& m) {
  QuiverRep r;
  r.field = &f;
  r.n = n;
  std::vector<long long> d = m.dim_function().values_at(n);
  r.dims.assign(static_cast<size_t>(n), 0);
  for (long long v = 0; v < n; ++v) r.dims[static_cast<size_t>(v)] = static_cast<int>(d[static_cast<size_t>(v)]);
  for (long long v = 0; v < n; ++v)
    r.maps.emplace_back(f, r.dims[static_cast<size_t>((v + 1) % n)], r.dims[static_cast<size_t>(v)]);

  // Fill one chain per arc: basis slot at each vertex, arrows shift along it.
  std::vector<int> used(static_cast<size_t>(n), 0);
  for (const auto& arc : m.arcs()) {
    Rat rn = arc.right.value() * n;
    long long i = to_ll(rat_num(rn));
    long long j = to_ll(rat_num(arc.len * n));
    long long socle = ((i - 1) % n + n) % n;
    long long top = ((i - j) % n + n) % n;
    // chain positions: top, top+1, ..., top+j-1 == socle
    std::vector<int> slot(static_cast<size_t>(j));
    for (long long t = 0; t < j; ++t) {
      long long v = (top + t) % n;
      slot[static_cast<size_t>(t)] = used[static_cast<size_t>(v)]++;
    }
    (void)socle;
    for (long long t = 0; t + 1 < j; ++t) {
      long long v = (top + t) % n;
      r.maps[static_cast<size_t>(v)].set(slot[static_cast<size_t>(t + 1)], slot[static_cast<size_t>(t)], 1);
    }
  }
  return r;
}

TorsionObject classify_rep(const QuiverRep& r) {
  if (!r.is_nilpotent()) throw precondition_error("representation is not nilpotent");
  long long n = r.n;
  long long total = 0;
  for (int d : r.dims) total += d;
  if (total == 0) return TorsionObject::zero();
  long long maxlen = total;

  // N[v][l] = rank of the length-l path map starting at v.
  std::vector<std::vector<long long>> N(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(maxlen) + 2, 0));
  for (long long v = 0; v < n; ++v) {
    MatFq acc = MatFq::identity(*r.field, r.dims[static_cast<size_t>(v)]);
    N[static_cast<size_t>(v)][0] = r.dims[static_cast<size_t>(v)];
    for (long long l = 1; l <= maxlen + 1; ++l) {
      acc = r.maps[static_cast<size_t>((v + l - 1) % n)] * acc;
      N[static_cast<size_t>(v)][static_cast<size_t>(l)] = acc.rank();
    }
  }
  auto c = [&](long long v, long long l) -> long long {
    long long vv = ((v % n) + n) % n;
    if (l > maxlen) return 0;
    return N[static_cast<size_t>(vv)][static_cast<size_t>(l)] - N[static_cast<size_t>(vv)][static_cast<size_t>(l + 1)];
  };

  std::vector<Arc> arcs;
  for (long long s = 0; s < n; ++s) {     // socle cell
    for (long long j = 1; j <= maxlen; ++j) {  // length
      long long mult = c(s - j + 1, j - 1) - c(s - j, j);
      for (long long t = 0; t < mult; ++t)
        arcs.emplace_back(CirclePoint(Rat(s + 1, n)), Rat(j, n));
    }
  }
  return TorsionObject(std::move(arcs));
}

namespace {

struct ArcSpec {
  long long i, l;  // right endpoint i/n, length l/n
};

void enumerate_rec(long long n, const std::vector<ArcSpec>& arcs, size_t from,
                   std::vector<long long>& budget, std::vector<Arc>& cur,
                   std::vector<TorsionObject>& out) {
  bool empty = true;
  for (long long b : budget)
    if (b != 0) {
      empty = false;
      break;
    }
  if (empty) {
    out.emplace_back(cur);
    return;
  }
  for (size_t id = from; id < arcs.size(); ++id) {
    auto [i, l] = arcs[id];
    // subtract the wrapped indicator; prune if any cell goes negative
    bool ok = true;
    std::vector<long long> nb = budget;
    for (long long t = 1; t <= l && ok; ++t) {
      long long cell = ((i - t) % n + n) % n;
      if (--nb[static_cast<size_t>(cell)] < 0) ok = false;
    }
    if (!ok) continue;
    cur.emplace_back(CirclePoint(Rat(i, n)), Rat(l, n));
    std::swap(budget, nb);
    enumerate_rec(n, arcs, id, budget, cur, out);
    std::swap(budget, nb);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TorsionObject> enumerate_objects(long long n, const StepFunction& d) {
  if (!d.nonnegative()) throw precondition_error("dimension function must be nonnegative");
  if (n % d.denominator() != 0) throw precondition_error("dimension not at denominator n");
  std::vector<long long> budget = d.values_at(n);
  std::vector<TorsionObject> out;
  long long total = 0;
  for (long long x : budget) total += x;
  if (total == 0) {
    out.push_back(TorsionObject::zero());
    return out;
  }
  std::vector<ArcSpec> arcs;
  for (long long i = 1; i <= n; ++i)
    for (long long l = 1; l <= total; ++l) arcs.push_back({i, l});
  std::vector<Arc> cur;
  enumerate_rec(n, arcs, 0, budget, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

AutEnd aut_and_end(const TorsionObject& m, long long n, int q, long long max_end_dim) {
  const GFq& f = GFq::get(q);
  QuiverRep r = build_rep(f, n, m);

  // Variables: entries of phi_v in End(V_v); equations: phi_{v+1} x_v = x_v phi_v.
  std::vector<int> var_offset(static_cast<size_t>(n) + 1, 0);
  for (long long v = 0; v < n; ++v)
    var_offset[static_cast<size_t>(v) + 1] =
        var_offset[static_cast<size_t>(v)] + r.dims[static_cast<size_t>(v)] * r.dims[static_cast<size_t>(v)];
  int nvars = var_offset[static_cast<size_t>(n)];
  int neqs = 0;
  for (long long v = 0; v < n; ++v)
    neqs += r.dims[static_cast<size_t>((v + 1) % n)] * r.dims[static_cast<size_t>(v)];

  MatFq sys(f, std::max(neqs, 1), std::max(nvars, 1));
  int eq = 0;
  for (long long v = 0; v < n; ++v) {
    long long w = (v + 1) % n;
    int dv = r.dims[static_cast<size_t>(v)], dw = r.dims[static_cast<size_t>(w)];
    const MatFq& x = r.maps[static_cast<size_t>(v)];
    // (phi_w x - x phi_v)_{a,b} = 0 for a < dw, b < dv
    for (int a = 0; a < dw; ++a)
      for (int b = 0; b < dv; ++b) {
        for (int k = 0; k < dw; ++k) {  // phi_w[a][k] * x[k][b]
          uint8_t cthis = x.at(k, b);
          if (cthis)
            sys.set(eq, var_offset[static_cast<size_t>(w)] + a * dw + k,
                    f.add(sys.at(eq, var_offset[static_cast<size_t>(w)] + a * dw + k), cthis));
        }
        for (int k = 0; k < dv; ++k) {  // - x[a][k] * phi_v[k][b]
          uint8_t cthis = x.at(a, k);
          if (cthis)
            sys.set(eq, var_offset[static_cast<size_t>(v)] + k * dv + b,
                    f.sub(sys.at(eq, var_offset[static_cast<size_t>(v)] + k * dv + b), cthis));
        }
        ++eq;
      }
  }

  AutEnd out;
  if (nvars == 0) {
    out.end_dim = 0;
    out.aut_order = 1;
    return out;
  }
  MatFq basis = sys.null_space();  // nvars x e
  out.end_dim = basis.cols();
  if (out.end_dim > max_end_dim)
    throw bound_exceeded("endomorphism scan bound exceeded (end_dim " +
                         std::to_string(out.end_dim) + ")");

  // Count invertible endomorphisms: phi invertible iff every block is.
  Int count = 0;
  std::vector<uint8_t> coef(static_cast<size_t>(out.end_dim), 0);
  std::vector<uint8_t> phi(static_cast<size_t>(nvars));
  while (true) {
    for (int i = 0; i < nvars; ++i) {
      uint8_t acc = 0;
      for (int j = 0; j < out.end_dim; ++j)
        if (coef[static_cast<size_t>(j)]) acc = f.add(acc, f.mul(basis.at(i, j), coef[static_cast<size_t>(j)]));
      phi[static_cast<size_t>(i)] = acc;
    }
    bool inv = true;
    for (long long v = 0; v < n && inv; ++v) {
      int dv = r.dims[static_cast<size_t>(v)];
      if (dv == 0) continue;
      MatFq block(f, dv, dv);
      for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dv; ++b)
          block.set(a, b, phi[static_cast<size_t>(var_offset[static_cast<size_t>(v)] + a * dv + b)]);
      if (!block.invertible()) inv = false;
    }
    if (inv) ++count;
    // next coefficient vector
    int pos = 0;
    while (pos < out.end_dim) {
      if (++coef[static_cast<size_t>(pos)] < f.q()) break;
      coef[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == out.end_dim) break;
  }
  out.aut_order = count;
  return out;
}

}  // namespace circlehall
