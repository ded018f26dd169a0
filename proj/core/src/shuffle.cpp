#include "circlehall/shuffle.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

namespace circlehall {

ZetaData::ZetaData(long long g, int qq, IntPoly num) : genus(g), q(qq), numerator(poly_trim(std::move(num))) {
  if (numerator.empty() || numerator[0] != 1) throw precondition_error("Weil numerator needs P(0) = 1");
  if (static_cast<long long>(numerator.size()) - 1 > 2 * genus)
    throw precondition_error("Weil numerator degree exceeds 2g");
  if (!functional_equation_ok())
    std::cerr << "warning: zeta numerator violates the functional equation\n";
}

bool ZetaData::functional_equation_ok() const {
  long long d = 2 * genus;
  IntPoly p = numerator;
  p.resize(static_cast<size_t>(d) + 1, Int(0));
  // p_{2g-i} = q^{g-i} p_i
  for (long long i = 0; i <= d; ++i) {
    Int lhs = p[static_cast<size_t>(d - i)];
    Int rhs = p[static_cast<size_t>(i)];
    long long e = genus - i;
    if (e >= 0) {
      for (long long t = 0; t < e; ++t) rhs *= q;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

RationalFunctionSeries ZetaData::zeta() const {
  IntPoly den = poly_mul({Int(1), Int(-1)}, {Int(1), Int(-q)});
  return RationalFunctionSeries(q, numerator, den);
}

RationalFunctionSeries ZetaData::xi() const {
  // P(z)(q-z) q^{2g} / [ (1-qz) q Q(z) ],  Q(z) = q^{2g} P(z/q).
  IntPoly Q(numerator.size());
  Int scale(1);
  for (long long t = 0; t < 2 * genus; ++t) scale *= q;
  for (size_t i = 0; i < numerator.size(); ++i) {
    Int c = numerator[i] * scale;
    for (size_t t = 0; t < i; ++t) c /= q;
    Q[i] = c;
  }
  IntPoly num = poly_mul(numerator, {Int(q), Int(-1)});
  for (auto& c : num) c *= scale;
  IntPoly den = poly_mul({Int(1), Int(-q)}, Q);
  for (auto& c : den) c *= q;
  return RationalFunctionSeries(q, num, den);
}

RationalFunctionSeries ZetaData::xi_circ() const {
  // xi * (1-z)/(1-z/q) = xi * q(1-z)/(q-z)
  RationalFunctionSeries base = xi();
  IntPoly num = poly_mul(base.num(), {Int(q), Int(-q)});
  IntPoly den = poly_mul(base.den(), {Int(q), Int(-1)});
  return RationalFunctionSeries(q, num, den);
}

RationalFunctionSeries ZetaData::kernel_h() const {
  RationalFunctionSeries base = xi();
  IntPoly num = base.num();
  IntPoly den = base.den();
  if (genus == 0) {
    for (auto& c : num) c *= q;
  } else {
    Int scale(1);
    for (long long t = 0; t < genus - 1; ++t) scale *= q;
    for (auto& c : den) c *= scale;
  }
  return RationalFunctionSeries(q, num, den);
}

RationalFunctionSeries ZetaData::swap_factor() const {
  RationalFunctionSeries h = kernel_h();
  IntPoly num = poly_mul(h.num(), {Int(q), Int(-q)});
  IntPoly den = poly_mul(h.den(), {Int(q), Int(-1)});
  return RationalFunctionSeries(q, num, den);
}

RationalFunctionSeries ZetaData::stay_factor() const {
  // h(z) (1-1/q)/(1-z/q) = h(z) (q-1)/(q-z)
  RationalFunctionSeries h = kernel_h();
  IntPoly num = h.num();
  for (auto& c : num) c *= (q - 1);
  IntPoly den = poly_mul(h.den(), {Int(q), Int(-1)});
  return RationalFunctionSeries(q, num, den);
}

SeriesKind series_kind_from_string(const std::string& s) {
  if (s == "zeta") return SeriesKind::Zeta;
  if (s == "xi") return SeriesKind::Xi;
  if (s == "xi-circ" || s == "xi_circ") return SeriesKind::XiCirc;
  if (s == "kernel" || s == "h") return SeriesKind::KernelH;
  throw parse_error("unknown series kind: " + s);
}

RationalFunctionSeries zeta_series(const ZetaData& zd, SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Zeta: return zd.zeta();
    case SeriesKind::Xi: return zd.xi();
    case SeriesKind::XiCirc: return zd.xi_circ();
    case SeriesKind::KernelH: return zd.kernel_h();
  }
  throw precondition_error("unhandled kind");
}

Rat xi_oracle(const ZetaData& zd, long long s, bool omit_base_point) {
  // Point counts N_d = q^d + 1 - sum alpha_i^d from the numerator roots, via
  // Newton's identities on P; closed points a_d by Moebius inversion; then
  //   xi_s = sum over multisets of closed points of prod (1 - q^{-deg x}).
  if (s < 0) return Rat(0);
  long long maxd = std::max<long long>(1, s);
  // power sums t_d = sum alpha_i^d with P(z) = prod (1 - alpha_i z):
  // write P(z) = 1 + p_1 z + ... ; Newton: t_d = -d p_d - sum_{i<d} t_i p_{d-i}.
  std::vector<Rat> t(static_cast<size_t>(maxd) + 1, Rat(0));
  IntPoly p = zd.numerator;
  p.resize(static_cast<size_t>(2 * zd.genus) + 1, Int(0));
  for (long long d = 1; d <= maxd; ++d) {
    Rat acc = d <= 2 * zd.genus ? Rat(-d * 1) * Rat(p[static_cast<size_t>(d)]) : Rat(0);
    for (long long i = 1; i < d; ++i)
      if (d - i <= 2 * zd.genus) acc -= t[static_cast<size_t>(i)] * Rat(p[static_cast<size_t>(d - i)]);
    t[static_cast<size_t>(d)] = acc;
  }
  std::vector<Rat> N(static_cast<size_t>(maxd) + 1, Rat(0));
  for (long long d = 1; d <= maxd; ++d) {
    Rat qd(1);
    for (long long i = 0; i < d; ++i) qd *= zd.q;
    N[static_cast<size_t>(d)] = qd + 1 - t[static_cast<size_t>(d)];
  }
  // closed points of degree d: a_d = (1/d) sum_{e|d} mu(d/e) N_e
  auto mu = [](long long m) {
    long long r = 1;
    for (long long f = 2; f * f <= m; ++f) {
      if (m % f == 0) {
        m /= f;
        if (m % f == 0) return 0LL;
        r = -r;
      }
    }
    if (m > 1) r = -r;
    return r;
  };
  std::vector<Rat> a(static_cast<size_t>(maxd) + 1, Rat(0));
  for (long long d = 1; d <= maxd; ++d) {
    Rat acc(0);
    for (long long e = 1; e <= d; ++e)
      if (d % e == 0) acc += Rat(mu(d / e)) * N[static_cast<size_t>(e)];
    a[static_cast<size_t>(d)] = acc / d;
  }
  if (omit_base_point) a[1] -= 1;  // remove the marked rational point

  // Generating function per point of degree d: 1 + (1-q^{-d}) z^d/(1-z^d);
  // dp over degrees, truncated at s.
  std::vector<Rat> dp(static_cast<size_t>(s) + 1, Rat(0));
  dp[0] = 1;
  for (long long d = 1; d <= maxd; ++d) {
    long long npts = to_ll(rat_num(a[static_cast<size_t>(d)]));  // integral for genuine curves
    Rat qd(1);
    for (long long i = 0; i < d; ++i) qd *= zd.q;
    Rat w = Rat(1) - Rat(1) / qd;
    for (long long pt = 0; pt < npts; ++pt) {
      std::vector<Rat> next = dp;
      for (long long m = d; m <= s; m += d)
        for (long long base = 0; base + m <= s; ++base)
          next[static_cast<size_t>(base + m)] += dp[static_cast<size_t>(base)] * w;
      dp = std::move(next);
    }
  }
  return dp[static_cast<size_t>(s)];
}

bool ShuffleKey::operator<(const ShuffleKey& o) const {
  if (labels != o.labels) return std::lexicographical_compare(labels.begin(), labels.end(), o.labels.begin(), o.labels.end());
  return expo < o.expo;
}

ShuffleElement ShuffleElement::monomial(const ShuffleContext& c, std::vector<Rat> labels,
                                        std::vector<long long> expo, Scalar coeff) {
  if (labels.size() != expo.size()) throw precondition_error("label/exponent size mismatch");
  for (const Rat& l : labels)
    if (l < 0 || l >= 1) throw precondition_error("labels live in [0,1)");
  ShuffleElement e{c, {}};
  e.terms[ShuffleKey{std::move(labels), std::move(expo)}] = std::move(coeff);
  return e;
}

size_t ShuffleElement::rank() const {
  if (terms.empty()) return 0;
  return terms.begin()->first.labels.size();
}

ShuffleElement ShuffleElement::operator+(const ShuffleElement& o) const {
  ShuffleElement r = *this;
  for (const auto& [k, c] : o.terms) {
    auto it = r.terms.find(k);
    if (it == r.terms.end())
      r.terms.emplace(k, c);
    else
      it->second += c;
  }
  r.prune();
  return r;
}

ShuffleElement ShuffleElement::scaled(const Scalar& c) const {
  ShuffleElement r = *this;
  for (auto& [k, coeff] : r.terms) coeff *= c;
  r.prune();
  return r;
}

void ShuffleElement::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

bool ShuffleElement::is_zero() const {
  for (const auto& [k, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

std::string ShuffleElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < k.labels.size(); ++i)
      os << " x" << i + 1 << "^" << k.expo[i] << " v:" << rat_to_string(k.labels[i]);
    first = false;
  }
  return os.str();
}

ShuffleElement rank1_generator(const ShuffleContext& ctx, long long n, long long d) {
  long long fl = d >= 0 ? d / n : -((-d + n - 1) / n);
  long long fr = d - fl * n;
  return ShuffleElement::monomial(ctx, {Rat(fr, n)}, {fl}, Scalar::one(ctx.zd.q));
}

ShuffleElement rank1_generator_rat(const ShuffleContext& ctx, const Rat& a) {
  Rat fl = rat_floor(a);
  return ShuffleElement::monomial(ctx, {a - fl}, {to_ll(rat_num(fl))}, Scalar::one(ctx.zd.q));
}

ShuffleElement varpi_apply(const ShuffleElement& x, size_t slot) {
  const ShuffleContext& ctx = x.ctx;
  int q = ctx.zd.q;
  size_t T = ctx.order;
  RationalFunctionSeries h = ctx.h();
  // swap = h(z) v^{-1} (1-z)/(1-z/q); stay = h(z)(1-1/q)/(1-z/q); rational
  // parts expanded here, the v^{-1} applied on emission.
  RationalFunctionSeries swap_ser(q, poly_mul(h.num(), {Int(q), Int(-q)}),
                                  poly_mul(h.den(), {Int(q), Int(-1)}));
  IntPoly stay_num = h.num();
  for (auto& c : stay_num) c *= (q - 1);
  RationalFunctionSeries stay_ser(q, stay_num, poly_mul(h.den(), {Int(q), Int(-1)}));

  ShuffleElement out{ctx, {}};
  auto add = [&](ShuffleKey k, Scalar c) {
    auto it = out.terms.find(k);
    if (it == out.terms.end())
      out.terms.emplace(std::move(k), std::move(c));
    else
      it->second += c;
  };

  for (const auto& [key, coeff] : x.terms) {
    if (slot + 1 >= key.labels.size()) throw precondition_error("slot out of range");
    const Rat& la = key.labels[slot];
    const Rat& lb = key.labels[slot + 1];
    ShuffleKey swapped = key;
    std::swap(swapped.expo[slot], swapped.expo[slot + 1]);

    if (la == lb) {
      for (size_t s = 0; s <= T; ++s) {
        ShuffleKey k = swapped;
        k.expo[slot] += static_cast<long long>(s);
        k.expo[slot + 1] -= static_cast<long long>(s);
        add(std::move(k), coeff * h.coeff(s));
      }
      continue;
    }
    // swap term: labels exchanged, exponents db, da with the kernel series
    {
      ShuffleKey base = swapped;
      std::swap(base.labels[slot], base.labels[slot + 1]);
      Scalar vum = Scalar::v_pow(q, -1);
      for (size_t s = 0; s <= T; ++s) {
        ShuffleKey k = base;
        k.expo[slot] += static_cast<long long>(s);
        k.expo[slot + 1] -= static_cast<long long>(s);
        add(std::move(k), coeff * vum * swap_ser.coeff(s));
      }
    }
    // stay term: labels kept; the lower-label-first case shifts by (+1,-1)
    {
      long long shift = (la < lb && ctx.stay_shift) ? 1 : 0;
      for (size_t s = 0; s <= T; ++s) {
        ShuffleKey k = swapped;
        k.expo[slot] += static_cast<long long>(s) + shift;
        k.expo[slot + 1] -= static_cast<long long>(s) + shift;
        add(std::move(k), coeff * stay_ser.coeff(s));
      }
    }
  }
  out.prune();
  return out;
}

ShuffleElement varpi_word(const ShuffleElement& x, const std::vector<size_t>& word) {
  ShuffleElement cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = varpi_apply(cur, *it);
  return cur;
}

namespace {

// Reduced word of a permutation given in one-line notation (0-based values).
std::vector<size_t> reduced_word(std::vector<size_t> sigma) {
  std::vector<size_t> rec;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < sigma.size(); ++i) {
      if (sigma[i] > sigma[i + 1]) {
        std::swap(sigma[i], sigma[i + 1]);
        rec.push_back(i);
        changed = true;
        break;
      }
    }
  }
  std::reverse(rec.begin(), rec.end());
  return rec;
}

void gen_shuffles(size_t r, size_t s, std::vector<std::vector<size_t>>& out) {
  // choose the positions of the first block among 0..r+s-1 (increasing)
  std::vector<size_t> pos(r);
  std::function<void(size_t, size_t)> rec = [&](size_t idx, size_t from) {
    if (idx == r) {
      std::vector<size_t> sigma(r + s);
      std::vector<bool> used(r + s, false);
      for (size_t i = 0; i < r; ++i) {
        sigma[i] = pos[i];
        used[pos[i]] = true;
      }
      size_t nxt = 0;
      for (size_t i = 0; i < s; ++i) {
        while (used[nxt]) ++nxt;
        sigma[r + i] = nxt;
        used[nxt] = true;
      }
      out.push_back(std::move(sigma));
      return;
    }
    for (size_t c = from; c < r + s; ++c) {
      pos[idx] = c;
      rec(idx + 1, c + 1);
    }
  };
  rec(0, 0);
}

}  // namespace

ShuffleElement shuffle_product(const ShuffleElement& a, const ShuffleElement& b) {
  size_t r = a.rank(), s = b.rank();
  if (r == 0) return b;
  if (s == 0) return a;
  std::vector<std::vector<size_t>> shuffles;
  gen_shuffles(r, s, shuffles);

  ShuffleElement concat{a.ctx, {}};
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      ShuffleKey k;
      k.labels = ka.labels;
      k.labels.insert(k.labels.end(), kb.labels.begin(), kb.labels.end());
      k.expo = ka.expo;
      k.expo.insert(k.expo.end(), kb.expo.begin(), kb.expo.end());
      concat.terms[std::move(k)] = ca * cb;
    }

  ShuffleElement out{a.ctx, {}};
  for (const auto& sigma : shuffles) {
    ShuffleElement term = varpi_word(concat, reduced_word(sigma));
    out = out + term;
  }
  return out;
}

ShuffleElement constant_term_rank2(long long d1, long long d2, long long n,
                                   const ShuffleContext& ctx) {
  int q = ctx.zd.q;
  size_t T = ctx.order;
  long long g = ctx.zd.genus;
  auto fl = [&](long long d) { return d >= 0 ? d / n : -((-d + n - 1) / n); };
  auto fr = [&](long long d) { return d - fl(d) * n; };

  ShuffleElement out = ShuffleElement::monomial(
      ctx, {Rat(fr(d1), n), Rat(fr(d2), n)}, {fl(d1), fl(d2)}, Scalar::one(q));
  Scalar genus_factor = Scalar::v_pow(q, 2 - 2 * g);

  if (fr(d2 - d1) == 0) {
    RationalFunctionSeries xi = ctx.zd.xi();
    for (size_t s = 0; s <= T; ++s) {
      out = out + ShuffleElement::monomial(
                      ctx, {Rat(fr(d2), n), Rat(fr(d1), n)},
                      {fl(d2) + static_cast<long long>(s), fl(d1) - static_cast<long long>(s)},
                      genus_factor * xi.coeff(s));
    }
    return out;
  }
  RationalFunctionSeries xi = ctx.zd.xi();
  RationalFunctionSeries xic = ctx.zd.xi_circ();
  long long m = fr(d1 - d2);
  Scalar qinv = Scalar::of_rat(q, Rat(1, q));
  for (size_t s = 0; s <= T; ++s) {
    out = out + ShuffleElement::monomial(
                    ctx, {Rat(fr(d2), n), Rat(fr(d1), n)},
                    {fl(d2) + static_cast<long long>(s), fl(d1) - static_cast<long long>(s)},
                    genus_factor * Scalar::v_pow(q, -1) * xic.coeff(s));
    out = out + ShuffleElement::monomial(
                    ctx, {Rat(fr(d1), n), Rat(fr(d2), n)},
                    {fl(d2 + m) + static_cast<long long>(s), fl(d1 - m) - static_cast<long long>(s)},
                    genus_factor * (xi.coeff(s) - qinv * xic.coeff(s)));
  }
  return out;
}

bool shuffle_equal_to_order(const ShuffleElement& a, const ShuffleElement& b,
                            const std::vector<std::vector<long long>>& base_profiles_hint) {
  size_t T = a.ctx.order;
  auto profile = [](const ShuffleKey& k) {
    std::vector<long long> p(k.expo.size());
    long long acc = 0;
    for (size_t i = 0; i < k.expo.size(); ++i) {
      acc += k.expo[i];
      p[i] = acc;
    }
    return p;
  };
  // Min profile per label pattern over both elements (and hints).
  std::map<std::vector<Rat>, std::vector<long long>> minp;
  auto feed = [&](const ShuffleElement& e) {
    for (const auto& [k, c] : e.terms) {
      auto p = profile(k);
      auto it = minp.find(k.labels);
      if (it == minp.end())
        minp.emplace(k.labels, p);
      else
        for (size_t i = 0; i < p.size(); ++i) it->second[i] = std::min(it->second[i], p[i]);
    }
  };
  feed(a);
  feed(b);
  for (const auto& hint : base_profiles_hint)
    for (auto& [labels, p] : minp)
      if (hint.size() == p.size())
        for (size_t i = 0; i < p.size(); ++i) p[i] = std::min(p[i], hint[i]);

  auto within = [&](const ShuffleKey& k) {
    auto p = profile(k);
    const auto& base = minp.at(k.labels);
    long long shift = 0;
    for (size_t i = 0; i + 1 < p.size(); ++i) shift += p[i] - base[i];  // last entry = total degree
    return shift <= static_cast<long long>(T);
  };

  std::set<ShuffleKey> keys;
  for (const auto& [k, c] : a.terms) keys.insert(k);
  for (const auto& [k, c] : b.terms) keys.insert(k);
  for (const auto& k : keys) {
    if (!within(k)) continue;
    Scalar ca = Scalar::zero(a.ctx.zd.q), cb = ca;
    auto ia = a.terms.find(k);
    if (ia != a.terms.end()) ca = ia->second;
    auto ib = b.terms.find(k);
    if (ib != b.terms.end()) cb = ib->second;
    if (!(ca == cb)) return false;
  }
  return true;
}

bool braid_check(const ShuffleContext& ctx, const std::vector<Rat>& labels) {
  for (const Rat& l1 : labels)
    for (const Rat& l2 : labels)
      for (const Rat& l3 : labels) {
        ShuffleElement m = ShuffleElement::monomial(ctx, {l1, l2, l3}, {0, 0, 0},
                                                    Scalar::one(ctx.zd.q));
        ShuffleElement lhs = varpi_apply(varpi_apply(varpi_apply(m, 0), 1), 0);
        ShuffleElement rhs = varpi_apply(varpi_apply(varpi_apply(m, 1), 0), 1);
        if (!shuffle_equal_to_order(lhs, rhs)) return false;
      }
  return true;
}

namespace {

// Laurent fraction num/den * z^shift with integer polynomials.
struct LaurentFrac {
  IntPoly num{Int(0)}, den{Int(1)};
  long long shift = 0;

  static LaurentFrac of(const RationalFunctionSeries& s) {
    return LaurentFrac{s.num(), s.den(), 0};
  }
  static LaurentFrac one() { return LaurentFrac{{Int(1)}, {Int(1)}, 0}; }
  LaurentFrac reciprocal_arg() const {  // f(1/z)
    IntPoly rn(num.rbegin(), num.rend());
    IntPoly rd(den.rbegin(), den.rend());
    long long sh = static_cast<long long>(den.size()) - static_cast<long long>(num.size()) - shift;
    return LaurentFrac{poly_trim(std::move(rn)), poly_trim(std::move(rd)), sh};
  }
  LaurentFrac operator*(const LaurentFrac& o) const {
    return LaurentFrac{poly_mul(num, o.num), poly_mul(den, o.den), shift + o.shift};
  }
  LaurentFrac operator+(const LaurentFrac& o) const {
    // align shifts: use min shift
    long long s = std::min(shift, o.shift);
    IntPoly a = poly_mul(num, o.den);
    IntPoly b = poly_mul(o.num, den);
    IntPoly za(static_cast<size_t>(shift - s), Int(0));
    za.push_back(Int(1));
    IntPoly zb(static_cast<size_t>(o.shift - s), Int(0));
    zb.push_back(Int(1));
    a = poly_mul(a, za);
    b = poly_mul(b, zb);
    IntPoly sum(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
    return LaurentFrac{poly_trim(std::move(sum)), poly_mul(den, o.den), s};
  }
  bool equals(const LaurentFrac& o) const {
    // num/den z^shift == o.num/o.den z^{o.shift}
    IntPoly a = poly_mul(num, o.den);
    IntPoly b = poly_mul(o.num, den);
    long long sa = shift, sb = o.shift;
    long long s = std::min(sa, sb);
    IntPoly za(static_cast<size_t>(sa - s), Int(0));
    za.push_back(Int(1));
    IntPoly zb(static_cast<size_t>(sb - s), Int(0));
    zb.push_back(Int(1));
    a = poly_trim(poly_mul(a, za));
    b = poly_trim(poly_mul(b, zb));
    return a == b;
  }
  bool is_zero() const { return poly_trim(num) == IntPoly{Int(0)}; }
};

}  // namespace

bool kernel_symmetry_check(const ZetaData& zd) {
  // h(z) h(1/z) = 1
  LaurentFrac h = LaurentFrac::of(zd.kernel_h());
  if (!(h * h.reciprocal_arg()).equals(LaurentFrac::one())) return false;

  // Unitarity of the distinct-label block. With S = swap rational part,
  // B = stay part, q^{-1} = v^{-2}:
  //   q^{-1} S(z) S(1/z) + B(z) B(1/z) = 1
  //   S(1/z) B(z) + S(z) B(1/z) / z = 0
  LaurentFrac S = LaurentFrac::of(zd.swap_factor());
  LaurentFrac B = LaurentFrac::of(zd.stay_factor());
  LaurentFrac qinv{{Int(1)}, {Int(zd.q)}, 0};
  LaurentFrac lhs1 = qinv * S * S.reciprocal_arg() + B * B.reciprocal_arg();
  if (!lhs1.equals(LaurentFrac::one())) return false;
  LaurentFrac zinv{{Int(1)}, {Int(1)}, -1};
  LaurentFrac lhs2 = S.reciprocal_arg() * B + S * B.reciprocal_arg() * zinv;
  return lhs2.is_zero();
}

bool kernel_factor_identities(const ZetaData& zd) {
  // swap = q^{1-g} xi_circ;  stay = q^{1-g} (xi - q^{-1} xi_circ).
  int q = zd.q;
  long long g = zd.genus;
  auto scale_pow = [&](const LaurentFrac& f, long long e) {
    LaurentFrac r = f;
    if (e >= 0)
      for (long long t = 0; t < e; ++t)
        for (auto& c : r.num) c *= q;
    else
      for (long long t = 0; t < -e; ++t)
        for (auto& c : r.den) c *= q;
    return r;
  };
  LaurentFrac S = LaurentFrac::of(zd.swap_factor());
  LaurentFrac B = LaurentFrac::of(zd.stay_factor());
  LaurentFrac xi = LaurentFrac::of(zd.xi());
  LaurentFrac xic = LaurentFrac::of(zd.xi_circ());
  if (!S.equals(scale_pow(xic, 1 - g))) return false;
  LaurentFrac diff = xi + scale_pow(xic, -1) * LaurentFrac{{Int(-1)}, {Int(1)}, 0};
  return B.equals(scale_pow(diff, 1 - g));
}

}  // namespace circlehall
