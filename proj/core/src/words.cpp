#include "circlehall/words.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace circlehall {

namespace {

// Paper-style index (1..n) of the unit cell with left endpoint c.
int cell_index(const Rat& left, long long n) {
  Rat pos = rat_frac(left) * n;
  if (rat_den(pos) != 1) throw precondition_error("endpoint not at denominator n");
  return static_cast<int>(to_ll(rat_num(pos))) % static_cast<int>(n) + 1;
}

// Unit cells of the interval [right-len, right), left to right.
std::vector<int> cells_of(const Arc& a, long long n) {
  Rat lenn = a.len * n;
  if (rat_den(lenn) != 1) throw precondition_error("interval not at denominator n");
  long long cells = to_ll(rat_num(lenn));
  Rat left = a.right.value() - a.len;
  std::vector<int> out;
  for (long long t = 0; t < cells; ++t) out.push_back(cell_index(left + Rat(t, n), n));
  return out;
}

std::vector<long long> lattice_unit(long long n, int i) {
  std::vector<long long> v(static_cast<size_t>(n), 0);
  v[static_cast<size_t>(((i - 1) % n + n) % n)] = 1;
  return v;
}

long long sym_form(const std::vector<long long>& a, const std::vector<long long>& b) {
  return symmetric_interval_euler_form(step_from_lattice(a), step_from_lattice(b));
}

}  // namespace

std::string GeneratorSymbol::to_string() const {
  std::string k = kind == GenKind::E ? "E" : kind == GenKind::F ? "F" : kind == GenKind::K ? "K" : "K^-1";
  return k + interval.to_string();
}

DoubleElement DoubleElement::one(long long n, int q) {
  DoubleElement e{n, q, {}};
  NormalWord w;
  w.k.assign(static_cast<size_t>(n), 0);
  e.terms[w] = Scalar::one(q);
  return e;
}

DoubleElement DoubleElement::operator+(const DoubleElement& o) const {
  if (n != o.n || q != o.q) throw precondition_error("double element context mismatch");
  DoubleElement r = *this;
  for (const auto& [w, c] : o.terms) {
    auto it = r.terms.find(w);
    if (it == r.terms.end())
      r.terms.emplace(w, c);
    else
      it->second += c;
  }
  r.prune();
  return r;
}

DoubleElement DoubleElement::operator-(const DoubleElement& o) const {
  return *this + o.scaled(Scalar::of_int(q, -1));
}

DoubleElement DoubleElement::scaled(const Scalar& c) const {
  DoubleElement r = *this;
  for (auto& [w, coeff] : r.terms) coeff *= c;
  r.prune();
  return r;
}

void DoubleElement::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

bool DoubleElement::is_syntactically_zero() const {
  for (const auto& [w, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<long long> DoubleElement::grading() const {
  // Q^n-grading: E_i counts +e_i, F_i counts -e_i; must be constant on terms.
  std::vector<long long> g;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (c.is_zero()) continue;
    std::vector<long long> cur(static_cast<size_t>(n), 0);
    for (int i : w.e_word) cur[static_cast<size_t>((i - 1) % n)] += 1;
    for (int i : w.f_word) cur[static_cast<size_t>((i - 1) % n)] -= 1;
    if (first) {
      g = cur;
      first = false;
    } else if (g != cur) {
      throw precondition_error("inhomogeneous double element");
    }
  }
  if (first) g.assign(static_cast<size_t>(n), 0);
  return g;
}

std::string DoubleElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    for (int i : w.e_word) os << " E" << i;
    bool kz = true;
    for (long long x : w.k)
      if (x) kz = false;
    if (!kz) {
      os << " k(";
      for (size_t i = 0; i < w.k.size(); ++i) os << (i ? "," : "") << w.k[i];
      os << ")";
    }
    for (int i : w.f_word) os << " F" << i;
    first = false;
  }
  return os.str();
}

namespace {

// Append a single atom to a normal word, producing a normal combination.
void append_k_atom(DoubleElement& out, const NormalWord& w, const Scalar& c,
                   const std::vector<long long>& kv, int q) {
  std::vector<long long> wt(w.k.size(), 0);
  for (int i : w.f_word) wt[static_cast<size_t>((i - 1) % static_cast<long long>(w.k.size()))] += 1;
  long long tw = sym_form(kv, wt);
  NormalWord nw = w;
  for (size_t i = 0; i < nw.k.size(); ++i) nw.k[i] += kv[i];
  Scalar coeff = c * Scalar::v_pow(q, tw);
  auto it = out.terms.find(nw);
  if (it == out.terms.end())
    out.terms.emplace(std::move(nw), coeff);
  else
    it->second += coeff;
}

void append_f_atom(DoubleElement& out, const NormalWord& w, const Scalar& c, int j) {
  NormalWord nw = w;
  nw.f_word.push_back(j);
  auto it = out.terms.find(nw);
  if (it == out.terms.end())
    out.terms.emplace(std::move(nw), c);
  else
    it->second += c;
}

void append_e_atom(DoubleElement& out, const NormalWord& w, const Scalar& c, int j, long long n,
                   int q) {
  if (w.f_word.empty()) {
    long long tw = sym_form(w.k, lattice_unit(n, j));
    NormalWord nw = w;
    nw.e_word.push_back(j);
    Scalar coeff = c * Scalar::v_pow(q, tw);
    auto it = out.terms.find(nw);
    if (it == out.terms.end())
      out.terms.emplace(std::move(nw), coeff);
    else
      it->second += coeff;
    return;
  }
  // w = (e, k, f' + [i]):  (...) F_i E_j = (...) E_j F_i - delta_{ij} (...) (K_j - K_j^{-1})/(v - v^{-1})
  NormalWord head = w;
  int i = head.f_word.back();
  head.f_word.pop_back();
  DoubleElement tmp = DoubleElement::zero(n, q);
  append_e_atom(tmp, head, c, j, n, q);
  for (const auto& [tw2, tc] : tmp.terms) append_f_atom(out, tw2, tc, i);
  if (i == j) {
    Scalar denom = Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1);
    Scalar factor = c * denom.inverse();
    std::vector<long long> kplus = lattice_unit(n, j);
    std::vector<long long> kminus = kplus;
    for (auto& x : kminus) x = -x;
    append_k_atom(out, head, -factor, kplus, q);
    append_k_atom(out, head, factor, kminus, q);
  }
}

}  // namespace

DoubleElement DoubleElement::operator*(const DoubleElement& o) const {
  if (n != o.n || q != o.q) throw precondition_error("double element context mismatch");
  DoubleElement out = zero(n, q);
  for (const auto& [wl, cl] : terms) {
    for (const auto& [wr, cr] : o.terms) {
      // Start from the left word, append the right word atom by atom.
      DoubleElement cur = zero(n, q);
      cur.terms[wl] = cl * cr;
      for (int j : wr.e_word) {
        DoubleElement next = zero(n, q);
        for (const auto& [w, c] : cur.terms) append_e_atom(next, w, c, j, n, q);
        cur = std::move(next);
      }
      bool kz = true;
      for (long long x : wr.k)
        if (x) kz = false;
      if (!kz) {
        DoubleElement next = zero(n, q);
        for (const auto& [w, c] : cur.terms) append_k_atom(next, w, c, wr.k, q);
        cur = std::move(next);
      }
      for (int j : wr.f_word) {
        DoubleElement next = zero(n, q);
        for (const auto& [w, c] : cur.terms) append_f_atom(next, w, c, j);
        cur = std::move(next);
      }
      for (const auto& [w, c] : cur.terms) {
        auto it = out.terms.find(w);
        if (it == out.terms.end())
          out.terms.emplace(w, c);
        else
          it->second += c;
      }
    }
  }
  out.prune();
  return out;
}

DoubleElement chevalley_expand(const GeneratorSymbol& g, long long n, int q) {
  if (g.kind == GenKind::K || g.kind == GenKind::Kinv) {
    StepFunction chi = StepFunction::indicator(g.interval);
    std::vector<long long> kv = lattice_from_step(chi, n);
    if (g.kind == GenKind::Kinv)
      for (auto& x : kv) x = -x;
    DoubleElement e = DoubleElement::zero(n, q);
    NormalWord w;
    w.k = std::move(kv);
    e.terms[std::move(w)] = Scalar::one(q);
    return e;
  }
  std::vector<int> cells = cells_of(g.interval, n);
  if (cells.empty()) throw precondition_error("empty interval");

  // Single-letter element helper.
  auto letter = [&](int i, GenKind kind) {
    DoubleElement e = DoubleElement::zero(n, q);
    NormalWord w;
    w.k.assign(static_cast<size_t>(n), 0);
    if (kind == GenKind::E)
      w.e_word.push_back(i);
    else
      w.f_word.push_back(i);
    e.terms[std::move(w)] = Scalar::one(q);
    return e;
  };

  // Join relations, peeling the leftmost cell:
  //   E_{J1 u J2} = v^{1/2} E_{J1} E_{J2} - v^{-1/2} E_{J2} E_{J1}
  //   F_{J1 u J2} = v^{-1/2} F_{J2} F_{J1} - v^{1/2} F_{J1} F_{J2}
  std::function<DoubleElement(size_t)> expand = [&](size_t from) -> DoubleElement {
    DoubleElement first = letter(cells[from], g.kind);
    if (from + 1 == cells.size()) return first;
    DoubleElement rest = expand(from + 1);
    Scalar vh = Scalar::v_half_pow(q, 1), vhm = Scalar::v_half_pow(q, -1);
    if (g.kind == GenKind::E)
      return (first * rest).scaled(vh) - (rest * first).scaled(vhm);
    return (rest * first).scaled(vhm) - (first * rest).scaled(vh);
  };
  return expand(0);
}

DoubleElement straighten(const std::vector<GeneratorSymbol>& word, long long n, int q) {
  DoubleElement acc = DoubleElement::one(n, q);
  for (const auto& g : word) acc = acc * chevalley_expand(g, n, q);
  return acc;
}

namespace {

HallElement eval_letters(const std::vector<int>& letters, GenKind kind, long long n, int q,
                         const Bounds& b) {
  HallElement acc = HallElement::unit(n, q);
  for (int i : letters) {
    Scalar c = Scalar::v_half_pow(q, 1);
    if (kind == GenKind::F) c = -c;
    HallElement gen = HallElement::characteristic(n, q, TorsionObject::segment(n, i, 1), c);
    acc = hall_product(acc, gen, b);
  }
  return acc;
}

}  // namespace

HallElement evaluate_positive_part(const DoubleElement& x, const Bounds& b) {
  HallElement acc = HallElement::zero(x.n, x.q);
  for (const auto& [w, c] : x.terms) {
    if (!w.f_word.empty()) throw precondition_error("element has F letters");
    for (long long kv : w.k)
      if (kv) throw precondition_error("element has K factors");
    acc = acc + eval_letters(w.e_word, GenKind::E, x.n, x.q, b).scaled(c);
  }
  return acc;
}

HallElement evaluate_negative_part(const DoubleElement& x, const Bounds& b) {
  HallElement acc = HallElement::zero(x.n, x.q);
  for (const auto& [w, c] : x.terms) {
    if (!w.e_word.empty()) throw precondition_error("element has E letters");
    for (long long kv : w.k)
      if (kv) throw precondition_error("element has K factors");
    acc = acc + eval_letters(w.f_word, GenKind::F, x.n, x.q, b).scaled(c);
  }
  return acc;
}

bool double_equal(const DoubleElement& a, const DoubleElement& b, const Bounds& bounds) {
  DoubleElement d = a - b;
  if (d.is_syntactically_zero()) return true;
  // Group by K-exponent; evaluate sum c * H+(e) (x) H-(f) in the Hall model.
  std::map<std::vector<long long>, std::vector<std::pair<NormalWord, Scalar>>> groups;
  for (const auto& [w, c] : d.terms) groups[w.k].emplace_back(w, c);
  for (const auto& [k, terms] : groups) {
    std::map<std::pair<TorsionObject, TorsionObject>, Scalar> tensor;
    for (const auto& [w, c] : terms) {
      HallElement he = eval_letters(w.e_word, GenKind::E, d.n, d.q, bounds);
      HallElement hf = eval_letters(w.f_word, GenKind::F, d.n, d.q, bounds);
      for (const auto& [me, ce] : he.terms)
        for (const auto& [mf, cf] : hf.terms) {
          auto key = std::make_pair(me, mf);
          Scalar add = c * ce * cf;
          auto it = tensor.find(key);
          if (it == tensor.end())
            tensor.emplace(key, add);
          else
            it->second += add;
        }
    }
    for (const auto& [key, c] : tensor)
      if (!c.is_zero()) return false;
  }
  return true;
}

RelationFamily relation_family_from_string(const std::string& s) {
  if (s == "dj") return RelationFamily::DJ;
  if (s == "join") return RelationFamily::Join;
  if (s == "nest") return RelationFamily::Nest;
  if (s == "disjoint-nest") return RelationFamily::DisjointNest;
  if (s == "ef-commutator") return RelationFamily::EFCommutator;
  if (s == "k-join") return RelationFamily::KJoin;
  if (s == "k-commute") return RelationFamily::KCommute;
  throw parse_error("unknown relation family: " + s);
}

std::string relation_family_to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::DJ: return "dj";
    case RelationFamily::Join: return "join";
    case RelationFamily::Nest: return "nest";
    case RelationFamily::DisjointNest: return "disjoint-nest";
    case RelationFamily::EFCommutator: return "ef-commutator";
    case RelationFamily::KJoin: return "k-join";
    case RelationFamily::KCommute: return "k-commute";
  }
  return "?";
}

namespace {

bool sets_disjoint(const Arc& a, const Arc& b) {
  long long m = to_ll(lcm_int(Int(a.denominator()), Int(b.denominator())));
  std::vector<long long> fa = StepFunction::indicator(a).values_at(m);
  std::vector<long long> fb = StepFunction::indicator(b).values_at(m);
  for (long long i = 0; i < m; ++i)
    if (fa[static_cast<size_t>(i)] && fb[static_cast<size_t>(i)]) return false;
  return true;
}

bool closures_disjoint(const Arc& a, const Arc& b) {
  if (!sets_disjoint(a, b)) return false;
  CirclePoint la = a.left(), lb = b.left();
  return !(a.right == lb) && !(b.right == la);
}

bool subset_of(const Arc& a, const Arc& b) {
  long long m = to_ll(lcm_int(Int(a.denominator()), Int(b.denominator())));
  std::vector<long long> fa = StepFunction::indicator(a).values_at(m);
  std::vector<long long> fb = StepFunction::indicator(b).values_at(m);
  for (long long i = 0; i < m; ++i)
    if (fa[static_cast<size_t>(i)] > fb[static_cast<size_t>(i)]) return false;
  return true;
}

bool adjacent(const Arc& a, const Arc& b) {  // b starts where a ends
  return b.left() == a.right;
}

HallElement eval_E(const Arc& j, long long n, int q, const Bounds& b) {
  return evaluate_positive_part(chevalley_expand(GeneratorSymbol(GenKind::E, j), n, q), b);
}
HallElement eval_F(const Arc& j, long long n, int q, const Bounds& b) {
  return evaluate_negative_part(chevalley_expand(GeneratorSymbol(GenKind::F, j), n, q), b);
}

}  // namespace

RelationCertificate verify_relation(RelationFamily family, const Arc& j1, const Arc& j2,
                                    long long n, int q, const Bounds& b) {
  RelationCertificate cert;
  cert.family = relation_family_to_string(family);
  Scalar vh = Scalar::v_half_pow(q, 1), vhm = Scalar::v_half_pow(q, -1);
  StepFunction c1 = StepFunction::indicator(j1), c2 = StepFunction::indicator(j2);

  switch (family) {
    case RelationFamily::Join: {
      if (!adjacent(j1, j2)) throw precondition_error("join requires adjacent intervals");
      if (j1.len + j2.len >= 1) throw precondition_error("join union must be strict");
      Arc u(j2.right, j1.len + j2.len);
      {
        HallElement lhs = eval_E(u, n, q, b);
        HallElement e1 = eval_E(j1, n, q, b), e2 = eval_E(j2, n, q, b);
        HallElement rhs = hall_product(e1, e2, b).scaled(vh) - hall_product(e2, e1, b).scaled(vhm);
        cert.lhs = lhs.to_string();
        cert.rhs = rhs.to_string();
        cert.holds = lhs == rhs;
      }
      if (cert.holds) {  // F-side join
        HallElement lhs = eval_F(u, n, q, b);
        HallElement f1 = eval_F(j1, n, q, b), f2 = eval_F(j2, n, q, b);
        HallElement rhs = hall_product(f2, f1, b).scaled(vhm) - hall_product(f1, f2, b).scaled(vh);
        cert.holds = lhs == rhs;
      }
      return cert;
    }
    case RelationFamily::Nest: {
      if (!subset_of(j1, j2)) throw precondition_error("nest requires j1 inside j2");
      long long e12 = interval_euler_form(c1, c2), e21 = interval_euler_form(c2, c1);
      HallElement e1 = eval_E(j1, n, q, b), e2 = eval_E(j2, n, q, b);
      HallElement lhs = hall_product(e1, e2, b).scaled(Scalar::v_pow(q, e12));
      HallElement rhs = hall_product(e2, e1, b).scaled(Scalar::v_pow(q, e21));
      cert.lhs = lhs.to_string();
      cert.rhs = rhs.to_string();
      cert.holds = lhs == rhs;
      if (cert.holds) {
        HallElement f1 = eval_F(j1, n, q, b), f2 = eval_F(j2, n, q, b);
        cert.holds = hall_product(f1, f2, b).scaled(Scalar::v_pow(q, e12)) ==
                     hall_product(f2, f1, b).scaled(Scalar::v_pow(q, e21));
      }
      return cert;
    }
    case RelationFamily::DisjointNest: {
      if (!closures_disjoint(j1, j2)) throw precondition_error("closures must be disjoint");
      HallElement e1 = eval_E(j1, n, q, b), e2 = eval_E(j2, n, q, b);
      HallElement lhs = hall_product(e1, e2, b);
      HallElement rhs = hall_product(e2, e1, b);
      cert.lhs = lhs.to_string();
      cert.rhs = rhs.to_string();
      cert.holds = lhs == rhs;
      if (cert.holds) {
        HallElement f1 = eval_F(j1, n, q, b), f2 = eval_F(j2, n, q, b);
        cert.holds = hall_product(f1, f2, b) == hall_product(f2, f1, b);
      }
      return cert;
    }
    case RelationFamily::DJ: {
      GeneratorSymbol K(GenKind::K, j1), Kinv(GenKind::Kinv, j1);
      long long form = symmetric_interval_euler_form(c1, c2);
      {
        GeneratorSymbol E(GenKind::E, j2);
        DoubleElement lhs = straighten({K, E, Kinv}, n, q);
        DoubleElement rhs = straighten({E}, n, q).scaled(Scalar::v_pow(q, form));
        cert.lhs = lhs.to_string();
        cert.rhs = rhs.to_string();
        cert.holds = double_equal(lhs, rhs, b);
      }
      if (cert.holds) {
        GeneratorSymbol F(GenKind::F, j2);
        DoubleElement lhs = straighten({K, F, Kinv}, n, q);
        DoubleElement rhs = straighten({F}, n, q).scaled(Scalar::v_pow(q, -form));
        cert.holds = double_equal(lhs, rhs, b);
      }
      return cert;
    }
    case RelationFamily::EFCommutator: {
      GeneratorSymbol E2(GenKind::E, j2), F1(GenKind::F, j1);
      DoubleElement lhs = straighten({F1, E2}, n, q) - straighten({E2, F1}, n, q);
      if (j1 == j2) {
        // [E_J, F_J] = (K_J - K_J^{-1})/(v - v^{-1})
        DoubleElement rhs = (chevalley_expand(GeneratorSymbol(GenKind::Kinv, j1), n, q) -
                             chevalley_expand(GeneratorSymbol(GenKind::K, j1), n, q))
                                .scaled((Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1)).inverse());
        cert.lhs = lhs.to_string();
        cert.rhs = rhs.to_string();
        cert.holds = double_equal(lhs, rhs, b);
      } else {
        if (!sets_disjoint(j1, j2)) throw precondition_error("ef-commutator needs equal or disjoint intervals");
        cert.lhs = lhs.to_string();
        cert.rhs = "0";
        cert.holds = double_equal(lhs, DoubleElement::zero(n, q), b);
      }
      return cert;
    }
    case RelationFamily::KJoin: {
      if (!adjacent(j1, j2)) throw precondition_error("join requires adjacent intervals");
      if (j1.len + j2.len > 1) throw precondition_error("union exceeds the circle");
      Arc u(j2.right, j1.len + j2.len);
      DoubleElement lhs = straighten({GeneratorSymbol(GenKind::K, j1), GeneratorSymbol(GenKind::K, j2)}, n, q);
      DoubleElement rhs = chevalley_expand(GeneratorSymbol(GenKind::K, u), n, q);
      cert.lhs = lhs.to_string();
      cert.rhs = rhs.to_string();
      cert.holds = double_equal(lhs, rhs, b);
      return cert;
    }
    case RelationFamily::KCommute: {
      GeneratorSymbol K1(GenKind::K, j1), K2(GenKind::K, j2);
      DoubleElement lhs = straighten({K1, K2}, n, q);
      DoubleElement rhs = straighten({K2, K1}, n, q);
      cert.lhs = lhs.to_string();
      cert.rhs = rhs.to_string();
      cert.holds = double_equal(lhs, rhs, b);
      return cert;
    }
  }
  throw precondition_error("unhandled family");
}

long long verify_all_relations(long long n, int q, const Bounds& b,
                               std::vector<RelationCertificate>* failures, int threads) {
  // All strict intervals at denominator n.
  std::vector<Arc> strict;
  for (long long i = 1; i <= n; ++i)
    for (long long l = 1; l < n; ++l) strict.emplace_back(CirclePoint(Rat(i, n)), Rat(l, n));
  std::vector<Arc> all = strict;
  all.emplace_back(CirclePoint(Rat(0)), Rat(1));  // full circle, K only

  struct Job {
    RelationFamily fam;
    Arc j1, j2;
  };
  std::vector<Job> jobs;
  for (const auto& a : strict)
    for (const auto& c : strict) {
      if (adjacent(a, c) && a.len + c.len < 1) jobs.push_back({RelationFamily::Join, a, c});
      if (subset_of(a, c)) jobs.push_back({RelationFamily::Nest, a, c});
      if (closures_disjoint(a, c)) jobs.push_back({RelationFamily::DisjointNest, a, c});
      if (a == c || sets_disjoint(a, c)) jobs.push_back({RelationFamily::EFCommutator, a, c});
      if (adjacent(a, c) && a.len + c.len <= 1) jobs.push_back({RelationFamily::KJoin, a, c});
    }
  for (const auto& i : all)
    for (const auto& j : strict) jobs.push_back({RelationFamily::DJ, i, j});
  for (const auto& i : all)
    for (const auto& j : all) jobs.push_back({RelationFamily::KCommute, i, j});

  std::vector<RelationCertificate> results(jobs.size());
  auto run = [&](size_t from, size_t to) {
    for (size_t i = from; i < to; ++i)
      results[i] = verify_relation(jobs[i].fam, jobs[i].j1, jobs[i].j2, n, q, b);
  };
  if (threads <= 1) {
    run(0, jobs.size());
  } else {
    std::vector<std::future<void>> fs;
    size_t chunk = (jobs.size() + static_cast<size_t>(threads) - 1) / static_cast<size_t>(threads);
    for (size_t from = 0; from < jobs.size(); from += chunk)
      fs.push_back(std::async(std::launch::async, run, from, std::min(from + chunk, jobs.size())));
    for (auto& f : fs) f.get();
  }
  for (auto& r : results) {
    if (!r.holds) {
      if (failures)
        failures->push_back(r);
      else
        throw precondition_error("relation failed: " + r.family + " lhs=" + r.lhs + " rhs=" + r.rhs);
    }
  }
  return static_cast<long long>(jobs.size());
}

GeneratorCoproductTerm coproduct_generator_component(const GeneratorSymbol& g, const Rat& cut,
                                                     long long n, int q) {
  if (g.kind == GenKind::K || g.kind == GenKind::Kinv) {
    GeneratorCoproductTerm t;
    t.coeff = Scalar::one(q);
    StepFunction chi = StepFunction::indicator(g.interval);
    t.left = HallElement::unit(n, q);
    t.left.kexp = g.kind == GenKind::K ? chi : -chi;
    t.right = HallElement::unit(n, q);
    t.right.kexp = t.left.kexp;
    return t;
  }
  Rat a = g.interval.left().value();
  Rat len = g.interval.len;
  Rat offset = rat_frac(cut - a);  // cut position relative to a, in [0,1)
  if (offset > len) throw precondition_error("cut outside the interval");
  Bounds b = Bounds::defaults_for(q);

  GeneratorCoproductTerm t;
  if (g.kind == GenKind::E) {
    if (offset == 0) {  // c = a: K_J (x) E_J
      t.coeff = Scalar::one(q);
      t.left = HallElement::unit(n, q);
      t.left.kexp = StepFunction::indicator(g.interval);
      t.right = eval_E(g.interval, n, q, b);
    } else if (offset == len) {  // c = b: E_J (x) 1
      t.coeff = Scalar::one(q);
      t.left = eval_E(g.interval, n, q, b);
      t.right = HallElement::unit(n, q);
    } else {
      Arc j1 = Arc::interval(a, a + offset);
      Arc j2 = Arc::interval(a + offset, a + len);
      t.coeff = Scalar::v_half_pow(q, -1) * (Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1));
      t.left = eval_E(j1, n, q, b);
      t.left.kexp = StepFunction::indicator(j2);
      t.right = eval_E(j2, n, q, b);
    }
  } else {
    if (offset == 0) {  // 1 (x) F_J boundary written at cut = a
      t.coeff = Scalar::one(q);
      t.left = HallElement::unit(n, q);
      t.right = eval_F(g.interval, n, q, b);
    } else if (offset == len) {  // F_J (x) K_J^{-1}
      t.coeff = Scalar::one(q);
      t.left = eval_F(g.interval, n, q, b);
      t.right = HallElement::unit(n, q);
      t.right.kexp = -StepFunction::indicator(g.interval);
    } else {
      Arc j1 = Arc::interval(a, a + offset);
      Arc j2 = Arc::interval(a + offset, a + len);
      t.coeff = -(Scalar::v_half_pow(q, -1) * (Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1)));
      t.left = eval_F(j2, n, q, b);
      t.right = eval_F(j1, n, q, b);
      t.right.kexp = -StepFunction::indicator(j2);
    }
  }
  return t;
}

std::vector<GeneratorSymbol> parse_word(const std::string& text) {
  std::vector<GeneratorSymbol> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    GenKind kind;
    size_t at = 0;
    if (tok.rfind("K^-1", 0) == 0) {
      kind = GenKind::Kinv;
      at = 4;
    } else if (tok[0] == 'E') {
      kind = GenKind::E;
      at = 1;
    } else if (tok[0] == 'F') {
      kind = GenKind::F;
      at = 1;
    } else if (tok[0] == 'K') {
      kind = GenKind::K;
      at = 1;
    } else {
      throw parse_error("bad generator token: " + tok);
    }
    if (at >= tok.size() || tok[at] != '[' || tok.back() != ')')
      throw parse_error("bad interval in token: " + tok);
    std::string body = tok.substr(at + 1, tok.size() - at - 2);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw parse_error("bad interval in token: " + tok);
    Rat a = rat_from_string(body.substr(0, comma));
    Rat b = rat_from_string(body.substr(comma + 1));
    out.emplace_back(kind, Arc::interval(a, b));
  }
  return out;
}

}  // namespace circlehall
