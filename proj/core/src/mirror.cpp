#include "circlehall/mirror.hpp"

#include <algorithm>
#include <sstream>

#include "circlehall/words.hpp"

namespace circlehall {

MirrorInterval::MirrorInterval(const Rat& left, const Rat& right) : a(left), b(right) {
  if (!(b > a)) throw precondition_error("mirror interval needs b > a");
  Rat off = rat_floor(b);
  a -= off;
  b -= off;
}

std::string MirrorInterval::to_string() const {
  return "(" + rat_to_string(a) + "," + rat_to_string(b) + "]";
}

MirrorInterval MirrorInterval::from_arc(const Arc& arc) {
  Rat b = arc.right.value();
  return MirrorInterval(b - arc.len, b);
}

MirrorObject::MirrorObject(std::vector<MirrorInterval> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end());
}

TorsionObject MirrorObject::to_torsion() const {
  std::vector<Arc> arcs;
  for (const auto& p : parts) arcs.push_back(p.to_arc());
  return TorsionObject(std::move(arcs));
}

std::string MirrorObject::to_string() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "+" : "") << parts[i].to_string();
  return os.str();
}

HomExt hom_ext_dims(const MirrorInterval& A, const MirrorInterval& B) {
  HomExt out;
  // Window of relevant translates.
  long long K = 3 + to_ll(rat_num(rat_floor(A.length() + B.length())));
  for (long long k = -K; k <= K; ++k) {
    Rat c = B.a + k, d = B.b + k;
    if (c <= A.a && A.a < d && d <= A.b) out.hom += 1;
    if (A.a < c && c <= A.b && A.b < d) out.ext1 += 1;
  }
  return out;
}

HomExt hom_ext_dims(const MirrorObject& A, const MirrorObject& B) {
  HomExt out;
  for (const auto& x : A.parts)
    for (const auto& y : B.parts) {
      HomExt h = hom_ext_dims(x, y);
      out.hom += h.hom;
      out.ext1 += h.ext1;
    }
  return out;
}

HomExt hom_ext_dims_line(const Rat& a1, const Rat& b1, const Rat& a2, const Rat& b2) {
  HomExt out;
  if (a2 <= a1 && a1 < b2 && b2 <= b1) out.hom = 1;
  if (a1 < a2 && a2 <= b1 && b1 < b2) out.ext1 = 1;
  return out;
}

void MirrorElement::prune() {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

std::string MirrorElement::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [obj, c] : terms) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")*1_{" << obj.to_string() << "}";
    first = false;
  }
  return os.str();
}

MirrorElement mirror_hall_product(const MirrorInterval& j1, const MirrorInterval& j2, int q) {
  MirrorElement out;
  out.q = q;
  // Euler twist through the endpoint-preserving dictionary.
  long long tw = interval_euler_form(StepFunction::indicator(j1.to_arc()),
                                     StepFunction::indicator(j2.to_arc()));
  Scalar twist = Scalar::v_pow(q, tw);

  // Split: subobjects of k_{J1} + k_{J2} isomorphic to k_{J2} with quotient
  // k_{J1}: q+1 lines when J1 = J2, else q^{hom(J2,J1)} graphs.
  long long split_count;
  if (j1 == j2)
    split_count = q + 1;
  else {
    long long h = hom_ext_dims(j2, j1).hom;
    split_count = 1;
    for (long long t = 0; t < h; ++t) split_count *= q;
  }
  out.terms[MirrorObject({j1, j2})] = twist * Scalar::of_int(q, split_count);

  // Nonsplit middle, when the extension space is one-dimensional.
  long long K = 3 + to_ll(rat_num(rat_floor(j1.length() + j2.length())));
  for (long long k = -K; k <= K; ++k) {
    Rat c = j2.a + k, d = j2.b + k;
    if (j1.a < c && c <= j1.b && j1.b < d) {
      // glue (a, d] with leftover overlap (c, b1] when nonempty
      std::vector<MirrorInterval> parts;
      parts.emplace_back(j1.a, d);
      long long count = 1;  // adjacent case: unique middle subobject
      if (c < j1.b) {
        parts.emplace_back(c, j1.b);
        count = q - 1;  // proper overlap
      }
      MirrorObject middle(std::move(parts));
      Scalar add = twist * Scalar::of_int(q, count);
      auto it = out.terms.find(middle);
      if (it == out.terms.end())
        out.terms.emplace(std::move(middle), add);
      else
        it->second += add;
    }
  }
  out.prune();
  return out;
}

namespace {

HallElement mirror_to_hall(const MirrorElement& m, long long n) {
  HallElement out = HallElement::zero(n, m.q);
  for (const auto& [obj, c] : m.terms) {
    TorsionObject t = obj.to_torsion();
    auto it = out.terms.find(t);
    if (it == out.terms.end())
      out.terms.emplace(t, c);
    else
      it->second += c;
  }
  out.prune();
  return out;
}

MirrorElement mirror_scaled(MirrorElement e, const Scalar& c) {
  for (auto& [k, coeff] : e.terms) coeff *= c;
  e.prune();
  return e;
}

MirrorElement mirror_sub(MirrorElement a, const MirrorElement& b) {
  for (const auto& [k, c] : b.terms) {
    auto it = a.terms.find(k);
    if (it == a.terms.end())
      a.terms.emplace(k, -c);
    else
      it->second -= c;
  }
  a.prune();
  return a;
}

}  // namespace

MirrorCompareReport compare_with_quiver(long long n, int q, const Bounds& b) {
  MirrorCompareReport rep;
  std::vector<MirrorInterval> gens;
  for (long long i = 1; i <= n; ++i)
    for (long long l = 1; l < n; ++l) gens.emplace_back(Rat(i - l, n), Rat(i, n));

  for (const auto& j1 : gens) {
    for (const auto& j2 : gens) {
      MirrorElement mp = mirror_hall_product(j1, j2, q);
      HallElement mirror_side = mirror_to_hall(mp, n);
      HallElement a = HallElement::characteristic(n, q, TorsionObject({j1.to_arc()}), Scalar::one(q));
      HallElement c = HallElement::characteristic(n, q, TorsionObject({j2.to_arc()}), Scalar::one(q));
      HallElement quiver_side = hall_product(a, c, b);
      ++rep.pairs_checked;
      if (!(mirror_side == quiver_side)) {
        rep.match = false;
        rep.first_mismatch = "product " + j1.to_string() + " * " + j2.to_string() +
                             ": mirror=" + mirror_side.to_string() +
                             " quiver=" + quiver_side.to_string();
        return rep;
      }
    }
  }

  // Relation families evaluated in the mirror model itself.
  Scalar vh = Scalar::v_half_pow(q, 1), vhm = Scalar::v_half_pow(q, -1);
  auto fail = [&](const std::string& what) {
    rep.match = false;
    rep.first_mismatch = what;
  };
  for (const auto& j1 : gens) {
    for (const auto& j2 : gens) {
      Arc a1 = j1.to_arc(), a2 = j2.to_arc();
      StepFunction c1 = StepFunction::indicator(a1), c2 = StepFunction::indicator(a2);
      // adjacency (a,b],(b,c] with strict union
      if (j2.a == j1.b || rat_frac(j2.a - j1.b) == 0) {
        if (j1.length() + j2.length() < 1) {
          MirrorInterval u(j2.b - j1.length() - j2.length(), j2.b);
          // E_union = v^{1/2} E_1 E_2 - v^{-1/2} E_2 E_1, with E = v^{1/2} 1
          MirrorElement lhs;
          lhs.q = q;
          lhs.terms[MirrorObject({u})] = vh;
          MirrorElement rhs = mirror_sub(mirror_scaled(mirror_hall_product(j1, j2, q), vh * vh * vh),
                                         mirror_scaled(mirror_hall_product(j2, j1, q), vh * vh * vhm));
          ++rep.relations_checked;
          if (!mirror_sub(lhs, rhs).terms.empty()) {
            fail("mirror join relation at " + j1.to_string() + "," + j2.to_string());
            return rep;
          }
        }
      }
      // nest
      {
        long long m = to_ll(lcm_int(Int(a1.denominator()), Int(a2.denominator())));
        std::vector<long long> f1 = c1.values_at(m), f2 = c2.values_at(m);
        bool inside = true;
        for (long long t = 0; t < m; ++t)
          if (f1[static_cast<size_t>(t)] > f2[static_cast<size_t>(t)]) inside = false;
        if (inside) {
          long long e12 = interval_euler_form(c1, c2), e21 = interval_euler_form(c2, c1);
          MirrorElement lhs = mirror_scaled(mirror_hall_product(j1, j2, q), Scalar::v_pow(q, e12));
          MirrorElement rhs = mirror_scaled(mirror_hall_product(j2, j1, q), Scalar::v_pow(q, e21));
          ++rep.relations_checked;
          if (!mirror_sub(lhs, rhs).terms.empty()) {
            fail("mirror nest relation at " + j1.to_string() + "," + j2.to_string());
            return rep;
          }
        }
      }
      // disjoint closures commute
      {
        long long m = to_ll(lcm_int(Int(a1.denominator()), Int(a2.denominator())));
        std::vector<long long> f1 = c1.values_at(m), f2 = c2.values_at(m);
        bool disj = true;
        for (long long t = 0; t < m; ++t)
          if (f1[static_cast<size_t>(t)] && f2[static_cast<size_t>(t)]) disj = false;
        bool closure_disj = disj && !(rat_frac(j2.a - j1.b) == 0) && !(rat_frac(j1.a - j2.b) == 0);
        if (closure_disj) {
          MirrorElement lhs = mirror_hall_product(j1, j2, q);
          MirrorElement rhs = mirror_hall_product(j2, j1, q);
          ++rep.relations_checked;
          if (!mirror_sub(lhs, rhs).terms.empty()) {
            fail("mirror commute relation at " + j1.to_string() + "," + j2.to_string());
            return rep;
          }
        }
      }
    }
  }
  return rep;
}

DTypeCase dtype_case_from_string(const std::string& s) {
  if (s == "T") return DTypeCase::T;
  if (s == "Y") return DTypeCase::Y;
  if (s == "V") return DTypeCase::V;
  if (s == "T'" || s == "Tp") return DTypeCase::Tp;
  if (s == "Y'" || s == "Yp") return DTypeCase::Yp;
  if (s == "V'" || s == "Vp") return DTypeCase::Vp;
  throw parse_error("unknown D-type case: " + s);
}

std::pair<GradedDims, GradedDims> dtype_hom_ext(DTypeCase c, const Rat& a, const Rat& b) {
  switch (c) {
    case DTypeCase::T: return {{0, 0}, {0, 1}};   // 0 and k[-1]
    case DTypeCase::Tp: return {{0, 1}, {0, 0}};  // k[-1] and 0
    case DTypeCase::Y: return {{a > b ? 1LL : 0LL, 0}, {0, 0}};
    case DTypeCase::Yp: return {{a > b ? 1LL : 0LL, 0}, {0, 0}};
    case DTypeCase::V: return {{0, 0}, {0, 0}};
    case DTypeCase::Vp: return {{0, 0}, {0, 0}};
  }
  throw precondition_error("unhandled case");
}

}  // namespace circlehall
