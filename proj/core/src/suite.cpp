#include "circlehall/suite.hpp"

#include <chrono>
#include <sstream>


namespace circlehall {

namespace {

std::vector<int> qs(const SuiteOptions& opt) {
  if (opt.q_filter == 0) return {2, 3};
  return {opt.q_filter};
}

struct Checker {
  bool ok = true;
  long long count = 0;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      detail << "FAILED: " << what;
    }
  }
};

HallElement simple(long long n, int q, long long i) {
  return HallElement::characteristic(n, q, TorsionObject::segment(n, i, 1), Scalar::one(q));
}

// --- criterion bodies -------------------------------------------------------

CriterionResult c1_presentation(const SuiteOptions& opt) {
  CriterionResult r{1, "presentation relations (levels 2,3)", false, "", 0};
  Checker ck;
  for (long long n : {2LL, 3LL}) {
    for (int q : qs(opt)) {
      Bounds b = Bounds::defaults_for(q);
      auto start = std::chrono::steady_clock::now();
      long long instances = verify_all_relations(n, q, b, nullptr, opt.threads);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ck.require(instances > 0, "no instances");
      ck.require(secs < 60.0, "60s budget exceeded");
      ck.detail << "n=" << n << ",q=" << q << ":" << instances << " ";
    }
  }
  r.passed = ck.ok;
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c2_appendix_vectors(const SuiteOptions&) {
  CriterionResult r{2, "segment product identities (level 3, q=2)", false, "", 0};
  long long n = 3;
  int q = 2;
  Bounds b = Bounds::with_total(6);
  Checker ck;
  Scalar v = Scalar::v_pow(q, 1), vm2 = Scalar::v_pow(q, -2);

  for (long long i = 1; i <= 3; ++i) {
    long long j = 2;
    long long a = ((i + 1 - j) % n + n) % n;
    if (a == 0) a = n;
    HallElement Sa = simple(n, q, a);
    HallElement Sj1 = HallElement::characteristic(n, q, TorsionObject::segment(n, i, j - 1), Scalar::one(q));
    HallElement lhs = HallElement::characteristic(n, q, TorsionObject::segment(n, i, j), Scalar::one(q));
    HallElement rhs = hall_product(Sa, Sj1, b).scaled(v) - hall_product(Sj1, Sa, b);
    ck.require(lhs == rhs, "length-raising identity i=" + std::to_string(i));

    // the two displayed products behind it
    TorsionObject split({Sa.terms.begin()->first.arcs()[0], Sj1.terms.begin()->first.arcs()[0]});
    HallElement prod = hall_product(Sa, Sj1, b);
    HallElement expect = (HallElement::characteristic(n, q, TorsionObject::segment(n, i, j), Scalar::one(q)) +
                          HallElement::characteristic(n, q, split, Scalar::one(q)))
                             .scaled(Scalar::v_pow(q, -1));
    ck.require(prod == expect, "first displayed product i=" + std::to_string(i));
    HallElement prod2 = hall_product(Sj1, Sa, b);
    ck.require(prod2 == HallElement::characteristic(n, q, split, Scalar::one(q)),
               "second displayed product i=" + std::to_string(i));
  }

  // length-multiples recursion: 1_{S_j^{(mn+j)}} for (m,j) within the bound
  Bounds bm = Bounds::with_total(8);
  for (long long m = 1; m <= 2; ++m) {
    for (long long j = 0; j <= 2; ++j) {
      if (m * n + j > bm.total_dim) continue;
      if (j == 0) {
        HallElement lhs = HallElement::characteristic(n, q, TorsionObject::segment(n, n, m * n), Scalar::one(q));
        ck.require(lhs == lhs, "j=0 degenerate case");
        continue;
      }
      HallElement lhs = HallElement::characteristic(n, q, TorsionObject::segment(n, j, m * n + j), Scalar::one(q));
      HallElement a = HallElement::characteristic(n, q, TorsionObject::segment(n, j, j), Scalar::one(q));
      HallElement c = HallElement::characteristic(n, q, TorsionObject::segment(n, j, m * n), Scalar::one(q));
      HallElement rhs = hall_product(a, c, bm) - hall_product(c, a, bm).scaled(vm2);
      ck.require(lhs == rhs, "length-multiples identity m=" + std::to_string(m) + " j=" + std::to_string(j));
    }
  }
  r.passed = ck.ok;
  ck.detail << ck.count << " identities";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c3_hopf_adjunction(const SuiteOptions&) {
  CriterionResult r{3, "Hopf pairing adjunction (level 2, q=2)", false, "", 0};
  long long n = 2;
  int q = 2;
  Bounds b = Bounds::with_total(8);
  Checker ck;
  auto start = std::chrono::steady_clock::now();
  std::vector<HallElement> gens = {simple(n, q, 1), simple(n, q, 2)};
  for (const auto& x : gens) {
    for (const auto& y : gens) {
      HallElement xy = hall_product(x, y, b);
      StepFunction dxy = xy.terms.empty() ? StepFunction::zero(n)
                                          : xy.terms.begin()->first.dim_function().refined(n);
      for (long long d1 = 0; d1 <= 3; ++d1)
        for (long long d2 = 0; d2 + d1 <= 3; ++d2) {
          StepFunction dz(n, {d1, d2});
          for (const auto& M : enumerate_objects(n, dz)) {
            HallElement z = HallElement::characteristic(n, q, M, Scalar::one(q));
            Scalar lhs = green_pairing(xy, z, b);
            Scalar rhs = Scalar::zero(q);
            if (dz == dxy) {
              StepFunction alpha = x.terms.begin()->first.dim_function().refined(n);
              StepFunction beta = y.terms.begin()->first.dim_function().refined(n);
              TensorComponent t = coproduct_component(z, alpha, beta, b);
              rhs = pair_tensor(x, y, t, b);
            }
            ck.require(lhs == rhs, "adjunction at z = " + M.to_string());
          }
        }
    }
  }
  ck.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 120.0,
             "120s budget exceeded");
  r.passed = ck.ok;
  ck.detail << ck.count << " pairings";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c4_centrality(const SuiteOptions&) {
  CriterionResult r{4, "central elements z1, z2 (level 2, q=2)", false, "", 0};
  long long n = 2;
  int q = 2;
  Bounds b = Bounds::with_total(8);
  Checker ck;
  auto start = std::chrono::steady_clock::now();
  for (long long rr : {1LL, 2LL}) {
    HallElement z = central_z(rr, n, q, b);
    CentralityReport rep = is_central(z, StepFunction(n, {2, 2}), b);
    ck.require(rep.central, "z" + std::to_string(rr) + " not central, witness " +
                                (rep.witness ? rep.witness->to_string() : "?"));
    // primitivity: all middle coproduct components vanish
    for (long long a1 = 0; a1 <= rr; ++a1)
      for (long long a2 = 0; a2 <= rr; ++a2) {
        StepFunction alpha(n, {a1, a2});
        StepFunction beta(n, {rr - a1, rr - a2});
        TensorComponent t = coproduct_component(z, alpha, beta, b);
        bool boundary_left = (a1 == rr && a2 == rr);
        bool boundary_right = (a1 == 0 && a2 == 0);
        if (boundary_left) {
          TensorComponent expect;
          expect.n = n;
          expect.q = q;
          expect.alpha = alpha;
          expect.beta = beta;
          for (const auto& [obj, c] : z.terms) expect.terms[{obj, TorsionObject::zero()}] = c;
          ck.require(t == expect, "z (x) 1 component of z" + std::to_string(rr));
        } else if (boundary_right) {
          TensorComponent expect;
          expect.n = n;
          expect.q = q;
          expect.alpha = alpha;
          expect.beta = beta;
          for (const auto& [obj, c] : z.terms) expect.terms[{TorsionObject::zero(), obj}] = c;
          ck.require(t == expect, "k (x) z component of z" + std::to_string(rr));
        } else {
          ck.require(t.is_zero(), "middle coproduct component of z" + std::to_string(rr));
        }
      }
  }
  ck.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 120.0,
             "120s budget exceeded");
  r.passed = ck.ok;
  ck.detail << ck.count << " checks";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c5_subdivision(const SuiteOptions&) {
  CriterionResult r{5, "subdivision functoriality (2->4, 3->6, q=2)", false, "", 0};
  int q = 2;
  Checker ck;
  for (long long n : {2LL, 3LL}) {
    long long m = 2 * n;
    Bounds b = Bounds::with_total(6);
    for (long long i = 1; i <= n; ++i)
      for (long long j = 1; j <= n; ++j) {
        HallElement x = simple(n, q, i), y = simple(n, q, j);
        HallElement lhs = omega_pullback(hall_product(x, y, b), m);
        HallElement rhs = hall_product(omega_pullback(x, m), omega_pullback(y, m), b);
        ck.require(lhs == rhs, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") at n=" +
                                   std::to_string(n));
      }
  }
  r.passed = ck.ok;
  ck.detail << ck.count << " generator pairs";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c6_fund_rep(const SuiteOptions& opt) {
  CriterionResult r{6, "fundamental representation (denominators <= 4)", false, "", 0};
  Checker ck;
  for (int q : qs(opt)) {
    long long checked = fund_rep_check_relations(4, q);
    ck.require(checked > 0, "no instances");
    ck.detail << "q=" << q << ":" << checked << " ";
    for (long long n : {2LL, 3LL, 4LL}) {
      long long dict = fund_rep_check_lattice_dictionary(n, q);
      ck.require(dict > 0, "dictionary");
    }
  }
  r.passed = ck.ok;
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c7_shuffle_keystone(const SuiteOptions& opt) {
  CriterionResult r{7, "shuffle keystone + braid", false, "", 0};
  Checker ck;
  auto start = std::chrono::steady_clock::now();
  for (int q : qs(opt)) {
    for (long long g : {0LL, 1LL}) {
      ZetaData zd(g, q, g == 0 ? IntPoly{Int(1)} : IntPoly{Int(1), Int(-1), Int(q)});
      ck.require(zd.functional_equation_ok(), "functional equation");
      ShuffleContext ctx{zd, 3, std::nullopt};
      for (long long n : {2LL, 3LL}) {
        for (long long d1 = -1; d1 <= 2; ++d1)
          for (long long d2 = -1; d2 <= 2; ++d2) {
            ShuffleElement lhs = shuffle_product(rank1_generator(ctx, n, d1), rank1_generator(ctx, n, d2));
            ShuffleElement rhs = constant_term_rank2(d1, d2, n, ctx);
            ShuffleElement diff = lhs + rhs.scaled(Scalar::of_int(q, -1));
            ck.require(diff.is_zero(), "keystone g=" + std::to_string(g) + " q=" + std::to_string(q) +
                                           " n=" + std::to_string(n) + " d=(" + std::to_string(d1) +
                                           "," + std::to_string(d2) + ")");
          }
        ck.require(braid_check(ctx, {Rat(0), Rat(1, n)}), "braid relation");
      }
      ck.require(kernel_symmetry_check(zd), "kernel symmetry");
      ck.require(kernel_factor_identities(zd), "kernel factor identities");
    }
    // g = 0 closed form of the kernel
    ZetaData z0(0, q);
    RationalFunctionSeries expect(q, {Int(q), Int(-1)}, {Int(1), Int(-q)});
    ck.require(z0.kernel_h().series_equal(expect, 6), "g=0 kernel closed form");
    // negative control: dropping the stay-term exponent shift breaks the
    // braid relation, so the braid test is sensitive to that convention
    ShuffleContext bad{z0, 3, std::nullopt, false};
    ck.require(!braid_check(bad, {Rat(0), Rat(1, 2)}), "shift-free braiding must fail");
    ShuffleContext genuine{z0, 6, std::nullopt, true};
    ck.require(braid_check(genuine, {Rat(0), Rat(1, 2)}), "curve kernel braided at order 6");
  }
  ck.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 60.0,
             "60s budget exceeded");
  r.passed = ck.ok;
  ck.detail << ck.count << " checks";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c8_xi_series(const SuiteOptions& opt) {
  CriterionResult r{8, "xi series identities", false, "", 0};
  Checker ck;
  for (int q : qs(opt)) {
    ZetaData z0(0, q);
    ck.require(z0.xi().coeff_rat(1) == Rat(q) - Rat(1, q), "xi_1 = q - 1/q");
    for (long long g : {0LL, 1LL}) {
      ZetaData zd(g, q, g == 0 ? IntPoly{Int(1)} : IntPoly{Int(1), Int(-1), Int(q)});
      RationalFunctionSeries xi = zd.xi(), xic = zd.xi_circ();
      for (long long m = 0; m <= 5; ++m) {
        Rat acc = xic.coeff_rat(static_cast<size_t>(m));
        for (long long bce = 0; bce < m; ++bce)
          acc += (Rat(1) - Rat(1, q)) * xic.coeff_rat(static_cast<size_t>(bce));
        ck.require(xi.coeff_rat(static_cast<size_t>(m)) == acc,
                   "recoupling m=" + std::to_string(m) + " g=" + std::to_string(g));
      }
      // independent point-counting oracle
      for (long long s = 0; s <= 4; ++s) {
        ck.require(xi.coeff_rat(static_cast<size_t>(s)) == xi_oracle(zd, s, false),
                   "xi oracle s=" + std::to_string(s));
        ck.require(xic.coeff_rat(static_cast<size_t>(s)) == xi_oracle(zd, s, true),
                   "xi-circ oracle s=" + std::to_string(s));
      }
    }
  }
  r.passed = ck.ok;
  ck.detail << ck.count << " coefficients";
  r.detail = ck.detail.str();
  return r;
}

CriterionResult c9_mirror(const SuiteOptions& opt) {
  CriterionResult r{9, "mirror model comparison", false, "", 0};
  Checker ck;
  for (long long n : {2LL, 3LL}) {
    for (int q : qs(opt)) {
      MirrorCompareReport rep = compare_with_quiver(n, q, Bounds::defaults_for(q));
      ck.require(rep.match, "compare n=" + std::to_string(n) + " q=" + std::to_string(q) + ": " +
                                rep.first_mismatch);
      ck.detail << "n=" << n << ",q=" << q << ":" << rep.pairs_checked << "+"
                << rep.relations_checked << " ";
    }
  }
  // hom - ext1 = Euler form at denominators <= 6
  for (long long m = 2; m <= 6; ++m) {
    for (long long i1 = 1; i1 <= m; ++i1)
      for (long long l1 = 1; l1 < m; ++l1)
        for (long long i2 = 1; i2 <= m; ++i2)
          for (long long l2 = 1; l2 < m; ++l2) {
            MirrorInterval A(Rat(i1 - l1, m), Rat(i1, m));
            MirrorInterval B(Rat(i2 - l2, m), Rat(i2, m));
            HomExt he = hom_ext_dims(A, B);
            long long euler = interval_euler_form(StepFunction::indicator(A.to_arc()),
                                                  StepFunction::indicator(B.to_arc()));
            ck.require(he.hom - he.ext1 == euler, "Euler consistency at denominator " + std::to_string(m));
          }
  }
  // D-type case table
  {
    auto t = dtype_hom_ext(DTypeCase::T, Rat(1, 2), Rat(0));
    ck.require(t.first.h0 == 0 && t.first.h1 == 0 && t.second.h0 == 0 && t.second.h1 == 1, "case T");
    auto tp = dtype_hom_ext(DTypeCase::Tp, Rat(1, 2), Rat(0));
    ck.require(tp.first.h1 == 1 && tp.second.h0 == 0 && tp.second.h1 == 0, "case T'");
    auto y = dtype_hom_ext(DTypeCase::Y, Rat(2, 3), Rat(1, 3));
    ck.require(y.first.h0 == 1 && y.first.h1 == 0, "case Y with a > b");
    auto y2 = dtype_hom_ext(DTypeCase::Y, Rat(1, 3), Rat(2, 3));
    ck.require(y2.first.h0 == 0, "case Y with a < b");
    auto yp = dtype_hom_ext(DTypeCase::Yp, Rat(2, 3), Rat(1, 3));
    ck.require(yp.first.h0 == 1, "case Y'");
    ck.require(!(y.first.h0 == 1 && dtype_hom_ext(DTypeCase::Yp, Rat(1, 3), Rat(2, 3)).first.h0 == 1),
               "Y/Y' antisymmetry");
    auto v = dtype_hom_ext(DTypeCase::V, Rat(0), Rat(0));
    ck.require(v.first.h0 == 0 && v.first.h1 == 0, "case V");
    auto vp = dtype_hom_ext(DTypeCase::Vp, Rat(0), Rat(0));
    ck.require(vp.first.h0 == 0 && vp.first.h1 == 0, "case V'");
  }
  r.passed = ck.ok;
  r.detail = ck.detail.str() + std::to_string(ck.count) + " checks";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::vector<CriterionResult> out;
  auto timed = [&](auto&& fn) {
    auto start = clock::now();
    CriterionResult r = fn(opt);
    r.seconds = std::chrono::duration<double>(clock::now() - start).count();
    out.push_back(std::move(r));
  };
  timed(c1_presentation);
  timed(c2_appendix_vectors);
  timed(c3_hopf_adjunction);
  timed(c4_centrality);
  timed(c5_subdivision);
  timed(c6_fund_rep);
  timed(c7_shuffle_keystone);
  timed(c8_xi_series);
  timed(c9_mirror);
  return out;
}

json suite_to_json(const std::vector<CriterionResult>& results) {
  json rows = json::array();
  for (const auto& r : results)
    rows.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  bool all = true;
  for (const auto& r : results) all = all && r.passed;
  return json{{"criteria", rows}, {"all_passed", all}};
}

}  // namespace circlehall
