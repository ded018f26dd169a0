#include <doctest.h>

#include "circlehall/torsion.hpp"

using namespace circlehall;

TEST_CASE("classify round-trips build") {
  const GFq& f2 = GFq::get(2);
  const GFq& f3 = GFq::get(3);
  for (long long n : {1LL, 2LL, 3LL}) {
    StepFunction d = StepFunction::constant(2).refined(n);
    for (const auto& m : enumerate_objects(n, d)) {
      CHECK(classify_rep(build_rep(f2, n, m)) == m);
      CHECK(classify_rep(build_rep(f3, n, m)) == m);
    }
  }
}

TEST_CASE("classification examples") {
  const GFq& f = GFq::get(2);
  // zero representation
  QuiverRep zero;
  zero.field = &f;
  zero.n = 2;
  zero.dims = {0, 0};
  zero.maps = {MatFq(f, 0, 0), MatFq(f, 0, 0)};
  CHECK(classify_rep(zero).is_zero());
  // simple at vertex 1 of the 2-cycle: arc right 1/2, length 1/2
  TorsionObject s1 = TorsionObject::segment(2, 1, 1);
  CHECK(s1.arcs()[0].right.value() == Rat(1, 2));
  CHECK(s1.arcs()[0].len == Rat(1, 2));
  CHECK(classify_rep(build_rep(f, 2, s1)) == s1);
  // single 2x2 Jordan block at n = 1
  QuiverRep jordan;
  jordan.field = &f;
  jordan.n = 1;
  jordan.dims = {2};
  MatFq x(f, 2, 2);
  x.set(1, 0, 1);
  jordan.maps = {x};
  TorsionObject j2 = classify_rep(jordan);
  CHECK(j2.arcs().size() == 1);
  CHECK(j2.arcs()[0].right.value() == Rat(0));
  CHECK(j2.arcs()[0].len == Rat(2));
  // non-nilpotent loop rejected
  QuiverRep loop = jordan;
  MatFq id = MatFq::identity(f, 2);
  loop.maps = {id};
  CHECK_THROWS_AS(classify_rep(loop), precondition_error);
}

TEST_CASE("classification is basis independent") {
  const GFq& f = GFq::get(3);
  TorsionObject m({Arc(CirclePoint(Rat(1, 2)), Rat(1)), Arc(CirclePoint(Rat(0)), Rat(1, 2))});
  QuiverRep r = build_rep(f, 2, m);
  // conjugate by an invertible change of basis at each vertex
  MatFq g0(f, 2, 2), g1(f, 2, 2);
  g0.set(0, 0, 1); g0.set(0, 1, 2); g0.set(1, 1, 1);
  g1.set(0, 1, 1); g1.set(1, 0, 2);
  std::vector<MatFq> g{g0, g1};
  std::vector<MatFq> ginv(2, MatFq(f, 2, 2));
  // inverses computed by hand for these triangular/antidiagonal forms
  ginv[0].set(0, 0, 1); ginv[0].set(0, 1, 1); ginv[0].set(1, 1, 1);
  ginv[1].set(0, 1, 2); ginv[1].set(1, 0, 1);
  CHECK((g[0] * ginv[0]) == MatFq::identity(f, 2));
  CHECK((g[1] * ginv[1]) == MatFq::identity(f, 2));
  QuiverRep conj = r;
  for (int v = 0; v < 2; ++v) conj.maps[v] = g[(v + 1) % 2] * r.maps[v] * ginv[v];
  CHECK(classify_rep(conj) == m);
}

TEST_CASE("enumeration") {
  // n=2, d=(1,1): three objects
  auto objs = enumerate_objects(2, StepFunction(2, {1, 1}));
  CHECK(objs.size() == 3);
  // d = 0: just the zero object
  auto zero = enumerate_objects(3, StepFunction::zero(3));
  CHECK(zero.size() == 1);
  CHECK(zero[0].is_zero());
  // n=1, d=(2): partitions of 2
  CHECK(enumerate_objects(1, StepFunction::constant(2)).size() == 2);
  CHECK(enumerate_objects(1, StepFunction::constant(4)).size() == 5);
  // n=3 delta classes: 3 full cycles, 3 split pairs, 1 semisimple
  CHECK(enumerate_objects(3, StepFunction::constant(1)).size() == 7);
  // dimensions all match
  StepFunction d(2, {2, 1});
  for (const auto& m : enumerate_objects(2, d)) CHECK(m.dim_function() == d);
}

TEST_CASE("aut and end") {
  // simples: Aut = units
  for (int q : {2, 3, 4, 5}) {
    AutEnd ae = aut_and_end(TorsionObject::segment(2, 1, 1), 2, q);
    CHECK(ae.end_dim == 1);
    CHECK(ae.aut_order == q - 1);
  }
  // S_1 + S_1 at n=2: GL_2(F_q)
  for (int q : {2, 3}) {
    TorsionObject m({Arc(CirclePoint(Rat(1, 2)), Rat(1, 2)), Arc(CirclePoint(Rat(1, 2)), Rat(1, 2))});
    AutEnd ae = aut_and_end(m, 2, q);
    CHECK(ae.end_dim == 4);
    CHECK(ae.aut_order == (q * q - 1) * (q * q - q));
  }
  // length-2 segment at n=2: End is scalars
  AutEnd seg = aut_and_end(TorsionObject::segment(2, 1, 2), 2, 2);
  CHECK(seg.end_dim == 1);
  CHECK(seg.aut_order == 1);
  AutEnd seg3 = aut_and_end(TorsionObject::segment(2, 1, 2), 2, 3);
  CHECK(seg3.aut_order == 2);
  CHECK_THROWS_AS(aut_and_end(TorsionObject::segment(2, 1, 2), 2, 2, 0), bound_exceeded);
}

TEST_CASE("socle structure") {
  TorsionObject m({Arc(CirclePoint(Rat(1, 2)), Rat(1, 2)), Arc(CirclePoint(Rat(0)), Rat(1, 2))});
  CHECK(m.socle_square_free(2));
  TorsionObject twice({Arc(CirclePoint(Rat(1, 2)), Rat(1, 2)), Arc(CirclePoint(Rat(1, 2)), Rat(1))});
  CHECK(!twice.socle_square_free(2));
}

TEST_CASE("finite field tables") {
  for (int q : {2, 3, 4, 5, 8, 9}) {
    const GFq& f = GFq::get(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<uint8_t>(a), f.neg(static_cast<uint8_t>(a))) == 0);
      if (a) CHECK(f.mul(static_cast<uint8_t>(a), f.inv(static_cast<uint8_t>(a))) == 1);
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          uint8_t ab = static_cast<uint8_t>(a), bb = static_cast<uint8_t>(b), cb = static_cast<uint8_t>(c);
          CHECK(f.mul(ab, f.add(bb, cb)) == f.add(f.mul(ab, bb), f.mul(ab, cb)));
        }
    }
  }
  CHECK(!GFq::is_prime_power(6));
  CHECK_THROWS_AS(GFq::get(6), precondition_error);
}

TEST_CASE("subspace counts") {
  const GFq& f2 = GFq::get(2);
  CHECK(all_subspaces(f2, 4).size() == 67);  // 1+15+35+15+1
  CHECK(subspaces_of_dim(f2, 4, 2).size() == 35);
  const GFq& f3 = GFq::get(3);
  CHECK(subspaces_of_dim(f3, 2, 1).size() == 4);
}
