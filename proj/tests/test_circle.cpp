#include <doctest.h>

#include "circlehall/circle.hpp"

using namespace circlehall;

TEST_CASE("interval Euler form on half cells") {
  StepFunction a = StepFunction::indicator(Arc::interval(Rat(0), Rat(1, 2)));
  StepFunction b = StepFunction::indicator(Arc::interval(Rat(1, 2), Rat(1)));
  CHECK(interval_euler_form(a, a) == 1);
  CHECK(interval_euler_form(a, b) == -1);
  // at denominator 2 the successor of the second cell wraps to the first
  CHECK(interval_euler_form(b, a) == -1);
  StepFunction delta = StepFunction::constant(1);
  CHECK(interval_euler_form(delta, delta) == 0);
}

TEST_CASE("simple-object table at small n") {
  // <S_i, S_j> = 1 (i=j), -1 (j=i+1), 0 otherwise, for all n <= 6
  for (long long n = 2; n <= 6; ++n) {
    for (long long i = 1; i <= n; ++i)
      for (long long j = 1; j <= n; ++j) {
        StepFunction si = StepFunction::unit(n, i), sj = StepFunction::unit(n, j);
        long long expect = i == j ? 1 : (j == (i % n) + 1 ? -1 : 0);
        CHECK(interval_euler_form(si, sj) == expect);
      }
    StepFunction delta = StepFunction::constant(1);
    CHECK(interval_euler_form(delta, StepFunction::unit(n, 1)) == 0);
    CHECK(interval_euler_form(StepFunction::unit(n, 1), delta) == 0);
  }
}

TEST_CASE("K-class Euler form") {
  KClass O(1, StepFunction::zero());
  CHECK(kclass_euler_form(O, O, 0) == 1);  // <O, O> = 1 - g
  CHECK(kclass_euler_form(O, O, 2) == -1);
  KClass delta(0, StepFunction::constant(1));
  CHECK(kclass_euler_form(O, delta, 0) == 1);
  CHECK(kclass_euler_form(delta, O, 0) == -1);
  // torsion vs line bundle picks out r e_1 / -d_n s
  KClass half(0, StepFunction::indicator(Arc::interval(Rat(0), Rat(1, 2))));
  CHECK(kclass_euler_form(half, O, 1) == 0);   // -d_n s with d = (1,0)
  CHECK(kclass_euler_form(O, half, 1) == 1);   // r e_1 with e = (1,0)
}

TEST_CASE("bilinearity sampled") {
  auto f1 = StepFunction(4, {1, -2, 0, 3});
  auto f2 = StepFunction(3, {2, 0, -1});
  auto f3 = StepFunction(2, {1, 1});
  CHECK(interval_euler_form(f1 + f2, f3) ==
        interval_euler_form(f1, f3) + interval_euler_form(f2, f3));
  CHECK(interval_euler_form(f3, f1 + f2) ==
        interval_euler_form(f3, f1) + interval_euler_form(f3, f2));
  // K-class form: bilinear, and the symmetric variant is the symmetrization
  KClass a(1, f1), b(-2, f2), c(3, f3);
  for (long long g : {0LL, 1LL, 2LL}) {
    CHECK(kclass_euler_form(a + b, c, g) ==
          kclass_euler_form(a, c, g) + kclass_euler_form(b, c, g));
    CHECK(kclass_euler_form(c, a + b, g) ==
          kclass_euler_form(c, a, g) + kclass_euler_form(c, b, g));
    CHECK(symmetric_kclass_euler_form(a, b, g) ==
          kclass_euler_form(a, b, g) + kclass_euler_form(b, a, g));
    CHECK(symmetric_kclass_euler_form(a, b, g) == symmetric_kclass_euler_form(b, a, g));
  }
}

TEST_CASE("lattice dictionary is inverse pair") {
  std::vector<long long> d{3, -1, 0, 2};
  StepFunction f = step_from_lattice(d);
  CHECK(lattice_from_step(f, 4) == d);
  // normalized representative round-trips as a function
  StepFunction g(6, {2, 2, 2, -1, -1, -1});
  CHECK(g.denominator() == 2);
  CHECK(lattice_from_step(g, 6) == std::vector<long long>{2, 2, 2, -1, -1, -1});
}

TEST_CASE("refinement") {
  StepFunction f(2, {3, 5});
  CHECK(f.values_at(4) == std::vector<long long>{3, 3, 5, 5});
  CHECK(f.refined(2) == f);
  // monoid action and Euler invariance
  StepFunction g(3, {1, 0, -2});
  CHECK(interval_euler_form(f.refined(6), g.refined(6)) == interval_euler_form(f, g));
  CHECK(f.refined(4).refined(8) == f.refined(8));
  CHECK_THROWS_AS(f.refined(3), precondition_error);
}

TEST_CASE("one-sided limits") {
  StepFunction f(2, {7, 9});
  CHECK(f.right_limit(Rat(0)) == 7);
  CHECK(f.left_limit(Rat(0)) == 9);
  CHECK(f.left_limit(Rat(1, 2)) == 7);
  CHECK(f.right_limit(Rat(1, 2)) == 9);
  CHECK(f.left_limit(Rat(1, 3)) == 7);
  CHECK(f.right_limit(Rat(1, 3)) == 7);
}

TEST_CASE("stack invariants") {
  // structure sheaf has degree zero
  auto si = stack_invariants(2, 0, KClass(1, StepFunction::zero()));
  CHECK(si.deg_n == 0);
  CHECK(si.virtual_genus == Rat(-1, 2));
  // chi_3(O) at genus 1
  auto s3 = stack_invariants(3, 1, KClass(1, StepFunction::zero()));
  CHECK(s3.chi_n == Rat(-3));
  // torsion class has infinite slope
  auto st = stack_invariants(2, 0, KClass(0, StepFunction::constant(1)));
  CHECK(st.slope_infinite);
  CHECK(st.deg_n == Rat(1));
}

TEST_CASE("arcs") {
  Arc wrap = Arc::interval(Rat(2, 3), Rat(1, 3));
  CHECK(wrap.len == Rat(2, 3));
  CHECK(wrap.right.value() == Rat(1, 3));
  CHECK(wrap.is_strict());
  Arc full = Arc::interval(Rat(0), Rat(1));
  CHECK(!full.is_strict());
  CHECK(Arc(CirclePoint(Rat(1, 2)), Rat(3, 2)).denominator() == 2);
  CHECK_THROWS_AS(Arc(CirclePoint(Rat(0)), Rat(0)), precondition_error);
  // wrapped indicator takes value 2 where the long arc overlaps itself
  StepFunction two = StepFunction::indicator(Arc(CirclePoint(Rat(1, 2)), Rat(3, 2)));
  CHECK(two.values_at(2) == std::vector<long long>{2, 1});
}
