#include <doctest.h>

#include "circlehall/words.hpp"

using namespace circlehall;

TEST_CASE("chevalley expansion") {
  int q = 2;
  // one cell expands to itself
  DoubleElement e1 = chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(1, 3))), 3, q);
  REQUIRE(e1.terms.size() == 1);
  CHECK(e1.terms.begin()->first.e_word == std::vector<int>{1});
  CHECK(e1.terms.begin()->second == Scalar::one(q));

  // E_{[0,2/3)} = v^{1/2} E_1 E_2 - v^{-1/2} E_2 E_1
  DoubleElement e = chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(2, 3))), 3, q);
  NormalWord w12, w21;
  w12.e_word = {1, 2};
  w12.k.assign(3, 0);
  w21.e_word = {2, 1};
  w21.k.assign(3, 0);
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms.at(w12) == Scalar::v_half_pow(q, 1));
  CHECK(e.terms.at(w21) == -Scalar::v_half_pow(q, -1));

  // F_{[0,2/3)} = v^{-1/2} F_2 F_1 - v^{1/2} F_1 F_2
  DoubleElement f = chevalley_expand(GeneratorSymbol(GenKind::F, Arc::interval(Rat(0), Rat(2, 3))), 3, q);
  NormalWord f21, f12;
  f21.f_word = {2, 1};
  f21.k.assign(3, 0);
  f12.f_word = {1, 2};
  f12.k.assign(3, 0);
  CHECK(f.terms.at(f21) == Scalar::v_half_pow(q, -1));
  CHECK(f.terms.at(f12) == -Scalar::v_half_pow(q, 1));

  // K expands to the lattice vector of its indicator
  DoubleElement k = chevalley_expand(GeneratorSymbol(GenKind::K, Arc::interval(Rat(0), Rat(2, 3))), 3, q);
  REQUIRE(k.terms.size() == 1);
  CHECK(k.terms.begin()->first.k == std::vector<long long>{1, 1, 0});

  CHECK_THROWS_AS(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(1))), precondition_error);
}

TEST_CASE("straighten normal form") {
  int q = 2;
  long long n = 2;
  Arc j = Arc::interval(Rat(0), Rat(1, 2));
  // F_J E_J -> E_J F_J - (K_J - K_J^{-1})/(v - v^{-1})
  DoubleElement s = straighten({GeneratorSymbol(GenKind::F, j), GeneratorSymbol(GenKind::E, j)}, n, q);
  NormalWord ef;
  ef.e_word = {1};
  ef.f_word = {1};
  ef.k.assign(2, 0);
  REQUIRE(s.terms.count(ef));
  CHECK(s.terms.at(ef) == Scalar::one(q));
  NormalWord kp, km;
  kp.k = {1, 0};
  km.k = {-1, 0};
  Scalar inv = (Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1)).inverse();
  CHECK(s.terms.at(kp) == -inv);
  CHECK(s.terms.at(km) == inv);

  // idempotence: restraightening the output is stable under multiplication by 1
  DoubleElement again = DoubleElement::one(n, q) * s;
  CHECK((again - s).is_syntactically_zero());

  // grading is conserved
  CHECK(s.grading() == std::vector<long long>{0, 0});
  DoubleElement mixed = straighten({GeneratorSymbol(GenKind::E, j), GeneratorSymbol(GenKind::E, j),
                                    GeneratorSymbol(GenKind::F, j)},
                                   n, q);
  CHECK(mixed.grading() == std::vector<long long>{1, 0});
}

TEST_CASE("straighten disjoint EF commute") {
  int q = 2;
  long long n = 4;
  Arc j1 = Arc::interval(Rat(0), Rat(1, 4)), j2 = Arc::interval(Rat(1, 2), Rat(3, 4));
  DoubleElement a = straighten({GeneratorSymbol(GenKind::F, j1), GeneratorSymbol(GenKind::E, j2)}, n, q);
  DoubleElement b = straighten({GeneratorSymbol(GenKind::E, j2), GeneratorSymbol(GenKind::F, j1)}, n, q);
  CHECK((a - b).is_syntactically_zero());
}

TEST_CASE("K conjugation through straighten") {
  int q = 3;
  long long n = 2;
  Arc i = Arc::interval(Rat(0), Rat(1, 2)), j = Arc::interval(Rat(1, 2), Rat(1));
  RelationCertificate dj = verify_relation(RelationFamily::DJ, i, j, n, q);
  CHECK(dj.holds);
  // straighten(K_I E_J K_I^{-1}) = v^{(chi_I, chi_J)} E_J
  DoubleElement lhs = straighten({GeneratorSymbol(GenKind::K, i), GeneratorSymbol(GenKind::E, j),
                                  GeneratorSymbol(GenKind::Kinv, i)},
                                 n, q);
  long long form = symmetric_interval_euler_form(StepFunction::indicator(i), StepFunction::indicator(j));
  CHECK(form == -2);
  DoubleElement rhs =
      straighten({GeneratorSymbol(GenKind::E, j)}, n, q).scaled(Scalar::v_pow(q, form));
  CHECK((lhs - rhs).is_syntactically_zero());
}

TEST_CASE("positive part evaluation") {
  int q = 2;
  long long n = 3;
  // E_{[0,1/3)} evaluates to v^{1/2} 1_{S_1}
  HallElement e = evaluate_positive_part(
      chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(1, 3))), n, q));
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms.at(TorsionObject::segment(n, 1, 1)) == Scalar::v_half_pow(q, 1));
  // joined word evaluates to v^{1/2} 1_{S_{J1 u J2}} for adjacent cells
  HallElement u = evaluate_positive_part(
      chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(2, 3))), n, q));
  REQUIRE(u.terms.size() == 1);
  CHECK(u.terms.at(TorsionObject::segment(n, 2, 2)) == Scalar::v_half_pow(q, 1));
  // empty word is the unit
  CHECK(evaluate_positive_part(DoubleElement::one(n, q)) == HallElement::unit(n, q));
  // multiplicativity on sampled words
  DoubleElement w1 = chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(1, 3), Rat(1))), n, q);
  DoubleElement w2 = chevalley_expand(GeneratorSymbol(GenKind::E, Arc::interval(Rat(0), Rat(1, 3))), n, q);
  CHECK(evaluate_positive_part(w1 * w2) ==
        hall_product(evaluate_positive_part(w1), evaluate_positive_part(w2)));
}

TEST_CASE("relation families exhaustively at level 2 and 3") {
  for (long long n : {2LL, 3LL})
    for (int q : {2, 3}) {
      std::vector<RelationCertificate> failures;
      long long count = verify_all_relations(n, q, Bounds::defaults_for(q), &failures);
      CHECK(count > 0);
      CHECK(failures.empty());
    }
}

TEST_CASE("quantum Serre relations in the Hall model") {
  // adjacent cells with strict union: cubic Serre relations follow from the
  // presentation; check them directly at levels 3 and 4
  for (long long n : {3LL, 4LL}) {
    int q = 2;
    Bounds b = Bounds::with_total(8);
    for (long long i = 1; i <= n; ++i) {
      Arc j1(CirclePoint(Rat(i, n)), Rat(1, n));
      Arc j2(CirclePoint(Rat(i + 1, n)), Rat(1, n));
      auto E = [&](const Arc& a) {
        return evaluate_positive_part(chevalley_expand(GeneratorSymbol(GenKind::E, a), n, q), b);
      };
      HallElement e1 = E(j1), e2 = E(j2);
      Scalar two = Scalar::quantum_integer(q, 2);
      HallElement lhs = hall_product(hall_product(e1, e1, b), e2, b) -
                        hall_product(hall_product(e1, e2, b), e1, b).scaled(two) +
                        hall_product(e2, hall_product(e1, e1, b), b);
      CHECK(lhs.is_zero());
      HallElement rhs = hall_product(hall_product(e2, e2, b), e1, b) -
                        hall_product(hall_product(e2, e1, b), e2, b).scaled(two) +
                        hall_product(e1, hall_product(e2, e2, b), b);
      CHECK(rhs.is_zero());
    }
  }
}

TEST_CASE("generator coproduct components") {
  int q = 2;
  long long n = 4;
  GeneratorSymbol e(GenKind::E, Arc::interval(Rat(0), Rat(1, 2)));
  // middle term at c = 1/4
  GeneratorCoproductTerm t = coproduct_generator_component(e, Rat(1, 4), n, q);
  CHECK(t.coeff == Scalar::v_half_pow(q, -1) * (Scalar::v_pow(q, 1) - Scalar::v_pow(q, -1)));
  REQUIRE(t.left.kexp.has_value());
  CHECK(*t.left.kexp == StepFunction::indicator(Arc::interval(Rat(1, 4), Rat(1, 2))));
  // boundary c = a: K (x) E
  GeneratorCoproductTerm k = coproduct_generator_component(e, Rat(0), n, q);
  CHECK(k.left.terms.at(TorsionObject::zero()) == Scalar::one(q));
  CHECK(*k.left.kexp == StepFunction::indicator(Arc::interval(Rat(0), Rat(1, 2))));
  // K is grouplike
  GeneratorSymbol kk(GenKind::K, Arc::interval(Rat(0), Rat(1, 2)));
  GeneratorCoproductTerm g = coproduct_generator_component(kk, Rat(0), n, q);
  CHECK(*g.left.kexp == *g.right.kexp);

  // cross-check the middle term against the Hall coproduct of E_J
  HallElement ej = evaluate_positive_part(chevalley_expand(e, n, q));
  StepFunction alpha = StepFunction::indicator(Arc::interval(Rat(0), Rat(1, 4)));
  StepFunction beta = StepFunction::indicator(Arc::interval(Rat(1, 4), Rat(1, 2)));
  TensorComponent comp = coproduct_component(ej, alpha, beta);
  // expected single entry: coeff * E_left(M) * E_right(N)
  auto key = std::make_pair(TorsionObject::segment(n, 1, 1), TorsionObject::segment(n, 2, 1));
  REQUIRE(comp.terms.count(key));
  Scalar via_formula = t.coeff * t.left.terms.at(key.first) * t.right.terms.at(key.second);
  CHECK(comp.terms.at(key) == via_formula);
}

TEST_CASE("word parsing") {
  auto w = parse_word("F[0,1/2) E[0,1/2) K[1/2,1) K^-1[0,1)");
  REQUIRE(w.size() == 4);
  CHECK(w[0].kind == GenKind::F);
  CHECK(w[1].kind == GenKind::E);
  CHECK(w[2].kind == GenKind::K);
  CHECK(w[3].kind == GenKind::Kinv);
  CHECK(w[3].interval.len == Rat(1));
  CHECK_THROWS_AS(parse_word("G[0,1/2)"), parse_error);
  CHECK_THROWS_AS(parse_word("E[0;1/2)"), parse_error);
}
