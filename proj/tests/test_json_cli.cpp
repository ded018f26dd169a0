#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "circlehall/json_io.hpp"

using namespace circlehall;

TEST_CASE("scalar and element round trips") {
  Scalar s(4, {Rat(1, 2), Rat(-3), Rat(0), Rat(7, 5)});
  CHECK(scalar_from_json(to_json(s)) == s);

  StepFunction f(4, {1, -2, 0, 3});
  CHECK(step_from_json(to_json(f)) == f);

  HallElement e = HallElement::zero(2, 2);
  e.terms[TorsionObject::segment(2, 1, 2)] = Scalar::v_pow(2, -1);
  e.terms[TorsionObject({Arc(CirclePoint(Rat(0)), Rat(1, 2)),
                         Arc(CirclePoint(Rat(1, 2)), Rat(1, 2))})] = Scalar::of_rat(2, Rat(3, 7));
  e.kexp = StepFunction(2, {1, -1});
  HallElement back = hall_from_json(to_json(e));
  CHECK(back == e);
  CHECK(back.kexp == e.kexp);

  KClass k(2, StepFunction(2, {1, 0}));
  CHECK(kclass_from_json(to_json(k)) == k);
}

TEST_CASE("rational strings") {
  CHECK(rat_to_string(Rat(-3, 6)) == "-1/2");
  CHECK(rat_from_string("-1/2") == Rat(-1, 2));
  CHECK(rat_from_string("4") == Rat(4));
  CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
  CHECK_THROWS_AS(rat_from_string("x"), parse_error);
}

#ifdef CIRCLEHALL_CLI_PATH
namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string outfile = std::string(CIRCLEHALL_CLI_PATH) + ".test.out";
  std::string cmd = std::string(CIRCLEHALL_CLI_PATH) + " " + args + " > " + outfile + " 2>/dev/null";
  int code = std::system(cmd.c_str());
  std::ifstream in(outfile);
  std::stringstream ss;
  ss << in.rdbuf();
  std::remove(outfile.c_str());
  return {WEXITSTATUS(code), ss.str()};
}

}  // namespace

TEST_CASE("cli subcommands") {
  // verify emits a certificate
  CliResult v = run_cli("verify --family join --j1 0,1/3 --j2 1/3,2/3 --n 3 --q 2");
  CHECK(v.code == 0);
  CHECK(json::parse(v.out).at("holds") == true);

  // invariants passthrough
  CliResult inv = run_cli("invariants --n 2 --g 0 --class rank=1,dim=0");
  CHECK(inv.code == 0);
  auto ji = json::parse(inv.out);
  CHECK(ji.at("deg_n") == "0");
  CHECK(ji.at("virtual_genus") == "-1/2");

  // emitted elements parse back
  CliResult hub = run_cli("hubery --kind z --r 1 --n 2 --q 2");
  CHECK(hub.code == 0);
  HallElement z1 = hall_from_json(json::parse(hub.out));
  CHECK(z1.terms.size() == 3);

  // round-trip through hall-product
  std::string left = to_json(HallElement::characteristic(3, 2, TorsionObject::segment(3, 1, 1),
                                                         Scalar::one(2)))
                         .dump();
  std::string right = to_json(HallElement::characteristic(3, 2, TorsionObject::segment(3, 2, 1),
                                                          Scalar::one(2)))
                          .dump();
  CliResult prod = run_cli("hall-product --n 3 --q 2 --left '" + left + "' --right '" + right + "'");
  CHECK(prod.code == 0);
  CHECK(hall_from_json(json::parse(prod.out)).terms.size() == 2);

  // exit codes: parse error, precondition, bound
  CHECK(run_cli("verify --family bogus --j1 0,1/2 --j2 0,1/2 --q 2").code == 1);
  CHECK(run_cli("straighten --word \"E[0,1)\" --n 2 --q 2").code == 2);
  CHECK(run_cli("hubery --kind z --r 3 --n 3 --q 2 --bound 4").code == 3);

  // shuffle and zeta
  CliResult sh = run_cli("shuffle --g 0 --q 2 --order 3 --left 'x^0 v:1/2' --right 'x^1 v:0'");
  CHECK(sh.code == 0);
  CHECK(!json::parse(sh.out).at("terms").empty());
  CliResult ze = run_cli("zeta --g 1 --q 2 --numerator 1,-1,2 --series xi --order 5");
  CHECK(ze.code == 0);
  CHECK(json::parse(ze.out).at("coefficients").size() == 6);

  // mirror surfaces
  CliResult mh = run_cli("mirror-homext --a 0,1/2 --b 1/2,1");
  CHECK(json::parse(mh.out).at("ext1") == 1);
  CliResult mc = run_cli("mirror-compare --n 2 --q 2");
  CHECK(json::parse(mc.out).at("match") == true);

  // fundrep and embed
  CliResult fr = run_cli("fundrep --q 4 --gen 'E[0,1/2)' --y 0");
  CHECK(fr.code == 0);
  CliResult em = run_cli("embed --source plus-infinity --n 2");
  CHECK(json::parse(em.out).at("affine_type_a") == true);

  // byte-identical reruns
  CliResult a1 = run_cli("hubery --kind z --r 2 --n 2 --q 2 --bound 8");
  CliResult a2 = run_cli("hubery --kind z --r 2 --n 2 --q 2 --bound 8");
  CHECK(a1.out == a2.out);
}
#endif
