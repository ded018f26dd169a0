// Batch command-line surface: every operation takes flags, emits canonical
// JSON on stdout and diagnostics on stderr. Exit codes: 0 ok, 1 parse error,
// 2 precondition violation, 3 enumeration bound exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "circlehall/embed.hpp"
#include "circlehall/suite.hpp"

using namespace circlehall;

namespace {

Arc parse_interval_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw parse_error("interval needs 'a,b': " + s);
  return Arc::interval(rat_from_string(s.substr(0, comma)), rat_from_string(s.substr(comma + 1)));
}

// "x^2 v:1/2" -> (exponent, label)
std::pair<long long, Rat> parse_shuffle_factor(const std::string& s) {
  std::istringstream is(s);
  std::string xtok, vtok;
  if (!(is >> xtok >> vtok)) throw parse_error("shuffle factor needs 'x^d v:label': " + s);
  if (xtok.rfind("x^", 0) != 0 || vtok.rfind("v:", 0) != 0)
    throw parse_error("shuffle factor needs 'x^d v:label': " + s);
  long long d = std::stoll(xtok.substr(2));
  Rat label = rat_from_string(vtok.substr(2));
  return {d, label};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the Hall algebra of the rational circle"};
  app.require_subcommand(1);

  if (const char* dir = std::getenv("CIRCLEHALL_CACHE_DIR"))
    HallCache::global().set_directory(dir);

  // common context flags, duplicated per subcommand where meaningful
  struct Ctx {
    long long n = 2;
    int q = 2;
    long long bound = 0;  // 0 = per-q default
    long long genus = 0;
    size_t order = 3;
    int threads = 1;
    long long seed = 1;
    Bounds bounds() const { return bound ? Bounds::with_total(bound) : Bounds::defaults_for(q); }
  };
  Ctx ctx;

  auto add_common = [&](CLI::App* sub, bool with_n = true) {
    if (with_n) sub->add_option("--n", ctx.n, "denominator / number of vertices");
    sub->add_option("--q", ctx.q, "prime power");
    sub->add_option("--bound", ctx.bound, "total-dimension enumeration bound");
  };

  // hall-product
  std::string left_json, right_json;
  auto* sc_prod = app.add_subcommand("hall-product", "product of two Hall elements (JSON)");
  add_common(sc_prod);
  sc_prod->add_option("--left", left_json, "left element (JSON)")->required();
  sc_prod->add_option("--right", right_json, "right element (JSON)")->required();

  // coproduct
  std::string elem_json, alpha_json, beta_json;
  auto* sc_cop = app.add_subcommand("coproduct", "graded coproduct component");
  add_common(sc_cop);
  sc_cop->add_option("--element", elem_json, "element (JSON)")->required();
  sc_cop->add_option("--alpha", alpha_json, "left degree (JSON step function)")->required();
  sc_cop->add_option("--beta", beta_json, "right degree (JSON step function)")->required();

  // pairing
  auto* sc_pair = app.add_subcommand("pairing", "Green pairing of two elements");
  add_common(sc_pair);
  sc_pair->add_option("--left", left_json, "left element (JSON)")->required();
  sc_pair->add_option("--right", right_json, "right element (JSON)")->required();

  // verify
  std::string family, j1_str, j2_str;
  auto* sc_ver = app.add_subcommand("verify", "verify one presentation relation instance");
  add_common(sc_ver);
  sc_ver->add_option("--family", family, "dj|join|nest|disjoint-nest|ef-commutator|k-join|k-commute")
      ->required();
  sc_ver->add_option("--j1", j1_str, "first interval 'a,b'")->required();
  sc_ver->add_option("--j2", j2_str, "second interval 'a,b'")->required();

  // straighten
  std::string word_str;
  auto* sc_str = app.add_subcommand("straighten", "normal form of a generator word");
  add_common(sc_str);
  sc_str->add_option("--word", word_str, "e.g. \"F[0,1/2) E[0,1/2)\"")->required();

  // hubery
  std::string kind = "z";
  long long rr = 1;
  auto* sc_hub = app.add_subcommand("hubery", "central-series elements c_r / z_r");
  add_common(sc_hub);
  sc_hub->add_option("--kind", kind, "c or z");
  sc_hub->add_option("--r", rr, "index r")->required();

  // central
  std::string bound_str = "2,2";
  auto* sc_cen = app.add_subcommand("central", "centrality check of an element");
  add_common(sc_cen);
  sc_cen->add_option("--element", elem_json, "element (JSON), or hubery:z1 / hubery:c2")->required();
  sc_cen->add_option("--dim-bound", bound_str, "componentwise bound 'd1,d2,...'");

  // shuffle
  std::string left_f, right_f;
  std::string numerator_str = "1";
  auto* sc_shuf = app.add_subcommand("shuffle", "shuffle product of two rank-1 terms");
  sc_shuf->add_option("--g", ctx.genus, "genus");
  sc_shuf->add_option("--q", ctx.q, "prime power");
  sc_shuf->add_option("--order", ctx.order, "series truncation order");
  sc_shuf->add_option("--numerator", numerator_str, "Weil numerator coefficients 'p0,p1,...'");
  sc_shuf->add_option("--left", left_f, "'x^d v:label'")->required();
  sc_shuf->add_option("--right", right_f, "'x^d v:label'")->required();

  // zeta
  std::string series_kind = "xi";
  auto* sc_zeta = app.add_subcommand("zeta", "zeta-derived series coefficients");
  sc_zeta->add_option("--g", ctx.genus, "genus");
  sc_zeta->add_option("--q", ctx.q, "prime power");
  sc_zeta->add_option("--numerator", numerator_str, "Weil numerator coefficients 'p0,p1,...'");
  sc_zeta->add_option("--series", series_kind, "zeta|xi|xi-circ|kernel");
  sc_zeta->add_option("--order", ctx.order, "expansion order");

  // mirror-compare
  auto* sc_mc = app.add_subcommand("mirror-compare", "mirror vs quiver structure constants");
  add_common(sc_mc);

  // mirror-homext
  std::string a_str, b_str;
  auto* sc_mh = app.add_subcommand("mirror-homext", "Hom/Ext dimensions of interval sheaves");
  sc_mh->add_option("--a", a_str, "first interval 'a,b' (open-closed)")->required();
  sc_mh->add_option("--b", b_str, "second interval 'a,b' (open-closed)")->required();

  // fundrep
  std::string gen_str, y_str = "0", variant = "circle", zconst_str;
  std::string zshift_str;
  auto* sc_fr = app.add_subcommand("fundrep", "apply a generator to a basis vector");
  sc_fr->add_option("--q", ctx.q, "prime power");
  sc_fr->add_option("--gen", gen_str, "generator, e.g. E[0,1/2)");
  sc_fr->add_option("--y", y_str, "basis index (rational)");
  sc_fr->add_option("--variant", variant, "circle|affine-n|heisenberg-extended");
  sc_fr->add_option("--zshift", zshift_str, "central shift amount (rational)");
  sc_fr->add_option("--zconst", zconst_str, "supplied pairing constant (scalar JSON)");

  // embed
  std::string source = "plus-infinity";
  long long target = 0;
  auto* sc_emb = app.add_subcommand("embed", "generator images of level-n embeddings");
  add_common(sc_emb);
  sc_emb->add_option("--source", source, "subdivision|plus-infinity|two-sided|successor");
  sc_emb->add_option("--target", target, "target level (subdivision)");

  // invariants
  std::string class_str = "rank=1,dim=0";
  auto* sc_inv = app.add_subcommand("invariants", "numerical invariants of a class");
  add_common(sc_inv);
  sc_inv->add_option("--g", ctx.genus, "genus");
  sc_inv->add_option("--class", class_str, "'rank=r,dim=c' or 'rank=r,dim=v1:v2:...'");

  // suite
  int q_filter = 0;
  auto* sc_suite = app.add_subcommand("suite", "run the acceptance criteria");
  sc_suite->add_option("--q", q_filter, "restrict to one prime power");
  sc_suite->add_option("--threads", ctx.threads, "worker threads");
  sc_suite->add_option("--seed", ctx.seed, "seed for sampled properties");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sc_prod->parsed()) {
      HallElement x = hall_from_json(json::parse(left_json));
      HallElement y = hall_from_json(json::parse(right_json));
      emit(to_json(hall_product(x, y, ctx.bounds())));
    } else if (sc_cop->parsed()) {
      HallElement x = hall_from_json(json::parse(elem_json));
      emit(to_json(coproduct_component(x, step_from_json(json::parse(alpha_json)),
                                       step_from_json(json::parse(beta_json)), ctx.bounds())));
    } else if (sc_pair->parsed()) {
      HallElement x = hall_from_json(json::parse(left_json));
      HallElement y = hall_from_json(json::parse(right_json));
      emit(to_json(green_pairing(x, y, ctx.bounds())));
    } else if (sc_ver->parsed()) {
      Arc j1 = parse_interval_pair(j1_str), j2 = parse_interval_pair(j2_str);
      long long need = to_ll(lcm_int(Int(j1.denominator()), Int(j2.denominator())));
      long long n = to_ll(lcm_int(Int(ctx.n), Int(need)));
      RelationCertificate cert =
          verify_relation(relation_family_from_string(family), j1, j2, n, ctx.q, ctx.bounds());
      emit(json{{"holds", cert.holds}, {"family", cert.family}, {"lhs", cert.lhs}, {"rhs", cert.rhs}});
    } else if (sc_str->parsed()) {
      emit(to_json(straighten(parse_word(word_str), ctx.n, ctx.q)));
    } else if (sc_hub->parsed()) {
      HallElement e = kind == "c" ? central_c(rr, ctx.n, ctx.q, ctx.bounds())
                                  : central_z(rr, ctx.n, ctx.q, ctx.bounds());
      emit(to_json(e));
    } else if (sc_cen->parsed()) {
      HallElement e = HallElement::zero(ctx.n, ctx.q);
      if (elem_json.rfind("hubery:", 0) == 0) {
        std::string spec = elem_json.substr(7);
        long long idx = std::stoll(spec.substr(1));
        e = spec[0] == 'c' ? central_c(idx, ctx.n, ctx.q, ctx.bounds())
                           : central_z(idx, ctx.n, ctx.q, ctx.bounds());
      } else {
        e = hall_from_json(json::parse(elem_json));
      }
      std::vector<long long> bb;
      std::stringstream ss(bound_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) bb.push_back(std::stoll(tok));
      CentralityReport rep = is_central(e, StepFunction(static_cast<long long>(bb.size()), bb),
                                        ctx.bounds());
      json out{{"central", rep.central}};
      if (rep.witness) out["witness"] = to_json(*rep.witness);
      emit(out);
    } else if (sc_shuf->parsed() || sc_zeta->parsed()) {
      IntPoly num;
      std::stringstream ss(numerator_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) num.push_back(Int(tok));
      ZetaData zd(ctx.genus, ctx.q, num);
      if (sc_zeta->parsed()) {
        RationalFunctionSeries s = zeta_series(zd, series_kind_from_string(series_kind));
        json coeffs = json::array();
        for (size_t i = 0; i <= ctx.order; ++i) coeffs.push_back(rat_to_string(s.coeff_rat(i)));
        emit(json{{"series", series_kind}, {"coefficients", coeffs}});
      } else {
        ShuffleContext sctx{zd, ctx.order, std::nullopt};
        auto [dl, ll] = parse_shuffle_factor(left_f);
        auto [dr, lr] = parse_shuffle_factor(right_f);
        ShuffleElement a = ShuffleElement::monomial(sctx, {ll}, {dl}, Scalar::one(ctx.q));
        ShuffleElement b = ShuffleElement::monomial(sctx, {lr}, {dr}, Scalar::one(ctx.q));
        emit(to_json(shuffle_product(a, b)));
      }
    } else if (sc_mc->parsed()) {
      MirrorCompareReport rep = compare_with_quiver(ctx.n, ctx.q, ctx.bounds());
      emit(json{{"match", rep.match},
                {"pairs_checked", rep.pairs_checked},
                {"relations_checked", rep.relations_checked},
                {"first_mismatch", rep.first_mismatch}});
    } else if (sc_mh->parsed()) {
      auto parse_mi = [](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw parse_error("interval needs 'a,b': " + s);
        return MirrorInterval(rat_from_string(s.substr(0, comma)), rat_from_string(s.substr(comma + 1)));
      };
      HomExt he = hom_ext_dims(parse_mi(a_str), parse_mi(b_str));
      emit(json{{"hom", he.hom}, {"ext1", he.ext1}});
    } else if (sc_fr->parsed()) {
      RepVector v = RepVector::basis(ctx.q, rat_from_string(y_str));
      if (!zshift_str.empty()) {
        Scalar c = zconst_str.empty() ? Scalar::one(ctx.q) : scalar_from_json(json::parse(zconst_str));
        emit(to_json(heisenberg_shift_apply(c, rat_from_string(zshift_str), v)));
      } else {
        auto word = parse_word(gen_str);
        if (word.size() != 1) throw parse_error("fundrep takes a single generator");
        RepVariant var = variant == "circle" ? RepVariant::Circle
                         : variant == "affine-n" ? RepVariant::AffineN
                                                 : RepVariant::HeisenbergExtended;
        RepVector out = var == RepVariant::HeisenbergExtended
                            ? apply_operator({{Scalar::one(ctx.q), word}}, v, var, ctx.q)
                            : fund_rep_apply(word[0], v, var, ctx.q);
        emit(to_json(out));
      }
    } else if (sc_emb->parsed()) {
      auto images = embed_generators(embed_source_from_string(source), ctx.n, target);
      json rows = json::array();
      for (const auto& im : images)
        rows.push_back(json{{"index", im.index},
                            {"e_image", to_json(im.e_image)},
                            {"k_image", to_json(im.k_image)}});
      auto cartan = embed_cartan_matrix(images);
      emit(json{{"images", rows}, {"cartan", cartan}, {"affine_type_a", is_affine_type_a_cartan(cartan)}});
    } else if (sc_inv->parsed()) {
      long long rank = 1;
      StepFunction dim = StepFunction::zero();
      std::stringstream ss(class_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.rfind("rank=", 0) == 0) rank = std::stoll(tok.substr(5));
        if (tok.rfind("dim=", 0) == 0) {
          std::string body = tok.substr(4);
          if (body.find(':') == std::string::npos) {
            dim = StepFunction::constant(std::stoll(body));
          } else {
            std::vector<long long> vals;
            std::stringstream vs(body);
            std::string vtok;
            while (std::getline(vs, vtok, ':')) vals.push_back(std::stoll(vtok));
            dim = StepFunction(static_cast<long long>(vals.size()), vals);
          }
        }
      }
      StackInvariants si = stack_invariants(ctx.n, ctx.genus, KClass(rank, dim));
      json out{{"deg_n", rat_to_string(si.deg_n)},
               {"slope", si.slope_infinite ? json("inf") : json(rat_to_string(si.slope))},
               {"chi_n", rat_to_string(si.chi_n)},
               {"virtual_genus", rat_to_string(si.virtual_genus)}};
      emit(out);
    } else if (sc_suite->parsed()) {
      SuiteOptions opt;
      opt.q_filter = q_filter;
      opt.threads = ctx.threads;
      opt.seed = ctx.seed;
      auto results = run_acceptance_suite(opt);
      for (const auto& r : results)
        std::cerr << "criterion " << r.id << " [" << (r.passed ? "pass" : "FAIL") << "] " << r.name
                  << " (" << r.seconds << "s)\n";
      emit(suite_to_json(results));
      for (const auto& r : results)
        if (!r.passed) return 2;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const bound_exceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
