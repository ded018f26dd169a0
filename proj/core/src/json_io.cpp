#include "circlehall/json_io.hpp"

namespace circlehall {

json to_json(const Rat& r) { return rat_to_string(r); }

json to_json(const Scalar& s) {
  json c = json::array();
  for (const auto& x : s.coeffs()) c.push_back(rat_to_string(x));
  return json{{"q", s.q()}, {"c", c}};
}

json to_json(const Arc& a) {
  return json{{"right", rat_to_string(a.right.value())}, {"len", rat_to_string(a.len)}};
}

json to_json(const StepFunction& f) {
  return json{{"n", f.denominator()}, {"values", f.values()}};
}

json to_json(const KClass& k) {
  return json{{"rank", k.rank}, {"dim", to_json(k.dim)}};
}

json to_json(const TorsionObject& t) {
  json arcs = json::array();
  for (const auto& a : t.arcs()) arcs.push_back(to_json(a));
  return json{{"arcs", arcs}};
}

json to_json(const HallElement& e) {
  json terms = json::array();
  for (const auto& [obj, c] : e.terms) {
    json t = to_json(obj);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  json out{{"n", e.n}, {"q", e.q}, {"terms", terms}};
  if (e.kexp) out["k"] = to_json(*e.kexp);
  return out;
}

json to_json(const TensorComponent& t) {
  json terms = json::array();
  for (const auto& [mn, c] : t.terms) {
    terms.push_back(json{{"left", to_json(mn.first)},
                         {"right", to_json(mn.second)},
                         {"coeff", to_json(c)}});
  }
  return json{{"n", t.n},
              {"q", t.q},
              {"alpha", to_json(t.alpha)},
              {"beta", to_json(t.beta)},
              {"left_k", to_json(t.beta)},
              {"terms", terms}};
}

json to_json(const DoubleElement& d) {
  json terms = json::array();
  for (const auto& [w, c] : d.terms) {
    terms.push_back(json{{"e", w.e_word}, {"k", w.k}, {"f", w.f_word}, {"coeff", to_json(c)}});
  }
  return json{{"n", d.n}, {"q", d.q}, {"terms", terms}};
}

json to_json(const ShuffleElement& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.terms) {
    json labels = json::array();
    for (const auto& l : k.labels) labels.push_back(rat_to_string(l));
    terms.push_back(json{{"labels", labels}, {"expo", k.expo}, {"coeff", to_json(c)}});
  }
  return json{{"q", e.ctx.zd.q}, {"g", e.ctx.zd.genus}, {"order", e.ctx.order}, {"terms", terms}};
}

json to_json(const MirrorElement& e) {
  json terms = json::array();
  for (const auto& [obj, c] : e.terms) {
    json parts = json::array();
    for (const auto& p : obj.parts)
      parts.push_back(json{{"a", rat_to_string(p.a)}, {"b", rat_to_string(p.b)}});
    terms.push_back(json{{"parts", parts}, {"coeff", to_json(c)}});
  }
  return json{{"q", e.q}, {"terms", terms}};
}

json to_json(const RepVector& v) {
  json terms = json::array();
  for (const auto& [y, c] : v.terms)
    terms.push_back(json{{"y", rat_to_string(y)}, {"coeff", to_json(c)}});
  return json{{"q", v.q}, {"terms", terms}};
}

Rat rat_from_json(const json& j) { return rat_from_string(j.get<std::string>()); }

Scalar scalar_from_json(const json& j) {
  std::array<Rat, 4> c;
  const auto& arr = j.at("c");
  if (!arr.is_array() || arr.size() != 4) throw parse_error("scalar needs 4 coefficients");
  for (size_t i = 0; i < 4; ++i) c[i] = rat_from_string(arr[i].get<std::string>());
  return Scalar(j.at("q").get<int>(), std::move(c));
}

Arc arc_from_json(const json& j) {
  return Arc(CirclePoint(rat_from_json(j.at("right"))), rat_from_json(j.at("len")));
}

StepFunction step_from_json(const json& j) {
  return StepFunction(j.at("n").get<long long>(), j.at("values").get<std::vector<long long>>());
}

KClass kclass_from_json(const json& j) {
  return KClass(j.at("rank").get<long long>(), step_from_json(j.at("dim")));
}

TorsionObject torsion_from_json(const json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) arcs.push_back(arc_from_json(a));
  return TorsionObject(std::move(arcs));
}

HallElement hall_from_json(const json& j) {
  HallElement e = HallElement::zero(j.at("n").get<long long>(), j.at("q").get<int>());
  for (const auto& t : j.at("terms")) {
    TorsionObject obj = torsion_from_json(t);
    e.terms[obj] = scalar_from_json(t.at("coeff"));
  }
  if (j.contains("k")) e.kexp = step_from_json(j.at("k"));
  e.prune();
  return e;
}

}  // namespace circlehall
