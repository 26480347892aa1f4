#include "lpdo/report.hpp"

#include "lpdo/expr.hpp"

namespace lpdo {

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const RatFunc& f) { return to_string(f); }

Json json_of(const DiffOp& p) { return print_canonical(p); }

Json json_of(const BinaryForm& f) { return to_string(f); }

Json json_of(const Mat2& m) {
  return Json{{"dx", Json::array({to_string(m.a), to_string(m.b)})},
              {"dy", Json::array({to_string(m.c), to_string(m.d)})}};
}

Json json_of(const Edge& e) {
  return Json{{"from", Json::array({e.from.x, e.from.y})},
              {"to", Json::array({e.to.x, e.to.y})},
              {"vertical", e.vertical},
              {"slope", to_string(e.slope)},
              {"characteristic", to_string_in_z(e.charpoly)}};
}

Json json_of(const NewtonPolygon& np) {
  Json points = Json::array();
  for (const auto& [e, c] : np.points)
    points.push_back(Json{{"i", e.x}, {"j", e.y}, {"coeff", to_string(c)}});
  Json edges = Json::array();
  for (const Edge& e : np.edges) edges.push_back(json_of(e));
  return Json{{"points", points}, {"edges", edges}};
}

Json json_of(const ChainStep& s) {
  return Json{{"b", to_string(s.b)}, {"c", to_string(s.c)}, {"k", to_string(s.k)}};
}

Json json_of(const LaplaceChain& ch) {
  Json steps = Json::array();
  for (const ChainStep& s : ch.steps) steps.push_back(json_of(s));
  Json m = ch.m ? Json(*ch.m) : Json(nullptr);
  return Json{{"a", to_string(ch.a)}, {"steps", steps}, {"m", m}, {"truncated", ch.truncated}};
}

Json json_of(const LaplaceDivisor& d) {
  Json out{{"order", d.n},
           {"chain_length", d.m},
           {"divisor", print_canonical(d.divisor)},
           {"cofactor", print_canonical(d.cofactor)},
           {"verified", d.verified},
           {"literal_verified", d.literal_verified},
           {"note", d.note}};
  out["literal_divisor"] =
      d.literal_divisor ? Json(print_canonical(*d.literal_divisor)) : Json(nullptr);
  return out;
}

Json json_of(const DivisorDiagnosis& d) {
  const char* reason = "unknown";
  switch (d.reason) {
    case DivisorDiagnosis::Reason::ChainNotTerminated: reason = "chain-not-terminated"; break;
    case DivisorDiagnosis::Reason::OrderTooSmall: reason = "order-too-small"; break;
    case DivisorDiagnosis::Reason::CofactorObstructed: reason = "cofactor-obstructed"; break;
  }
  Json out{{"reason", reason}, {"message", d.message}, {"chain", json_of(d.chain)}};
  out["literal_divisor"] =
      d.literal_divisor ? Json(print_canonical(*d.literal_divisor)) : Json(nullptr);
  out["literal_verified"] = d.literal_verified;
  return out;
}

Json json_of(const OveridealResult& o) {
  return Json{{"operator", print_canonical(o.q.to_diffop())},
              {"divisor", json_of(o.divisor)},
              {"annotation", o.annotation}};
}

Json json_of(const FirstStep& fs) {
  Json out{{"direction", print_canonical(fs.direction)}, {"constraint", fs.constraint}};
  out["f1"] = fs.f1 ? Json(to_string(*fs.f1)) : Json(nullptr);
  out["obstruction"] = fs.obstruction.empty() ? Json(nullptr) : Json(fs.obstruction);
  return out;
}

Json json_of(const NormalizedForm& nf) {
  Json p = Json::object();
  for (const auto& [k, f] : nf.p) p["p" + std::to_string(k)] = to_string(f);
  return Json{{"transform", json_of(nf.transform)},
              {"scale", to_string(nf.scale)},
              {"operator", print_canonical(nf.op)},
              {"coefficients", p}};
}

Json json_of(const MultiplicityPattern& mp) {
  Json degrees = Json::object();
  for (const auto& [mult, deg] : mp.degree_by_multiplicity)
    degrees[std::to_string(mult)] = deg;
  return Json{{"degree_by_multiplicity", degrees},
              {"has_nonsplit_factor", mp.has_nonsplit_factor}};
}

Json json_of(const ClassificationReport& rep) {
  Json out{{"order", rep.order},
           {"symbol", to_string(rep.symbol)},
           {"separable", rep.separable},
           {"pattern", json_of(rep.pattern)},
           {"case", case_tag_name(rep.case_tag)},
           {"verdict", verdict_name(rep.verdict)},
           {"intersection_claim", rep.intersection_claim}};
  out["bound"] = rep.bound ? Json(*rep.bound) : Json(nullptr);
  out["normalized"] = rep.normalized ? json_of(*rep.normalized) : Json(nullptr);
  return out;
}

Json json_of(const WitnessCheck& wc) {
  return Json{{"holds", wc.holds},
              {"quotient", print_canonical(wc.quotient)},
              {"residual", to_string(wc.residual)}};
}

Json envelope(const std::string& command, Json input, Json result, Json evidence,
              Json citations, Json diagnostics) {
  return Json{{"version", 1},
              {"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"evidence", std::move(evidence)},
              {"citations", std::move(citations)},
              {"diagnostics", std::move(diagnostics)}};
}

}  // namespace lpdo
