#include "fibercone/json_io.hpp"

#include "fibercone/errors.hpp"
#include "fibercone/parse.hpp"

namespace fibercone {

namespace {

Json pairs(const std::vector<ExpVec>& gens) {
  Json out = Json::array();
  for (ExpVec g : gens) out.push_back(Json::array({g.a, g.b}));
  return out;
}

SymVerdict verdict_from_string(const std::string& name) {
  for (SymVerdict v : {SymVerdict::CM_Concave, SymVerdict::CM_Convex, SymVerdict::CM_SmallC,
                       SymVerdict::CM_LargeC, SymVerdict::CM_Equigen, SymVerdict::NotCM_Equigen,
                       SymVerdict::UnknownInterval}) {
    if (to_string(v) == name) return v;
  }
  throw ParseError("unknown symmetric verdict: " + name);
}

ZMonomial zmonomial_from_json(const Json& j) {
  ZMonomial m;
  for (const auto& e : j) m.exps.push_back(e.get<std::uint32_t>());
  return m;
}

}  // namespace

Json ideal_to_json(const MonomialIdeal& ideal) {
  return Json{{"text", format_ideal(ideal)}, {"gens", pairs(ideal.gens())}};
}

MonomialIdeal ideal_from_json(const Json& j) {
  std::vector<ExpVec> gens;
  for (const auto& pair : j.at("gens"))
    gens.push_back({pair.at(0).get<std::uint64_t>(), pair.at(1).get<std::uint64_t>()});
  return make_ideal(std::move(gens));
}

Json shape_to_json(const ShapeReport& report) {
  Json segments = Json::array();
  for (const auto& [lo, hi] : report.segments) segments.push_back(Json::array({lo, hi}));
  return Json{{"is_concave", report.is_concave},
              {"is_convex", report.is_convex},
              {"corner_indices", report.corner_indices},
              {"segments", segments},
              {"has_inner_corner", report.has_inner_corner}};
}

ShapeReport shape_from_json(const Json& j) {
  ShapeReport report;
  report.is_concave = j.at("is_concave").get<bool>();
  report.is_convex = j.at("is_convex").get<bool>();
  report.corner_indices = j.at("corner_indices").get<std::vector<std::size_t>>();
  for (const auto& seg : j.at("segments"))
    report.segments.emplace_back(seg.at(0).get<std::size_t>(), seg.at(1).get<std::size_t>());
  report.has_inner_corner = j.at("has_inner_corner").get<bool>();
  return report;
}

Json hilbert_to_json(const HilbertData& data) {
  Json j{{"mu", data.mu}};
  if (data.numerator)
    j["numerator"] = *data.numerator;
  else
    j["numerator"] = nullptr;
  return j;
}

HilbertData hilbert_from_json(const Json& j) {
  HilbertData data;
  data.mu = j.at("mu").get<std::vector<std::uint64_t>>();
  if (!j.at("numerator").is_null())
    data.numerator = j.at("numerator").get<std::vector<std::int64_t>>();
  return data;
}

Json presentation_to_json(const PresentationIdeal& presentation) {
  Json binomials = Json::array();
  for (const ZBinomial& b : presentation.binomials)
    binomials.push_back(zm_to_string(b.lead) + " - " + zm_to_string(b.trail));
  Json monomials = Json::array();
  for (const ZMonomial& m : presentation.monomials) monomials.push_back(zm_to_string(m));
  return Json{{"num_vars", presentation.num_vars},
              {"order", presentation.order == TermOrder::RevLex ? "revlex" : "lex"},
              {"binomials", binomials},
              {"monomials", monomials}};
}

Json symmetric4_to_json(const Symmetric4Report& report) {
  Json presentation = Json::array();
  Json presentation_text = Json::array();
  for (const ZMonomial& m : report.presentation) {
    presentation.push_back(m.exps);
    presentation_text.push_back(zm_to_string(m));
  }
  return Json{{"a", report.a},
              {"b", report.b},
              {"c", report.c},
              {"r", report.r},
              {"verdict", to_string(report.verdict)},
              {"interval", Json::array({report.interval.first, report.interval.second})},
              {"presentation", presentation},
              {"presentation_text", presentation_text}};
}

Symmetric4Report symmetric4_from_json(const Json& j) {
  Symmetric4Report report;
  report.a = j.at("a").get<std::uint64_t>();
  report.b = j.at("b").get<std::uint64_t>();
  report.c = j.at("c").get<std::uint64_t>();
  report.r = j.at("r").get<std::uint64_t>();
  report.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  report.interval = {j.at("interval").at(0).get<std::uint64_t>(),
                     j.at("interval").at(1).get<std::uint64_t>()};
  for (const auto& m : j.at("presentation")) report.presentation.push_back(zmonomial_from_json(m));
  return report;
}

Json apery_to_json(const AperyResult& result) {
  return Json{{"a", result.a}, {"elements", result.elements}};
}

Json cn_to_json(bool cohen_macaulay, const CnDiagnostics& diag) {
  Json gens = Json::array();
  for (const auto& g : diag.plane_generators) gens.push_back(Json::array({g[0], g[1]}));
  Json rows = Json::array();
  for (const CnPair& pair : diag.pairs) {
    Json witness = Json::array();
    for (const auto& [gen, count] : pair.witness)
      witness.push_back(Json{{"generator", Json::array({gen[0], gen[1]})}, {"count", count}});
    rows.push_back(Json{{"nu", pair.nu},
                        {"mu", pair.mu},
                        {"mu_in_b2", pair.mu_in_b2},
                        {"witness", witness}});
  }
  return Json{{"cohen_macaulay", cohen_macaulay},
              {"plane_generators", gens},
              {"b1", diag.b1},
              {"b2", diag.b2},
              {"pairs", rows}};
}

Json verdict_to_json(const DepthVerdict& verdict) {
  Json j{{"kind", to_string(verdict.kind)}, {"certificate", verdict.certificate}};
  if (verdict.socle)
    j["socle_witness"] =
        Json{{"degree", verdict.socle->first}, {"monomial", format_monomial(verdict.socle->second)}};
  if (verdict.monotone_k) j["monotone_k"] = *verdict.monotone_k;
  if (verdict.kind == DepthKind::EvidenceDepthAtLeast) j["evidence_depth"] = verdict.evidence_depth;
  j["bound"] = verdict.bound;
  if (verdict.transcript) {
    const ProbeTranscript& t = *verdict.transcript;
    Json runs = Json::array();
    for (const ProbeTrial& trial : t.runs) {
      runs.push_back(Json{{"l1_coeffs", trial.l1_coeffs},
                          {"l2_coeffs", trial.l2_coeffs},
                          {"l1_ranks", trial.l1_ranks},
                          {"w_dims", trial.w_dims},
                          {"l2_ranks", trial.l2_ranks},
                          {"q_dims", trial.q_dims},
                          {"evidence", trial.evidence}});
    }
    j["transcript"] = Json{{"degree_bound", t.degree_bound},
                           {"prime", t.prime},
                           {"seed", t.seed},
                           {"trials", t.trials},
                           {"dims", t.dims},
                           {"runs", runs}};
  }
  return j;
}

}  // namespace fibercone
