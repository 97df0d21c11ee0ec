#pragma once

// JSON documents for the command-line tool. Keys come out sorted (the json
// object type is map-backed), big integers and rationals as strings.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatrank/building.hpp"
#include "flatrank/classify.hpp"
#include "flatrank/coxeter.hpp"
#include "flatrank/diagram.hpp"
#include "flatrank/growth.hpp"
#include "flatrank/logvalue.hpp"
#include "flatrank/polynomial.hpp"
#include "flatrank/rank.hpp"
#include "flatrank/tdlc.hpp"
#include "flatrank/tree.hpp"

namespace flatrank {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json names_json(const CoxeterDiagram& d, VertexSet set) {
  Json out = Json::array();
  for (Vertex v : members(set)) out.push_back(d.name(v));
  return out;
}

inline Json diagram_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const Edge& e : d.edges())
    edges.push_back({d.name(e.s), d.name(e.t), e.m == kInfinity ? std::string("inf") : std::to_string(e.m)});
  return {{"rank", d.rank()}, {"names", d.names()}, {"edges", edges}, {"text", d.to_text()}};
}

inline Json polynomial_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

inline Json log_json(const LogValue& v) {
  return {{"argument", v.argument().str()}, {"expression", v.expression()}, {"value", v.value()}};
}

inline Json classification_json(const CoxeterDiagram& d) {
  const SubsetClass cls = classify_subset(d, d.all());
  Json comps = Json::array();
  for (const auto& c : cls.components)
    comps.push_back({{"vertices", names_json(d, c.vertices)},
                     {"type", c.family ? Json(c.family->name()) : Json(nullptr)}});
  return {{"kind", to_string(cls.kind)}, {"components", comps}};
}

inline Json witness_json(const CoxeterDiagram& d, const StandardAbelianWitness& w) {
  Json parts = Json::array();
  for (const auto& p : w.parts)
    parts.push_back({{"vertices", names_json(d, p.vertices)},
                     {"class", to_string(p.kind)},
                     {"contribution", p.contribution}});
  return {{"total", w.total}, {"parts", parts}};
}

inline Json bounds_json(const RankBounds& b) {
  return {{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact}, {"upper_source", to_string(b.upper_source)}};
}

inline Json evaluation_json(const GrowthSeries& g, const Rational& t0) {
  const GrowthValue v = evaluate_growth(g, t0);
  Json out = {{"t0", rational_string(t0)}, {"finite", v.finite}};
  if (v.finite) out["value"] = rational_string(v.value);
  return out;
}

inline Json growth_json(const GrowthSeries& g, int coefficient_count = 12) {
  Json coeffs = Json::array();
  for (const auto& c : g.coefficients(coefficient_count - 1)) coeffs.push_back(c.str());
  const GrowthRadius r = radius_of_convergence(g);
  Json radius = {{"infinite", r.infinite}};
  if (!r.infinite) {
    radius["lo"] = rational_string(r.lo);
    radius["hi"] = rational_string(r.hi);
    radius["exact"] = r.exact;
  }
  return {{"numerator", polynomial_json(g.numerator())},
          {"denominator", polynomial_json(g.denominator())},
          {"coefficients", coeffs},
          {"radius", radius}};
}

struct ReportOptions {
  std::optional<std::string> thickness;  // --q
  std::optional<Rational> eval;          // --eval
};

/// Chamber distances for every w with l(w) <= 4.
inline Json chamber_table_json(const CoxeterDiagram& d, const ThicknessAssignment& q) {
  Json rows = Json::array();
  for (const auto& layer : enumerate_ball(d, 4))
    for (const auto& w : layer)
      rows.push_back({{"w", format_word(d, w.word())},
                      {"q_w", q_of_element(d, q, w).str()},
                      {"distance", log_json(chamber_distance(d, q, w))}});
  return rows;
}

inline Json build_report(const CoxeterDiagram& d, const ReportOptions& options = {}) {
  const SubsetAtlas atlas(d);
  const RankBounds bounds = flat_rank_bounds(atlas);
  const GrowthSeries g = growth_series(d);
  Json out = {{"schema", kSchemaVersion},
              {"diagram", diagram_json(d)},
              {"classification", classification_json(d)},
              {"moussong_hyperbolic", moussong_hyperbolic(atlas)},
              {"alg_rank", witness_json(d, bounds.lower_witness)},
              {"davis_dimension", davis_dimension(atlas)},
              {"bounds", bounds_json(bounds)},
              {"growth", growth_json(g)}};
  std::optional<Rational> t0 = options.eval;
  if (options.thickness) {
    const ThicknessAssignment q = ThicknessAssignment::parse(d, *options.thickness);
    out["thickness"] = q.values();
    out["chamber_distances"] = chamber_table_json(d, q);
    bool uniform = true;
    for (auto v : q.values()) uniform = uniform && v == q[0];
    if (!t0 && uniform) t0 = Rational(1, q[0]);
  }
  if (t0) out["evaluation"] = evaluation_json(g, *t0);
  return out;
}

inline Json vertex_list_json(const VertexList& f) {
  Json out = Json::array();
  for (const auto& v : f) out.push_back(v.to_string());
  return out;
}

/// "0", "(0)", "2;0.1" or "(2;0.1)".
inline TreeVertex parse_tree_vertex(std::string text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  TreeVertex v;
  const auto semi = text.find(';');
  const auto axis = detail::parse_integer(text.substr(0, semi));
  if (!axis) throw ParseError("bad tree vertex '" + text + "'");
  v.axis = static_cast<int>(*axis);
  if (semi != std::string::npos) {
    std::stringstream in(text.substr(semi + 1));
    for (std::string label; std::getline(in, label, '.');) {
      const auto c = detail::parse_integer(label);
      if (!c || *c < 0 || *c > 255) throw ParseError("bad tree vertex '" + text + "'");
      v.path.push_back(static_cast<std::uint8_t>(*c));
    }
    if (v.path.empty()) throw ParseError("bad tree vertex '" + text + "'");
  }
  return v;
}

inline VertexList parse_vertex_list(const std::string& text) {
  VertexList out;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) out.insert(parse_tree_vertex(tok));
  if (out.empty()) throw ParseError("empty vertex list");
  return out;
}

inline Json tree_scale_json(const TreeSpec& t, const TreeAut& alpha, int search_depth) {
  const TidyResult tidy = tidy_search(t, alpha, search_depth);
  const TidyResult tidy_inv = tidy_search(t, alpha.inverse(), search_depth);
  const auto s = fixator_index(t, alpha.apply(tidy.witness), tidy.witness);
  const auto s_inv = fixator_index(t, alpha.inverse().apply(tidy_inv.witness), tidy_inv.witness);
  return {{"schema", kSchemaVersion},
          {"q", t.q},
          {"depth", search_depth},
          {"automorphism", alpha.to_string()},
          {"tidy", {{"minimum", log_json(tidy.minimum)}, {"witness", vertex_list_json(tidy.witness)}}},
          {"scale", s.str()},
          {"scale_inverse", s_inv.str()},
          {"modular_function", rational_string(Rational(s) / Rational(s_inv))}};
}

inline Json tidying_json(const TreeSpec& t, const TreeAut& alpha, const VertexList& seed) {
  const TidyingResult r = tidying_procedure(t, alpha, seed);
  Json trace = Json::array();
  for (const auto& step : r.trace)
    trace.push_back({{"k", step.k},
                     {"hull", vertex_list_json(step.hull)},
                     {"displacement", log_json(step.displacement)},
                     {"tidy_above", step.tidy_above}});
  return {{"schema", kSchemaVersion},
          {"q", t.q},
          {"depth", t.depth},
          {"automorphism", alpha.to_string()},
          {"seed", vertex_list_json(seed)},
          {"trace", trace},
          {"n", r.n},
          {"above", vertex_list_json(r.above)},
          {"k_alpha_contained", r.k_alpha_contained},
          {"output", vertex_list_json(r.output)},
          {"displacement", log_json(r.displacement)},
          {"minimum", log_json(r.minimum)}};
}

inline Json flat_json(const FlatSubgroupSpec& h, int radius) {
  const FlatSubgroupReport r = flat_rank_flat_subgroup(h, radius);
  Json factors = Json::array();
  for (std::size_t i = 0; i < h.factors.size(); ++i)
    factors.push_back({{"q", h.factors[i].tree.q},
                       {"generator", h.factors[i].generator.to_string()},
                       {"tidy", vertex_list_json(r.tidy[i])}});
  Json norms = Json::array();
  for (const auto& e : r.norms) norms.push_back({{"m", e.exponents}, {"norm", log_json(e.norm)}});
  return {{"schema", kSchemaVersion},
          {"factors", factors},
          {"rank", r.rank},
          {"translation_coordinates", r.translation_coordinates},
          {"elliptic_coordinates", r.elliptic_coordinates},
          {"norms", norms},
          {"norm_axioms", r.norm_axioms}};
}

}  // namespace flatrank
