#include "knotsig/report.hpp"

#include <limits>

#include "knotsig/error.hpp"

namespace knotsig {

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(integer_json(c));
  const int low2 = p.low_exponent2();
  Json offset = low2 % 2 == 0 ? Json(low2 / 2) : Json(rational_string(mpq_class(low2, 2)));
  return Json{{"coefficients", coeffs}, {"offset", offset}};
}

Json to_json(const SignatureTriple& s) {
  return Json{{"signature", s.signature()}, {"positive", s.positive}, {"negative", s.negative}, {"nullity", s.nullity}};
}

Json diagram_stats(const LinkDiagram& d) {
  // A crossingless unlink bounds disjoint disks. Split diagrams with crossings
  // have no single face structure, and b1 is only defined here for positive
  // diagrams; anything undefined is null.
  Json b1 = nullptr, face_count = nullptr;
  if (d.crossing_count() == 0) {
    b1 = 0;
    face_count = d.component_count() + 1;
  } else if (!is_split(d)) {
    if (d.is_positive()) b1 = first_betti(d);
    face_count = faces(d).size();
  }
  return Json{{"c", d.crossing_count()},
              {"s", seifert_circles(d).count()},
              {"b1", b1},
              {"faces", face_count},
              {"reduced", is_reduced(d)}};
}

Json checkerboard_json(const LinkDiagram& d) {
  const auto [a, b] = colorings(d);
  return Json{{"fw", a.white_count},
              {"fb", a.black_count},
              {"mu", {a.mu, b.mu}},
              {"goeritz", to_json(goeritz(d, a).matrix)},
              {"goeritz_b", to_json(goeritz(d, b).matrix)},
              {"signature", gl_signature(d)}};
}

Json to_json(const Inequality& q) {
  return Json{{"name", q.name}, {"lhs", rational_string(q.lhs)}, {"rhs", rational_string(q.rhs)}, {"holds", q.holds}};
}

namespace {

Json inequalities_json(const std::vector<Inequality>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(to_json(q));
  return out;
}

Json census_json(const CurveCensus& c) {
  Json counts = Json::array();
  for (const auto& [mn, k] : c.counts) counts.push_back(Json{{"m", mn.first}, {"n", mn.second}, {"count", k}});
  return Json{{"counts", counts}, {"negative", c.negative}, {"nonnegative", c.nonnegative}, {"hopf_factors", c.hopf_factors}};
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json integers_json(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(integer_json(z));
  return out;
}

}  // namespace

Json to_json(const BoundCertificate& c) {
  Json types = Json::array();
  for (const auto& [m, n] : c.generator_types) types.push_back({m, n});
  return Json{{"diagram_id", c.diagram_id},
              {"coloring", std::string(1, c.coloring)},
              {"crossings", c.crossings},
              {"mu", c.mu},
              {"white_faces", c.white_faces},
              {"black_faces", c.black_faces},
              {"sigma", c.sigma},
              {"goeritz", to_json(c.goeritz)},
              {"omitted_face", c.omitted_face},
              {"generator_faces", c.generator_faces},
              {"generator_types", types},
              {"census", census_json(c.census)},
              {"independent_set", c.independent_set},
              {"independent_set_method", c.method == IndependentSetMethod::kExact ? "exact" : "greedy"},
              {"chain_applicable", c.chain_applicable},
              {"achieved_fraction", rational_string(c.achieved_fraction)},
              {"bound", rational_string(c.bound)},
              {"inequalities", inequalities_json(c.inequalities)}};
}

Json to_json(const BoundReport& r) {
  return Json{{"diagram_id", r.diagram_id},
              {"crossings", r.crossings},
              {"seifert_circles", r.seifert_circles},
              {"b1", r.betti},
              {"sigma", r.sigma},
              {"reduced_crossings", r.reduced_crossings},
              {"reduced_seifert_circles", r.reduced_seifert_circles},
              {"reduced_sigma", r.reduced_sigma},
              {"reduced_b1", r.reduced_betti},
              {"reduction_steps", r.reduction_steps},
              {"hopf_factors", r.hopf_factors},
              {"certificates", {to_json(r.certificates[0]), to_json(r.certificates[1])}},
              {"combined", inequalities_json(r.combined)},
              {"verdict", to_string(r.verdict)}};
}

Json to_json(const TwistFamilyReport& r) {
  return Json{{"base", r.base.to_string()},
              {"position", r.position},
              {"nmax", r.nmax},
              {"smoothed", r.smoothed.to_string()},
              {"smoothed_alexander", to_json(r.smoothed_alexander)},
              {"smoothed_components", r.smoothed_components},
              {"smoothed_linking", optional_json(r.smoothed_linking)},
              {"smoothed_sigma", r.smoothed_sigma},
              {"omega0", r.omega0.to_string()},
              {"braid_family", Json{{"sigma", r.sigma}, {"monotone", r.monotone}, {"n0", optional_json(r.n0)}}},
              {"band_family", Json{{"sigma", r.band_sigma},
                                   {"monotone", r.band_monotone},
                                   {"n0", optional_json(r.band_n0)},
                                   {"det", integers_json(r.det)},
                                   {"x", integers_json(r.x)},
                                   {"det_b", integer_json(r.det_b)},
                                   {"r", integer_json(r.r)},
                                   {"affine_slope", integer_json(r.affine_slope)},
                                   {"affine_intercept", integer_json(r.affine_intercept)},
                                   {"affine_exact", r.affine_exact},
                                   {"border_matches_smoothed", r.border_matches_smoothed}}}};
}

CatalogueRecord parse_catalogue_line(const std::string& text, int line) {
  const std::string where = "line " + std::to_string(line) + ": ";
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(where + "invalid JSON (" + e.what() + ")");
  }
  if (!j.is_object()) throw ParseError(where + "record must be a JSON object");
  CatalogueRecord r;
  r.line = line;
  try {
    r.name = j.value("name", "");
    const bool has_pd = j.contains("pd"), has_braid = j.contains("braid");
    if (has_pd == has_braid) throw ParseError("record needs exactly one of \"pd\" and \"braid\"");
    r.kind = has_pd ? InputKind::kPd : InputKind::kBraid;
    r.payload = j.at(has_pd ? "pd" : "braid").get<std::string>();
    if (j.contains("positive")) r.positive = j.at("positive").get<bool>();
    const std::string rot = j.value("rotation", "ccw");
    if (rot == "cw") r.pd_options.rotation = PdRotation::kClockwise;
    else if (rot != "ccw") throw ParseError("rotation must be \"ccw\" or \"cw\"");
    if (j.contains("reverse"))
      for (const auto& label : j.at("reverse")) r.pd_options.reverse_labels.insert(label.get<long>());
    if (j.contains("expected")) {
      const Json& e = j.at("expected");
      if (e.contains("sigma")) r.expected_sigma = e.at("sigma").get<int>();
      if (e.contains("b1")) r.expected_b1 = e.at("b1").get<int>();
    }
    r.provenance = j.value("provenance", "");
    record_diagram(r);
  } catch (const Json::exception& e) {
    throw ParseError(where + e.what());
  } catch (const ParseError& e) {
    throw ParseError(where + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(where + e.what());
  }
  return r;
}

std::vector<CatalogueEntry> read_catalogue(std::istream& in) {
  std::vector<CatalogueEntry> out;
  std::string text;
  int line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    try {
      out.emplace_back(parse_catalogue_line(text, line));
    } catch (const ParseError& e) {
      out.emplace_back(CatalogueError{line, e.what()});
    }
  }
  return out;
}

Json to_json(const CatalogueRecord& r) {
  Json j{{"name", r.name}, {r.kind == InputKind::kPd ? "pd" : "braid", r.payload}};
  if (r.positive) j["positive"] = *r.positive;
  if (r.pd_options.rotation == PdRotation::kClockwise) j["rotation"] = "cw";
  if (!r.pd_options.reverse_labels.empty()) j["reverse"] = r.pd_options.reverse_labels;
  if (r.expected_sigma || r.expected_b1) {
    Json e = Json::object();
    if (r.expected_sigma) e["sigma"] = *r.expected_sigma;
    if (r.expected_b1) e["b1"] = *r.expected_b1;
    j["expected"] = e;
  }
  if (!r.provenance.empty()) j["provenance"] = r.provenance;
  return j;
}

LinkDiagram record_diagram(const CatalogueRecord& r) {
  if (r.kind == InputKind::kBraid) return closure_diagram(parse_braid(r.payload));
  return parse_pd(r.payload, r.pd_options);
}

}  // namespace knotsig
