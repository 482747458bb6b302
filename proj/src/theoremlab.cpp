#include "knotsig/theoremlab.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

#include "knotsig/error.hpp"
#include "knotsig/quadform.hpp"

namespace knotsig {

const char* to_string(BigonKind kind) {
  switch (kind) {
    case BigonKind::kNotSeifertCircle: return "NOT_SEIFERT_CIRCLE";
    case BigonKind::kSeifertReducing: return "SEIFERT_REDUCING";
    case BigonKind::kSeifertNonreducing: return "SEIFERT_NONREDUCING";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "HOLDS";
    case Verdict::kDegraded: return "DEGRADED";
    case Verdict::kFailed: return "FAILED";
  }
  return "?";
}

namespace {

void require_reduced_positive(const LinkDiagram& d, const char* op) {
  const std::string name(op);
  if (!d.is_positive()) throw PreconditionError(name + " needs a positive diagram");
  if (is_split(d)) throw PreconditionError(name + " needs a non-split diagram");
  for (const Face& f : faces(d))
    if (f.edge_count() == 1)
      throw PreconditionError(name + ": face " + std::to_string(f.id) + " is a monogon, the diagram is not reduced");
  if (!is_reduced(d)) throw PreconditionError(name + " needs a reduced diagram");
}

}  // namespace

std::vector<BigonInfo> classify_bigons(const LinkDiagram& d) {
  require_reduced_positive(d, "classify_bigons");
  const SeifertCircleSet s = seifert_circles(d);
  std::vector<BigonInfo> out;
  for (const Face& f : faces(d)) {
    if (f.edge_count() != 2) continue;
    BigonInfo info;
    info.face = f.id;
    info.crossings = {f.boundary[0].crossing, f.boundary[1].crossing};
    const int c0 = s.circle_of_arc[static_cast<std::size_t>(f.boundary[0].arc)];
    const int c1 = s.circle_of_arc[static_cast<std::size_t>(f.boundary[1].arc)];
    if (c0 == c1 && s.circles[static_cast<std::size_t>(c0)].size() == 2) {
      auto other = [&](int x) {
        const auto [p, q] = s.adjacency[static_cast<std::size_t>(x)];
        return p == c0 ? q : p;
      };
      info.kind = other(info.crossings[0]) == other(info.crossings[1]) ? BigonKind::kSeifertReducing
                                                                       : BigonKind::kSeifertNonreducing;
    }
    out.push_back(info);
  }
  return out;
}

Reduction reduce_with_log(const LinkDiagram& d) {
  require_reduced_positive(d, "reduce");
  Reduction out{d, {}};
  int sigma = gl_signature(d);
  const int betti = first_betti(d);
  while (true) {
    const auto bigons = classify_bigons(out.diagram);
    const auto it = std::find_if(bigons.begin(), bigons.end(),
                                 [](const BigonInfo& b) { return b.kind == BigonKind::kSeifertNonreducing; });
    if (it == bigons.end()) break;
    ReductionStep step;
    step.crossings = it->crossings;
    step.crossings_before = static_cast<int>(out.diagram.crossing_count());
    step.betti_before = first_betti(out.diagram);
    step.sigma_before = sigma;
    LinkDiagram next = remove_bigon(out.diagram, it->crossings[0], it->crossings[1]);
    if (is_split(next) || !is_reduced(next))
      throw InternalError("clasp removal left a split or non-reduced diagram");
    step.betti_after = first_betti(next);
    step.sigma_after = gl_signature(next);
    if (step.betti_after != betti) throw InternalError("clasp removal changed the first Betti number");
    if (step.sigma_after > step.sigma_before) throw InternalError("clasp removal increased the signature");
    sigma = step.sigma_after;
    out.diagram = std::move(next);
    out.steps.push_back(step);
  }
  return out;
}

LinkDiagram reduce(const LinkDiagram& d) { return reduce_with_log(d).diagram; }

int CurveCensus::count(int m, int n) const {
  const auto it = counts.find({m, n});
  return it == counts.end() ? 0 : it->second;
}

CurveCensus curve_census(const LinkDiagram& d, const CheckerboardData& coloring) {
  const WhiteBasis basis = white_basis(d, coloring);
  CurveCensus census;
  for (const auto& g : basis.generators) {
    ++census.counts[{g.m, g.n}];
    (g.framing() < 0 ? census.negative : census.nonnegative) += 1;
  }

  // Two white (0,2) bigons meeting at a crossing enclose a Hopf link that has
  // no other connection to the diagram.
  std::vector<const Face*> white02;
  for (const Face& f : coloring.faces) {
    if (coloring.coloring[static_cast<std::size_t>(f.id)] != FaceColor::kWhite || f.edge_count() != 2) continue;
    if (std::all_of(f.boundary.begin(), f.boundary.end(), [&](const FaceCorner& c) {
          return coloring.types[static_cast<std::size_t>(c.crossing)] == CrossingType::kII;
        }))
      white02.push_back(&f);
  }
  bool adjacent = false;
  for (std::size_t i = 0; i < white02.size(); ++i)
    for (std::size_t j = i + 1; j < white02.size(); ++j)
      for (const auto& a : white02[i]->boundary)
        for (const auto& b : white02[j]->boundary) adjacent = adjacent || a.crossing == b.crossing;
  if (adjacent) {
    if (d.crossing_count() != 2 || d.component_count() != 2)
      throw InternalError("adjacent (0,2) curves in a diagram that is not a Hopf link");
    census.hopf_factors = 1;
  }

  if (census.count(0, 1) != 0) throw InternalError("census: a curve of type (0,1) survived reduction");
  int below_diag = census.count(0, 2);
  for (const auto& [mn, k] : census.counts) {
    if (mn.first == 1) throw InternalError("census: a curve of type (1,n) survived reduction");
    if (mn.first % 2 != 0) throw InternalError("census: odd number of type I crossings on a curve");
    if (mn.second > mn.first && mn.second > 2) below_diag += k;
  }
  if (2 * census.count(0, 2) > coloring.mu) throw InternalError("census: gamma(0,2) exceeds mu/2");
  if (below_diag != census.negative) throw InternalError("census: negative-framing count does not decompose");
  return census;
}

Inequality make_inequality(std::string name, const mpq_class& lhs, const mpq_class& rhs) {
  return Inequality{std::move(name), lhs, rhs, lhs <= rhs};
}

std::vector<int> independent_set(const std::vector<std::vector<bool>>& adjacency, IndependentSetMethod& method) {
  const std::size_t n = adjacency.size();
  if (n <= 40) {
    method = IndependentSetMethod::kExact;
    std::vector<std::uint64_t> nbr(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && adjacency[i][j]) nbr[i] |= std::uint64_t{1} << j;
    std::uint64_t best = 0;
    std::function<void(std::uint64_t, std::uint64_t)> grow = [&](std::uint64_t cand, std::uint64_t chosen) {
      if (std::popcount(chosen) + std::popcount(cand) <= std::popcount(best)) return;
      if (cand == 0) {
        best = chosen;
        return;
      }
      // Branch on the candidate with the most candidate neighbours.
      int pick = -1, pick_deg = -1;
      for (std::uint64_t rest = cand; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int deg = std::popcount(nbr[static_cast<std::size_t>(v)] & cand);
        if (deg > pick_deg) pick = v, pick_deg = deg;
      }
      const std::uint64_t bit = std::uint64_t{1} << pick;
      if (pick_deg == 0) {
        grow(0, chosen | cand);
        return;
      }
      grow(cand & ~bit & ~nbr[static_cast<std::size_t>(pick)], chosen | bit);
      grow(cand & ~bit, chosen);
    };
    grow(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
    std::vector<int> out;
    for (std::size_t i = 0; i < n; ++i)
      if (best >> i & 1) out.push_back(static_cast<int>(i));
    return out;
  }

  method = IndependentSetMethod::kGreedy;
  std::vector<int> degree(n, 0), order;
  std::vector<bool> removed(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && adjacency[i][j]) ++degree[i];
  for (std::size_t step = 0; step < n; ++step) {
    int v = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (!removed[i] && (v < 0 || degree[i] < degree[static_cast<std::size_t>(v)])) v = static_cast<int>(i);
    removed[static_cast<std::size_t>(v)] = true;
    order.push_back(v);
    for (std::size_t j = 0; j < n; ++j)
      if (!removed[j] && adjacency[static_cast<std::size_t>(v)][j]) --degree[j];
  }
  std::vector<int> color(n, -1);
  int colors = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::set<int> taken;
    for (std::size_t j = 0; j < n; ++j)
      if (adjacency[static_cast<std::size_t>(*it)][j] && color[j] >= 0) taken.insert(color[j]);
    int c = 0;
    while (taken.count(c)) ++c;
    color[static_cast<std::size_t>(*it)] = c;
    colors = std::max(colors, c + 1);
  }
  int best_color = 0;
  for (int c = 1; c < colors; ++c)
    if (std::count(color.begin(), color.end(), c) > std::count(color.begin(), color.end(), best_color)) best_color = c;
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (color[i] == best_color) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

BoundCertificate certify_coloring(const LinkDiagram& d, const CheckerboardData& coloring, int sigma, const std::string& id) {
  BoundCertificate cert;
  cert.diagram_id = id;
  cert.coloring = coloring.label;
  cert.crossings = static_cast<int>(d.crossing_count());
  cert.mu = coloring.mu;
  cert.white_faces = coloring.white_count;
  cert.black_faces = coloring.black_count;
  cert.sigma = sigma;
  const WhiteBasis basis = white_basis(d, coloring);
  cert.goeritz = goeritz(basis, coloring).matrix;
  cert.omitted_face = basis.omitted_face;
  for (const auto& g : basis.generators) {
    cert.generator_faces.push_back(g.face);
    cert.generator_types.emplace_back(g.m, g.n);
  }
  cert.census = curve_census(d, coloring);

  std::vector<int> nonneg;
  for (std::size_t i = 0; i < basis.generators.size(); ++i)
    if (basis.generators[i].framing() >= 0) nonneg.push_back(static_cast<int>(i));
  std::vector<std::vector<bool>> adj(nonneg.size(), std::vector<bool>(nonneg.size(), false));
  for (std::size_t i = 0; i < nonneg.size(); ++i)
    for (std::size_t j = 0; j < nonneg.size(); ++j)
      adj[i][j] = i != j && cert.goeritz(static_cast<std::size_t>(nonneg[i]), static_cast<std::size_t>(nonneg[j])) != 0;
  for (int v : independent_set(adj, cert.method)) cert.independent_set.push_back(nonneg[static_cast<std::size_t>(v)]);

  const mpq_class mu(cert.mu), fw1(cert.white_faces - 1), size(static_cast<long>(cert.independent_set.size()));
  const mpq_class nonneg_count(cert.census.nonnegative);
  cert.achieved_fraction = nonneg_count == 0 ? mpq_class(1) : mpq_class(size / nonneg_count);
  cert.chain_applicable = 4 * size >= nonneg_count;
  cert.bound = mu - fw1 + size;
  cert.inequalities.push_back(make_inequality("gamma_neg <= 5/6 mu", cert.census.negative, mpq_class(5, 6) * mu));
  cert.inequalities.push_back(make_inequality("mu - (fw - 1) + |I| <= sigma", cert.bound, sigma));
  if (cert.chain_applicable)
    cert.inequalities.push_back(make_inequality("19/24 mu - 3/4 (fw - 1) <= sigma", mpq_class(19, 24) * mu - mpq_class(3, 4) * fw1, sigma));
  return cert;
}

}  // namespace

BoundReport certify_bound(const LinkDiagram& d, const std::string& id) {
  require_reduced_positive(d, "certify_bound");
  BoundReport report;
  report.diagram_id = id;
  report.crossings = static_cast<int>(d.crossing_count());
  report.seifert_circles = seifert_circles(d).count();
  report.betti = first_betti(d);
  report.sigma = gl_signature(d);

  const Reduction red = reduce_with_log(d);
  report.reduction_steps = red.steps.size();
  LinkDiagram rest = red.diagram;
  int rest_sigma = gl_signature(rest);
  {
    const auto [a, b] = colorings(rest);
    const int hopf = std::max(curve_census(rest, a).hopf_factors, curve_census(rest, b).hopf_factors);
    if (hopf > 0) {
      // The whole diagram is a Hopf link: contributes sigma = b1 = 1.
      report.hopf_factors = hopf;
      if (rest_sigma != hopf || first_betti(rest) != hopf) throw InternalError("Hopf factor with unexpected invariants");
      rest = LinkDiagram();
      rest_sigma = 0;
    }
  }
  report.reduced_crossings = static_cast<int>(rest.crossing_count());
  report.reduced_seifert_circles = seifert_circles(rest).count();
  report.reduced_sigma = rest_sigma;
  report.reduced_betti = first_betti(rest);

  const auto [a, b] = colorings(rest);
  report.certificates = {certify_coloring(rest, a, rest_sigma, id), certify_coloring(rest, b, rest_sigma, id)};

  const mpq_class c(report.reduced_crossings), s(rest_sigma);
  const bool chained = report.certificates[0].chain_applicable && report.certificates[1].chain_applicable;
  if (chained) report.combined.push_back(make_inequality("1/24 c' <= 2 sigma'", c / 24, 2 * s));
  report.combined.push_back(make_inequality("b1' <= c'", report.reduced_betti, c));
  report.combined.push_back(make_inequality("1/48 b1 <= sigma", mpq_class(report.betti, 48), report.sigma));
  report.combined.push_back(make_inequality("sigma <= b1", report.sigma, report.betti));

  bool failed = false;
  for (const auto& cert : report.certificates)
    for (const auto& q : cert.inequalities) failed = failed || !q.holds;
  for (const auto& q : report.combined) failed = failed || !q.holds;
  report.verdict = failed ? Verdict::kFailed : chained ? Verdict::kHolds : Verdict::kDegraded;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void require_position(const BraidWord& b, int position) {
  if (position < 0 || static_cast<std::size_t>(position) >= b.letters.size())
    throw PreconditionError("position " + std::to_string(position) + " is outside the word of length " + std::to_string(b.letters.size()));
}

}  // namespace

BraidWord twist_insert(const BraidWord& b, int position, int n) {
  if (!b.is_positive()) throw PreconditionError("twist insertion needs a positive word");
  require_position(b, position);
  if (n < 0) throw PreconditionError("twist count must be non-negative");
  BraidWord out = b;
  const auto at = out.letters.begin() + position;
  out.letters.insert(at, static_cast<std::size_t>(2 * n), *at);
  return out;
}

BraidWord smooth_at(const BraidWord& b, int position) {
  require_position(b, position);
  BraidWord out = b;
  out.letters.erase(out.letters.begin() + position);
  return out;
}

LinkDiagram insert_full_twists(const LinkDiagram& d, int crossing, int n, TwistKind kind) {
  const Crossing& x = d.crossing(crossing);
  if (x.sign() < 0) throw PreconditionError("twists are inserted at positive crossings only");
  if (n < 0) throw PreconditionError("twist count must be non-negative");
  // The chain runs from the side {e[3], e[0]} to the side {e[1], e[2]}. For a
  // positive crossing slots 3 and 0 are both incoming, so starting the chain
  // there makes the two strands parallel.
  std::array<int, 4> e{};
  std::array<bool, 4> in{};
  const int shift = kind == TwistKind::kParallel ? 0 : 1;
  for (int i = 0; i < 4; ++i) {
    e[static_cast<std::size_t>(i)] = x.arcs[static_cast<std::size_t>((i + shift) % 4)];
    in[static_cast<std::size_t>(i)] = x.incoming((i + shift) % 4);
  }
  const int k = 2 * n;
  int next_arc = static_cast<int>(d.arc_count());
  std::vector<Crossing> out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    if (static_cast<int>(c) != crossing) out.push_back(d.crossings()[c]);

  // Crossing j of the chain, counterclockwise: (u_{j-1}, u_j, v_j, v_{j-1}),
  // with the outer arcs e[0], e[3] before the first crossing and e[1], e[2]
  // after the last. Strands run straight through, so u and v swap sides.
  int prev_u = e[0], prev_v = e[3];
  bool prev_u_in = in[0], prev_v_in = in[3];
  for (int j = 0; j <= k; ++j) {
    const bool last = j == k;
    const int u = last ? e[1] : next_arc++;
    const int v = last ? e[2] : next_arc++;
    const std::array<int, 4> cyc{prev_u, u, v, prev_v};
    // The strand entering at position 0 leaves at position 2, and so on.
    const std::array<bool, 4> cin{prev_u_in, !prev_v_in, !prev_u_in, prev_v_in};
    if (last && (cin[1] != in[1] || cin[2] != in[2])) throw InternalError("twist chain orientation mismatch");
    int p = 0;
    while (!(cin[static_cast<std::size_t>(p)] && cin[static_cast<std::size_t>((p + 1) % 4)])) ++p;
    Crossing y;
    const int slot0 = (p + 1) % 4;  // positive: the over-strand enters just clockwise of slot 0
    for (int i = 0; i < 4; ++i) y.arcs[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((slot0 + i) % 4)];
    y.over_in = 3;
    out.push_back(y);
    prev_u = u;
    prev_v = v;
    prev_u_in = !cin[1];
    prev_v_in = !cin[2];
  }
  return LinkDiagram(std::move(out), d.free_loops());
}

UnitCirclePoint choose_omega0(const BraidWord& base, const BraidWord& smoothed, int max_q) {
  if (is_split(closure_diagram(smoothed))) throw PreconditionError("the smoothed closure is split");
  const IntMatrix ak = seifert_matrix(base).matrix;
  const IntPolynomial delta = alexander_raw(seifert_matrix(smoothed).matrix);
  const bool linked = closure_components(smoothed) == 2 && linking_number(smoothed) != 0;
  if (!linked && delta.is_zero()) throw PreconditionError("the Alexander polynomial of the smoothed link vanishes identically");
  if (linked && delta.is_zero()) throw InternalError("nonzero linking number but vanishing Alexander polynomial");
  for (int q = 4; q <= max_q; ++q) {
    if (divides(cyclotomic_polynomial(2 * q), delta)) continue;
    const UnitCirclePoint w(1, q);
    if (levine_tristram(ak, w).signature() == 0) return w;
  }
  throw PreconditionError("no admissible angle 1/q with q <= " + std::to_string(max_q));
}

IntMatrix bordered_seifert_matrix(const BraidWord& b, int position, int n) {
  if (!b.is_positive()) throw PreconditionError("twist family needs a positive word");
  require_position(b, position);
  if (n < 0) throw PreconditionError("twist count must be non-negative");
  const SeifertMatrixData data = seifert_matrix(b);
  const std::size_t m = data.basis.size();
  int before = -1, after = -1;
  for (std::size_t g = 0; g < m; ++g) {
    if (data.basis[g].second == position) before = static_cast<int>(g);
    if (data.basis[g].first == position) after = static_cast<int>(g);
  }
  if (before < 0 && after < 0) throw PreconditionError("the twisted letter is the only one with its index");
  const int h = after >= 0 ? after : before;

  // Columns of p are the new basis vectors. The curve through the twisted band
  // comes first; the curve through the neighbouring bands skips it.
  IntMatrix p(m, m);
  p(static_cast<std::size_t>(h), 0) = 1;
  std::size_t col = 1;
  for (std::size_t g = 0; g < m; ++g) {
    if (static_cast<int>(g) == h) continue;
    p(g, col) = 1;
    if (static_cast<int>(g) == before && after >= 0) p(static_cast<std::size_t>(after), col) = 1;
    ++col;
  }
  IntMatrix s = p.transposed() * data.matrix * p;
  s(0, 0) -= n;  // each full twist of a right-handed band
  return s;
}

namespace {

std::optional<int> threshold(const std::vector<int>& sigma) {
  if (sigma.size() < 2 || sigma.back() <= 0) return std::nullopt;
  int n0 = static_cast<int>(sigma.size()) - 1;
  while (n0 > 0 && sigma[static_cast<std::size_t>(n0 - 1)] > 0) --n0;
  return n0;
}

}  // namespace

TwistFamilyReport twist_family_experiment(const BraidWord& b, int position, int nmax) {
  if (!b.is_positive()) throw PreconditionError("twist family needs a positive word");
  require_position(b, position);
  if (nmax < 0) throw PreconditionError("nmax must be non-negative");
  if (closure_components(b) != 1) throw PreconditionError("the closure of the base word must be a knot");
  TwistFamilyReport rep;
  rep.base = b;
  rep.position = position;
  rep.nmax = nmax;
  rep.smoothed = smooth_at(b, position);
  if (is_split(closure_diagram(rep.smoothed))) throw PreconditionError("the smoothed closure is split");
  const IntMatrix al = bennequin_seifert_matrix(rep.smoothed).matrix;
  rep.smoothed_alexander = alexander(al);
  rep.smoothed_components = closure_components(rep.smoothed);
  if (rep.smoothed_components == 2) rep.smoothed_linking = linking_number(rep.smoothed);
  rep.omega0 = choose_omega0(b, rep.smoothed);
  rep.smoothed_sigma = levine_tristram(al, rep.omega0).signature();
  if (rep.smoothed_sigma < 0) throw InternalError("positive link with negative signature at omega0");

  std::vector<int> letter_of;
  const LinkDiagram base_diagram = closure_diagram(b, &letter_of);
  const int twisted_crossing = static_cast<int>(std::find(letter_of.begin(), letter_of.end(), position) - letter_of.begin());

  for (int n = 0; n <= nmax; ++n) {
    rep.sigma.push_back(levine_tristram(bennequin_seifert_matrix(twist_insert(b, position, n)).matrix, rep.omega0).signature());

    const IntMatrix s = bordered_seifert_matrix(b, position, n);
    rep.band_sigma.push_back(levine_tristram(s, rep.omega0).signature());
    // Cross-check S_N against the diagram with antiparallel twists inserted.
    const LinkDiagram twisted = insert_full_twists(base_diagram, twisted_crossing, n, TwistKind::kAntiparallel);
    if (gl_signature(twisted) != levine_tristram(s, UnitCirclePoint(1, 1)).signature())
      throw InternalError("band-twisted Seifert matrix disagrees with the twisted diagram");
    const std::size_t m = s.rows();
    IntMatrix block(m - 1, m - 1);
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 1; j < m; ++j) block(i - 1, j - 1) = s(i, j);
    if (n == 0) {
      rep.det_b = determinant(block);
      rep.border_matches_smoothed = block == al;
    }
    rep.det.push_back(determinant(s));
    rep.x.push_back(s(0, 0));
    const mpz_class r = rep.det.back() - rep.x.back() * rep.det_b;
    if (n == 0) rep.r = r;
    else if (r != rep.r) throw InternalError("det S_N - x_N det B is not constant in N");
  }

  rep.affine_intercept = rep.det[0];
  rep.affine_slope = nmax >= 1 ? mpz_class(rep.det[1] - rep.det[0]) : mpz_class(-rep.det_b);
  rep.affine_exact = true;
  for (int n = 0; n <= nmax; ++n)
    rep.affine_exact = rep.affine_exact && rep.det[static_cast<std::size_t>(n)] == rep.affine_intercept + rep.affine_slope * n;
  rep.monotone = std::is_sorted(rep.sigma.begin(), rep.sigma.end());
  rep.band_monotone = std::is_sorted(rep.band_sigma.begin(), rep.band_sigma.end());
  rep.n0 = threshold(rep.sigma);
  rep.band_n0 = threshold(rep.band_sigma);
  return rep;
}

}  // namespace knotsig
