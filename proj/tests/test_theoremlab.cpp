#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotsig/error.hpp"
#include "knotsig/quadform.hpp"
#include "knotsig/theoremlab.hpp"

using namespace knotsig;

namespace {

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kHopf = "X[1,4,2,3] X[4,1,3,2]";
// T(2,4) with a positive clasp between two antiparallel arcs of one Seifert
// circle. The clasp's bigon is a Seifert circle touching two distinct circles.
const char* kClasp = "X[1,5,2,8] X[3,7,4,6] X[5,3,6,9] X[7,1,8,10] X[12,11,10,2] X[11,12,9,4]";

std::map<BigonKind, int> kinds(const LinkDiagram& d) {
  std::map<BigonKind, int> out;
  for (const auto& b : classify_bigons(d)) ++out[b.kind];
  return out;
}

BraidWord random_positive(std::mt19937& rng, int strands, int extra) {
  BraidWord b;
  b.strands = strands;
  std::uniform_int_distribution<int> idx(1, strands - 1);
  for (int i = 1; i < strands; ++i) b.letters.insert(b.letters.end(), {i, i});
  for (int k = 0; k < extra; ++k) b.letters.push_back(idx(rng));
  std::shuffle(b.letters.begin(), b.letters.end(), rng);
  return b;
}

}  // namespace

TEST_CASE("bigon classification") {
  CHECK(kinds(parse_pd(kTrefoil)) == std::map<BigonKind, int>{{BigonKind::kNotSeifertCircle, 3}});
  const auto hopf = kinds(parse_pd(kHopf));
  CHECK(hopf.at(BigonKind::kSeifertReducing) == 2);
  CHECK(hopf.count(BigonKind::kSeifertNonreducing) == 0);
  const LinkDiagram clasp = parse_pd(kClasp);
  CHECK(kinds(clasp).at(BigonKind::kSeifertNonreducing) == 1);
  CHECK_THROWS_AS(classify_bigons(closure_diagram(parse_braid("2: 1"))), PreconditionError);
  CHECK_THROWS_AS(classify_bigons(mirror(parse_pd(kTrefoil))), PreconditionError);
}

TEST_CASE("reduce removes the clasp and keeps b1") {
  const LinkDiagram clasp = parse_pd(kClasp);
  CHECK(clasp.crossing_count() == 6);
  CHECK(seifert_circles(clasp).count() == 4);
  CHECK(first_betti(clasp) == 3);
  const Reduction r = reduce_with_log(clasp);
  CHECK(r.steps.size() == 1);
  CHECK(r.diagram.crossing_count() == 4);
  CHECK(seifert_circles(r.diagram).count() == 2);
  CHECK(first_betti(r.diagram) == 3);
  CHECK(r.steps[0].sigma_after <= r.steps[0].sigma_before);
  // Same shape as the closure of sigma_1^4, up to arc labels.
  const LinkDiagram t24 = closure_diagram(parse_braid("2: 1 1 1 1"));
  const auto sizes = [](const LinkDiagram& d) {
    std::vector<int> v;
    for (const Face& f : faces(d)) v.push_back(f.edge_count());
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sizes(r.diagram) == sizes(t24));
  CHECK(r.diagram.component_count() == 2);
  CHECK(gl_signature(r.diagram) == gl_signature(t24));
  CHECK(reduce(parse_pd(kTrefoil)).crossing_count() == 3);
  CHECK(reduce(parse_pd(kHopf)).crossing_count() == 2);
}

TEST_CASE("curve census") {
  const LinkDiagram t = parse_pd(kTrefoil);
  const auto [a, b] = colorings(t);
  const CurveCensus ca = curve_census(t, a);
  CHECK(ca.count(0, 3) == 1);
  CHECK(ca.negative == 1);
  CHECK(ca.nonnegative == 0);
  const CurveCensus cb = curve_census(t, b);
  CHECK(cb.count(2, 0) == 2);
  CHECK(cb.negative == 0);
  const LinkDiagram u = parse_pd("");
  const auto [ua, ub] = colorings(u);
  CHECK(curve_census(u, ua).counts.empty());
  const LinkDiagram h = parse_pd(kHopf);
  const auto [ha, hb] = colorings(h);
  CHECK(curve_census(h, ha).hopf_factors == 1);
}

TEST_CASE("independent sets") {
  IndependentSetMethod m;
  // 5-cycle: maximum independent set has 2 vertices.
  std::vector<std::vector<bool>> c5(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) c5[static_cast<std::size_t>(i)][static_cast<std::size_t>((i + 1) % 5)] = c5[static_cast<std::size_t>((i + 1) % 5)][static_cast<std::size_t>(i)] = true;
  CHECK(independent_set(c5, m).size() == 2);
  CHECK(m == IndependentSetMethod::kExact);
  // Random graphs: exact result is independent and no smaller than greedy.
  std::mt19937 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + static_cast<std::size_t>(trial);
    std::vector<std::vector<bool>> g(n, std::vector<bool>(n, false));
    std::bernoulli_distribution edge(0.2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g[i][j] = g[j][i] = edge(rng);
    const auto s = independent_set(g, m);
    for (int x : s)
      for (int y : s) CHECK_FALSE(g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
    // Brute force on small graphs.
    if (n <= 16) {
      std::size_t best = 0;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
          for (std::size_t j = i + 1; j < n && ok; ++j) ok = !((mask >> i & 1) && (mask >> j & 1) && g[i][j]);
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
      }
      CHECK(s.size() == best);
    }
  }
  // Above 40 vertices the greedy fallback is used.
  std::vector<std::vector<bool>> big(50, std::vector<bool>(50, false));
  for (std::size_t i = 0; i + 1 < 50; ++i) big[i][i + 1] = big[i + 1][i] = true;
  const auto s = independent_set(big, m);
  CHECK(m == IndependentSetMethod::kGreedy);
  CHECK(s.size() == 25);
}

TEST_CASE("bound certificates") {
  const BoundReport t = certify_bound(parse_pd(kTrefoil), "3_1");
  CHECK(t.sigma == 2);
  CHECK(t.betti == 2);
  CHECK(t.verdict == Verdict::kHolds);
  for (const auto& cert : t.certificates)
    for (const auto& q : cert.inequalities) CHECK(q.holds);
  const BoundReport u = certify_bound(parse_pd(""), "unknot");
  CHECK(u.verdict == Verdict::kHolds);
  CHECK(u.sigma == 0);
  CHECK(u.betti == 0);
  const BoundReport h = certify_bound(parse_pd(kHopf), "hopf");
  CHECK(h.hopf_factors == 1);
  CHECK(h.sigma == 1);
  CHECK(h.verdict == Verdict::kHolds);
  const BoundReport c = certify_bound(parse_pd(kClasp), "clasp");
  CHECK(c.reduction_steps == 1);
  CHECK(c.reduced_crossings == 4);
  CHECK(c.verdict == Verdict::kHolds);
  CHECK_THROWS_AS(certify_bound(mirror(parse_pd(kTrefoil))), PreconditionError);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const BraidWord b = random_positive(rng, 2 + trial % 4, trial % 9);
    const BoundReport r = certify_bound(closure_diagram(b));
    CHECK(r.verdict != Verdict::kFailed);
    CHECK(r.sigma == levine_tristram(seifert_matrix(b).matrix, UnitCirclePoint(1, 1)).signature());
    for (const auto& cert : r.certificates) {
      CHECK(cert.mu - (cert.white_faces - 1) + static_cast<int>(cert.independent_set.size()) <= cert.sigma);
      for (std::size_t i = 0; i < cert.independent_set.size(); ++i) {
        const auto gi = static_cast<std::size_t>(cert.independent_set[i]);
        CHECK(cert.goeritz(gi, gi) >= 0);
        for (std::size_t j = i + 1; j < cert.independent_set.size(); ++j)
          CHECK(cert.goeritz(gi, static_cast<std::size_t>(cert.independent_set[j])) == 0);
      }
    }
  }
}

TEST_CASE("twist insertion and smoothing") {
  const BraidWord t = parse_braid("2: 1 1 1");
  CHECK(twist_insert(t, 0, 1) == parse_braid("2: 1 1 1 1 1"));
  CHECK(twist_insert(t, 0, 0) == t);
  CHECK(twist_insert(parse_braid("3: 1 2 1 2"), 1, 1) == parse_braid("3: 1 2 2 2 1 2"));
  CHECK_THROWS_AS(twist_insert(t, 3, 1), PreconditionError);
  CHECK_THROWS_AS(twist_insert(parse_braid("2: 1 -1 1"), 0, 1), PreconditionError);
  CHECK(smooth_at(t, 0) == parse_braid("2: 1 1"));
  CHECK(closure_components(smooth_at(t, 0)) == 2);
  CHECK(smooth_at(parse_braid("2: 1 1"), 0) == parse_braid("2: 1"));
  CHECK(smooth_at(parse_braid("2: 1"), 0).letters.empty());
  CHECK_THROWS_AS(smooth_at(t, -1), PreconditionError);
  // T(2, 3 + 2k) has signature 2 + 2k.
  for (int k = 0; k <= 10; ++k) {
    const IntMatrix a = seifert_matrix(twist_insert(t, 0, k)).matrix;
    CHECK(levine_tristram(a, UnitCirclePoint(1, 1)).signature() == 2 + 2 * k);
  }
}

TEST_CASE("choose_omega0") {
  const BraidWord t = parse_braid("2: 1 1 1");
  const UnitCirclePoint w = choose_omega0(t, smooth_at(t, 0));
  CHECK(w == UnitCirclePoint(1, 4));
  // 1/6 is also admissible: trefoil signature 0 there and Hopf Alexander nonzero.
  CHECK(levine_tristram(seifert_matrix(t).matrix, UnitCirclePoint(1, 6)).signature() == 0);
  CHECK(levine_tristram(seifert_matrix(parse_braid("2: 1 1")).matrix, UnitCirclePoint(1, 6)).nullity == 0);
  // T(2,5): the first jump is at angle 1/5, so omega0 lies below it.
  const BraidWord t5 = parse_braid("2: 1 1 1 1 1");
  const UnitCirclePoint w5 = choose_omega0(t5, smooth_at(t5, 0));
  CHECK(w5.angle() < mpq_class(1, 5));
  CHECK_THROWS_AS(choose_omega0(t, parse_braid("4: 1 1 3 3")), PreconditionError);
  CHECK_THROWS_AS(choose_omega0(t, parse_braid("2: 1 -1")), PreconditionError);
}

TEST_CASE("twist insertion in diagrams") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const BraidWord b = random_positive(rng, 2 + trial % 3, 1 + trial % 5);
    std::vector<int> letter_of;
    const LinkDiagram d = closure_diagram(b, &letter_of);
    const int pos = trial % static_cast<int>(b.letters.size());
    const int x = static_cast<int>(std::find(letter_of.begin(), letter_of.end(), pos) - letter_of.begin());
    for (int n = 0; n <= 3; ++n) {
      const LinkDiagram par = insert_full_twists(d, x, n, TwistKind::kParallel);
      const LinkDiagram anti = insert_full_twists(d, x, n, TwistKind::kAntiparallel);
      const BraidWord w = twist_insert(b, pos, n);
      for (const LinkDiagram* t : {&par, &anti}) {
        CHECK(t->crossing_count() == d.crossing_count() + 2 * static_cast<std::size_t>(n));
        CHECK(t->is_positive());
        CHECK(t->component_count() == d.component_count());
        CHECK(is_reduced(*t));
      }
      // Parallel twists are the braid power; antiparallel ones keep the genus.
      CHECK(first_betti(par) == first_betti(closure_diagram(w)));
      CHECK(gl_signature(par) == gl_signature(closure_diagram(w)));
      CHECK(first_betti(anti) == first_betti(d));
      const IntMatrix s = bordered_seifert_matrix(b, pos, n);
      CHECK(gl_signature(anti) == levine_tristram(s, UnitCirclePoint(1, 1)).signature());
      const auto [ca, cb] = colorings(anti);
      CHECK(abs(determinant(goeritz(anti, ca).matrix)) == abs(determinant(s + s.transposed())));
    }
  }
  const LinkDiagram t = closure_diagram(parse_braid("2: 1 1 1"));
  CHECK_THROWS_AS(insert_full_twists(mirror(t), 0, 1, TwistKind::kParallel), PreconditionError);
  CHECK_THROWS_AS(insert_full_twists(t, 0, -1, TwistKind::kParallel), PreconditionError);
}

TEST_CASE("twist family experiments") {
  for (const char* word : {"2: 1 1 1", "3: 1 2 1 2"}) {
    const TwistFamilyReport r = twist_family_experiment(parse_braid(word), 0, 8);
    CHECK(r.sigma.size() == 9);
    CHECK(r.band_sigma.size() == 9);
    CHECK(r.monotone);
    CHECK(r.band_monotone);
    CHECK(r.affine_exact);
    CHECK(r.border_matches_smoothed);
    REQUIRE(r.n0.has_value());
    CHECK(*r.n0 <= 8);
    for (int n = *r.n0; n <= 8; ++n) CHECK(r.sigma[static_cast<std::size_t>(n)] > 0);
    CHECK(r.smoothed_sigma >= 0);
    CHECK(r.affine_slope == -r.det_b);
    for (int n = 0; n <= 8; ++n) {
      CHECK(r.x[static_cast<std::size_t>(n)] == r.x[0] - n);
      CHECK(r.det[static_cast<std::size_t>(n)] == r.x[static_cast<std::size_t>(n)] * r.det_b + r.r);
    }
  }
  // Trefoil: K(N) = T(2, 2N+3). At e^{i pi/4} its signature is twice the
  // number of odd j < (2N+3)/4.
  const TwistFamilyReport tr = twist_family_experiment(parse_braid("2: 1 1 1"), 0, 6);
  CHECK(tr.omega0 == UnitCirclePoint(1, 4));
  CHECK(tr.sigma == std::vector<int>{0, 2, 2, 2, 2, 4, 4});
  CHECK(tr.band_sigma == std::vector<int>{0, 2, 2, 2, 2, 2, 2});
  CHECK(tr.band_n0 == 1);
  const TwistFamilyReport one = twist_family_experiment(parse_braid("2: 1 1 1"), 0, 0);
  CHECK(one.sigma.size() == 1);
  CHECK_FALSE(one.n0.has_value());
  CHECK_THROWS_AS(twist_family_experiment(parse_braid("2: 1 1 1"), 99, 2), PreconditionError);
  CHECK_THROWS_AS(twist_family_experiment(parse_braid("2: 1 1"), 0, 2), PreconditionError);
}

TEST_CASE("band twisting never lowers the signature") {
  std::mt19937 rng(19);
  std::vector<UnitCirclePoint> grid;
  for (long p = 1; p < 16; p += 2) grid.emplace_back(p, 8);
  for (int trial = 0; trial < 25; ++trial) {
    const BraidWord b = random_positive(rng, 2 + trial % 3, 1 + trial % 5);
    const int pos = trial % static_cast<int>(b.letters.size());
    for (int n = 1; n <= 3; ++n) {
      const IntMatrix s = bordered_seifert_matrix(b, pos, n);
      const IntMatrix prev = bordered_seifert_matrix(b, pos, n - 1);
      CHECK(alexander(bordered_seifert_matrix(b, pos, 0)) == alexander(seifert_matrix(b).matrix));
      for (const auto& w : grid) {
        CHECK(levine_tristram(s, w).signature() >= levine_tristram(prev, w).signature());
        CHECK(levine_tristram(seifert_matrix(twist_insert(b, pos, n)).matrix, w).signature() >=
              levine_tristram(seifert_matrix(twist_insert(b, pos, n - 1)).matrix, w).signature());
      }
    }
  }
}
