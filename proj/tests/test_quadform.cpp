#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "knotsig/braid.hpp"
#include "knotsig/error.hpp"
#include "knotsig/quadform.hpp"

using namespace knotsig;

namespace {

// Floating-point oracle: eigenvalue counts of -[(1-w)A + (1-conj w)A^T].
// Returns false when an eigenvalue is too close to zero to decide.
bool eigen_inertia(const IntMatrix& a, double angle, SignatureTriple& out) {
  const std::size_t n = a.rows();
  const std::complex<double> w = std::polar(1.0, std::numbers::pi * angle);
  Eigen::MatrixXcd h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = -((1.0 - w) * double(a(i, j)) + (1.0 - std::conj(w)) * double(a(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  out = {};
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    const double ev = es.eigenvalues()(k);
    if (std::abs(ev) < 1e-7) return false;
    (ev > 0 ? out.positive : out.negative) += 1;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

const IntMatrix kTrefoil{{-1, 0}, {1, -1}};

}  // namespace

TEST_CASE("symmetric signature of small fixed matrices") {
  CHECK(signature_symmetric(IntMatrix{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}) == SignatureTriple{1, 1, 1});
  CHECK(signature_symmetric(IntMatrix{{0, 1}, {1, 0}}) == SignatureTriple{1, 1, 0});
  CHECK(signature_symmetric(IntMatrix{{2, -1}, {-1, 2}}) == SignatureTriple{2, 0, 0});
  CHECK(signature_symmetric(IntMatrix{{0, 0}, {0, 0}}) == SignatureTriple{0, 0, 2});
  CHECK(signature_symmetric(IntMatrix(0, 0)) == SignatureTriple{});
  CHECK_THROWS_AS(signature_symmetric(IntMatrix{{0, 1}, {0, 0}}), PreconditionError);
}

TEST_CASE("symmetric signature matches eigenvalues and is congruence invariant") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    IntMatrix b = random_matrix(rng, n, 3);
    IntMatrix s = b + b.transposed();
    if (trial % 3 == 0)
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 0;  // exercise the off-diagonal pivot
    const SignatureTriple exact = signature_symmetric(s);

    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e(i, j) = double(s(i, j));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
    SignatureTriple oracle;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
      const double ev = es.eigenvalues()(k);
      if (std::abs(ev) < 1e-9) ++oracle.nullity;
      else (ev > 0 ? oracle.positive : oracle.negative) += 1;
    }
    CHECK(exact == oracle);

    // Unimodular change of basis: product of elementary matrices.
    IntMatrix p = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int k = 0; k < 6 && n > 1; ++k) {
      std::size_t i = idx(rng), j = idx(rng);
      if (i == j) continue;
      IntMatrix el = IntMatrix::identity(n);
      el(i, j) = coef(rng);
      p = p * el;
    }
    CHECK(signature_symmetric(p.transposed() * s * p) == exact);
  }
}

TEST_CASE("Levine-Tristram signature of the positive trefoil") {
  CHECK(levine_tristram(kTrefoil, UnitCirclePoint(1, 1)) == SignatureTriple{2, 0, 0});
  CHECK(levine_tristram(kTrefoil, UnitCirclePoint(1, 4)).signature() == 0);
  CHECK(levine_tristram(kTrefoil, UnitCirclePoint(1, 2)).signature() == 2);
  // At the root of the Alexander polynomial the form degenerates.
  CHECK(levine_tristram(kTrefoil, UnitCirclePoint(1, 3)) == SignatureTriple{1, 0, 1});
  CHECK(levine_tristram(kTrefoil, UnitCirclePoint(0, 1)) == SignatureTriple{0, 0, 2});
  CHECK(levine_tristram(IntMatrix(0, 0), UnitCirclePoint(1, 1)) == SignatureTriple{});
}

TEST_CASE("exact Levine-Tristram matches a floating-point eigenvalue oracle") {
  std::mt19937 rng(5);
  const std::vector<std::pair<long, long>> angles{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 5}, {5, 6}, {7, 4}};
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + trial % 6, 2);
    for (auto [p, q] : angles) {
      SignatureTriple oracle;
      const SignatureTriple exact = levine_tristram(a, UnitCirclePoint(p, q), LtMode::kExact);
      CHECK(exact.dimension() == int(a.rows()));
      if (!eigen_inertia(a, double(p) / double(q), oracle)) continue;
      CHECK(exact == oracle);
      ++compared;
    }
  }
  CHECK(compared > 200);
}

TEST_CASE("interval fallback agrees with the exact path") {
  std::mt19937 rng(9);
  const std::vector<std::pair<long, long>> angles{{1, 7}, {3, 11}, {5, 9}, {2, 5}, {1, 1}, {1, 2}};
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + trial % 6, 3);
    for (auto [p, q] : angles) {
      const UnitCirclePoint w(p, q);
      const SignatureTriple exact = levine_tristram(a, w, LtMode::kExact);
      if (exact.nullity != 0) {
        CHECK_THROWS_AS(levine_tristram(a, w, LtMode::kInterval), CertificationError);
        continue;
      }
      CHECK(levine_tristram(a, w, LtMode::kInterval) == exact);
    }
  }
}

TEST_CASE("auto mode handles a large cyclotomic degree") {
  // order 2*97 -> field degree 96 > kMaxExactDegree
  const UnitCirclePoint w(1, 97);
  CHECK(levine_tristram(kTrefoil, w).signature() == 0);
  const UnitCirclePoint w2(50, 97);
  CHECK(levine_tristram(kTrefoil, w2).signature() == 2);
}

TEST_CASE("determinant relation holds exactly") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix a = random_matrix(rng, 1 + trial % 5, 2);
    const IntPolynomial delta = pencil_determinant(-a.transposed(), a);  // det(tA - A^T)
    for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 1}, {1, 3}, {2, 5}, {3, 4}})
      CHECK(det_relation_check(a, UnitCirclePoint(p, q), delta));
    CHECK_FALSE(det_relation_check(a, UnitCirclePoint(1, 3), delta + IntPolynomial{1}));
  }
}

TEST_CASE("jump points of known Alexander polynomials") {
  auto trefoil = jump_points(kTrefoil);
  REQUIRE(trefoil.size() == 2);
  CHECK(trefoil[0].exact());
  CHECK(trefoil[0].point() == UnitCirclePoint(1, 3));
  CHECK(trefoil[1].point() == UnitCirclePoint(5, 3));

  // Phi_10: roots at angles 1/5, 3/5, 7/5, 9/5.
  auto t25 = unit_circle_roots(IntPolynomial{1, -1, 1, -1, 1});
  REQUIRE(t25.size() == 4);
  CHECK(t25[1].point() == UnitCirclePoint(3, 5));

  // Figure eight: no roots on the circle.
  CHECK(unit_circle_roots(IntPolynomial{-1, 3, -1}).empty());

  // t^4 - t^3 - t^2 - t + 1 has a non-cyclotomic pair at 2cos(theta) = (1 - sqrt 13)/2.
  auto nc = unit_circle_roots(IntPolynomial{1, -1, -1, -1, 1});
  REQUIRE(nc.size() == 2);
  const double expect = std::acos((1 - std::sqrt(13.0)) / 4) / std::numbers::pi;
  CHECK_FALSE(nc[0].exact());
  CHECK(nc[0].lower.get_d() <= expect + 1e-12);
  CHECK(nc[0].upper.get_d() >= expect - 1e-12);
  CHECK(nc[0].upper - nc[0].lower < mpq_class(1, 1000000));
  CHECK(abs(nc[1].lower + nc[0].upper - 2) == 0);

  // Mixed: (t+1)^2 Phi_3 (t^2 - 3t + 1), multiplicities kept.
  auto mixed = unit_circle_roots(IntPolynomial{1, 2, 1} * IntPolynomial{1, 1, 1} * IntPolynomial{1, -3, 1});
  REQUIRE(mixed.size() == 3);
  CHECK(mixed[0].point() == UnitCirclePoint(2, 3));
  CHECK(mixed[1].point() == UnitCirclePoint(1, 1));
  CHECK(mixed[1].multiplicity == 2);

  CHECK_THROWS_AS(jump_points(IntMatrix{{0, 0}, {0, 0}}), PreconditionError);
}

TEST_CASE("signature is constant between consecutive jump points") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    IntMatrix a = random_matrix(rng, 2 + trial % 4, 2);
    IntMatrix sym = a - a.transposed();
    if (determinant(sym) == 0) continue;  // need det(A - A^T) != 0 for a nonzero polynomial at t = 1
    std::vector<JumpPoint> jumps;
    try {
      jumps = jump_points(a);
    } catch (const PreconditionError&) {
      continue;
    }
    std::vector<mpq_class> cuts{0};
    for (const auto& j : jumps) {
      if (j.lower > 1) break;
      cuts.push_back(j.lower);
      cuts.push_back(j.upper);
    }
    cuts.push_back(1);
    for (std::size_t k = 0; k + 1 < cuts.size(); k += 2) {
      const mpq_class lo = cuts[k], hi = cuts[k + 1];
      if (hi - lo < mpq_class(1, 1 << 20)) continue;
      // Two rational probes in the open gap.
      auto probe = [&](int num) {
        mpq_class x = lo + (hi - lo) * mpq_class(num, 7);
        // Round to a small denominator inside the gap to keep field degrees low.
        for (long q = 2; q < 200; ++q) {
          const mpq_class xq = x * q;
          mpz_class pnum = xq.get_num() / xq.get_den();
          for (mpz_class c = pnum; c <= pnum + 1; ++c) {
            mpq_class cand(c, q);
            cand.canonicalize();
            if (cand > lo && cand < hi) return cand;
          }
        }
        return x;
      };
      const mpq_class x1 = probe(2), x2 = probe(5);
      if (mpz_class(x1.get_den()) > 200 || mpz_class(x2.get_den()) > 200) continue;
      CHECK(levine_tristram(a, UnitCirclePoint(x1)).signature() == levine_tristram(a, UnitCirclePoint(x2)).signature());
    }
  }
}

TEST_CASE("trefoil is zero before its Alexander root and conjugation symmetric") {
  const IntMatrix t{{-1, 0}, {1, -1}};
  CHECK(levine_tristram(t, UnitCirclePoint(1, 6)).signature() == 0);
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
    for (long p : {1L, 3L, 5L}) {
      const SignatureTriple s = levine_tristram(a, UnitCirclePoint(p, 7));
      const SignatureTriple c = levine_tristram(a, UnitCirclePoint(14 - p, 7));
      CHECK(s.positive == c.positive);
      CHECK(s.negative == c.negative);
      CHECK(s.nullity == c.nullity);
    }
  }
}

TEST_CASE("changing a positive crossing to a negative one never raises the signature") {
  std::mt19937 rng(12);
  std::vector<UnitCirclePoint> grid;
  for (long p = 1; p <= 16; ++p) grid.emplace_back(2 * p - 1, 17);  // 16 angles in (0, 2)
  for (int trial = 0; trial < 40; ++trial) {
    BraidWord b;
    b.strands = 2 + trial % 3;
    std::uniform_int_distribution<int> idx(1, b.strands - 1), sgn(0, 3);
    for (int k = 0; k < 3 + trial % 6; ++k) b.letters.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
    const IntMatrix before = seifert_matrix(b).matrix;
    for (std::size_t pos = 0; pos < b.letters.size(); ++pos) {
      if (b.letters[pos] < 0) continue;
      BraidWord flipped = b;
      flipped.letters[pos] = -flipped.letters[pos];
      const IntMatrix after = seifert_matrix(flipped).matrix;
      for (const auto& w : grid)
        CHECK(levine_tristram(before, w).signature() >= levine_tristram(after, w).signature());
    }
  }
}
