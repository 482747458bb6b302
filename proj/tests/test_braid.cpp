#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotsig/braid.hpp"
#include "knotsig/error.hpp"
#include "knotsig/quadform.hpp"

using namespace knotsig;

namespace {

using QMatrix = Matrix<mpq_class>;

// Reduced Burau image of one letter at a rational t.
QMatrix burau_letter(int n, int letter, const mpq_class& t) {
  const std::size_t m = static_cast<std::size_t>(n - 1);
  QMatrix g = QMatrix::identity(m);
  const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;  // 0-based column of -t
  g(i, i) = -t;
  if (i > 0) g(i - 1, i) = t;
  if (i + 1 < m) g(i + 1, i) = 1;
  if (letter > 0) return g;
  // The block acts on a single column, so its inverse is easy to write down.
  QMatrix inv = QMatrix::identity(m);
  inv(i, i) = -1 / t;
  if (i > 0) inv(i - 1, i) = 1;
  if (i + 1 < m) inv(i + 1, i) = 1 / t;
  return inv;
}

mpq_class det_q(QMatrix a) {
  const std::size_t n = a.rows();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

// det(I - Burau(b)) at t.
mpq_class burau_det(const BraidWord& b, const mpq_class& t) {
  const std::size_t m = static_cast<std::size_t>(b.strands - 1);
  QMatrix acc = QMatrix::identity(m);
  for (int l : b.letters) acc = acc * burau_letter(b.strands, l, t);
  QMatrix diff = QMatrix::identity(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) diff(i, j) -= acc(i, j);
  return det_q(diff);
}

mpq_class eval(const IntPolynomial& p, const mpq_class& t) {
  mpq_class r = 0;
  for (int k = p.degree(); k >= 0; --k) r = r * t + mpq_class(p.coefficient(k));
  return r;
}

// Writes r = sign * base^k, or returns false.
bool unit_power(mpq_class r, long base, int& sign, int& k) {
  if (r == 0) return false;
  sign = r < 0 ? -1 : 1;
  r = abs(r);
  k = 0;
  while (r.get_num() % base == 0) { r /= base; ++k; }
  while (r.get_den() % base == 0) { r *= base; --k; }
  return r == 1;
}

BraidWord random_word(std::mt19937& rng, int strands, int len) {
  BraidWord b;
  b.strands = strands;
  std::uniform_int_distribution<int> idx(1, strands - 1), sgn(0, 1);
  for (int k = 0; k < len; ++k) b.letters.push_back(idx(rng) * (sgn(rng) ? 1 : -1));
  return b;
}

int raw_signature(const BraidWord& b) {
  const IntMatrix a = seifert_matrix(b).matrix;
  return signature_symmetric(a + a.transposed()).signature();
}

}  // namespace

TEST_CASE("parse_braid") {
  const BraidWord t = parse_braid("2: 1 1 1");
  CHECK(t.strands == 2);
  CHECK(t.letters == std::vector<int>{1, 1, 1});
  CHECK(t.is_positive());
  CHECK_FALSE(parse_braid("3: 1 -2").is_positive());
  CHECK(parse_braid("  3 :1   -2 ").to_string() == "3: 1 -2");
  CHECK(parse_braid("2:").letters.empty());
  CHECK(parse_braid("1:").strands == 1);
  CHECK_THROWS_AS(parse_braid("2: 5"), ParseError);
  CHECK_THROWS_AS(parse_braid("2: 0"), ParseError);
  CHECK_THROWS_AS(parse_braid(""), ParseError);
  CHECK_THROWS_AS(parse_braid("1 1 1"), ParseError);
  CHECK_THROWS_AS(parse_braid("0: "), ParseError);
  CHECK_THROWS_AS(parse_braid("2: 1 x"), ParseError);
}

TEST_CASE("Seifert matrices of torus links") {
  const SeifertMatrixData t = seifert_matrix(parse_braid("2: 1 1 1"));
  CHECK(t.matrix == IntMatrix{{-1, 0}, {1, -1}});
  CHECK(t.basis.size() == 2);
  CHECK(alexander(t.matrix).to_string() == IntPolynomial({1, -1, 1}, -2).to_string());
  CHECK(alexander(t.matrix).coefficients() == std::vector<mpz_class>{1, -1, 1});
  CHECK(seifert_matrix(parse_braid("2: 1 1")).matrix == IntMatrix{{-1}});
  CHECK(seifert_matrix(parse_braid("2: -1 -1 -1")).matrix == IntMatrix{{1, -1}, {0, 1}});
  const IntMatrix t5 = seifert_matrix(parse_braid("2: 1 1 1 1 1")).matrix;
  CHECK(abs(alexander_raw(t5).evaluate(-1)) == 5);
  // Raw convention: positive braids have negative raw signature.
  CHECK(raw_signature(parse_braid("2: 1 1 1")) == -2);
  CHECK(levine_tristram(t.matrix, UnitCirclePoint(1, 1)).signature() == 2);
  CHECK(seifert_matrix(parse_braid("1:")).matrix.empty());
  CHECK(alexander(IntMatrix{}) == IntPolynomial({1}));
}

TEST_CASE("Bennequin surface rank") {
  CHECK(bennequin_seifert_matrix(parse_braid("3: 1 2 1 2")).matrix.rows() == 2);
  CHECK_THROWS_AS(bennequin_seifert_matrix(parse_braid("3: 1 -2")), PreconditionError);
  CHECK_THROWS_AS(bennequin_seifert_matrix(parse_braid("3: 1 1")), PreconditionError);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord b = random_word(rng, 2 + trial % 4, 3 + trial % 9);
    for (int& l : b.letters) l = std::abs(l);
    for (int i = 1; i < b.strands; ++i) b.letters.push_back(i);
    const auto m = bennequin_seifert_matrix(b).matrix;
    const LinkDiagram d = closure_diagram(b);
    CHECK(static_cast<int>(m.rows()) == first_betti(d));
    CHECK(static_cast<int>(m.rows()) == static_cast<int>(b.letters.size()) - b.strands + 1);
  }
}

TEST_CASE("Conway polynomial and linking number") {
  CHECK(conway(seifert_matrix(parse_braid("2: 1 1")).matrix) == IntPolynomial({0, 1}));
  CHECK(conway(seifert_matrix(parse_braid("2: 1 1 1")).matrix) == IntPolynomial({1, 0, 1}));
  CHECK(conway(IntMatrix{}) == IntPolynomial({1}));
  const BraidWord t24 = parse_braid("2: 1 1 1 1");
  CHECK(conway_linear_coefficient(t24) == 2);
  CHECK(linking_number(t24) == 2);
  CHECK(linking_number(parse_braid("2: 1 1 1 1 1 1")) == 3);
  CHECK(linking_number(parse_braid("2: -1 -1")) == -1);
  CHECK_THROWS_AS(linking_number(parse_braid("2: 1 1 1")), PreconditionError);
  CHECK_THROWS_AS(conway_linear_coefficient(parse_braid("4: 1 1 3 3")), PreconditionError);
  CHECK_THROWS_AS(conway_linear_coefficient(parse_braid("2: 1 -1")), PreconditionError);
  // z-coefficient equals the linking number for non-split 2-component closures.
  std::mt19937 rng(9);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    BraidWord b = random_word(rng, 2 + trial % 3, 2 + trial % 10);
    if (trial % 2 == 0)
      for (int& l : b.letters) l = std::abs(l);
    if (closure_components(b) != 2 || is_split(closure_diagram(b))) continue;
    const IntPolynomial nabla = conway(seifert_matrix(b).matrix);
    CHECK(nabla.coefficient(1) == linking_number(b));
    if (b.is_positive()) CHECK(conway_linear_coefficient(b) == linking_number(b));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("closure diagrams") {
  CHECK(to_pd(closure_diagram(parse_braid("2: 1 1 1"))) == "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
  CHECK(to_pd(closure_diagram(parse_braid("2: 1 1 1")), PdRotation::kClockwise) == "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(to_pd(closure_diagram(parse_braid("2: 1 1"))) == "X[1,3,2,4] X[3,1,4,2]");
  const LinkDiagram one = closure_diagram(parse_braid("2: 1"));
  CHECK(one.crossing_count() == 1);
  CHECK_FALSE(is_reduced(one));
  const LinkDiagram u = closure_diagram(parse_braid("1:"));
  CHECK(u.crossing_count() == 0);
  CHECK(u.component_count() == 1);
  CHECK(closure_diagram(parse_braid("3:")).component_count() == 3);
  CHECK(closure_components(parse_braid("3: 1 2")) == 1);
  CHECK(closure_components(parse_braid("3: 1 1")) == 3);
  CHECK(closure_components(parse_braid("2: 1 1")) == 2);
}

TEST_CASE("Alexander polynomial against the reduced Burau representation") {
  std::mt19937 rng(17);
  int compared = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 2 + trial % 4;
    BraidWord b = random_word(rng, n, 1 + trial % 12);
    for (int i = 1; i < n; ++i) b.letters.push_back((trial % 3 == 0) ? -i : i);
    const IntMatrix a = seifert_matrix(b).matrix;
    const IntPolynomial raw = alexander_raw(a);
    int sign2 = 0, k2 = 0, sign3 = 0, k3 = 0;
    bool ok2 = false, ok3 = false;
    for (long t : {2L, 3L}) {
      const mpq_class tq(t);
      mpq_class geo = 0;
      for (int j = 0; j < n; ++j) geo = geo * tq + 1;
      const mpq_class lhs = burau_det(b, tq);
      const mpq_class rhs = eval(raw, tq) * geo;
      if (rhs == 0) {
        CHECK(lhs == 0);
        continue;
      }
      const bool ok = unit_power(lhs / rhs, t, t == 2 ? sign2 : sign3, t == 2 ? k2 : k3);
      (t == 2 ? ok2 : ok3) = ok;
    }
    if (raw.is_zero()) continue;
    CHECK(ok2);
    CHECK(ok3);
    CHECK(k2 == k3);
    CHECK(sign2 == sign3);
    ++compared;
  }
  CHECK(compared > 150);
}

TEST_CASE("Alexander polynomial is symmetric for knots") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const BraidWord b = random_word(rng, 2 + trial % 4, 1 + trial % 13);
    if (closure_components(b) != 1) continue;
    const IntPolynomial p = alexander(seifert_matrix(b).matrix);
    const auto& c = p.coefficients();
    REQUIRE_FALSE(c.empty());
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == c[c.size() - 1 - k]);
    CHECK(abs(p.evaluate(1)) == 1);
  }
}

TEST_CASE("signature changes sign under mirror and is bounded by rank") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    BraidWord b = random_word(rng, 2 + trial % 4, 1 + trial % 12);
    BraidWord m = b;
    for (int& l : m.letters) l = -l;
    const int s = raw_signature(b);
    CHECK(raw_signature(m) == -s);
    CHECK(std::abs(s) <= static_cast<int>(seifert_matrix(b).matrix.rows()));
  }
}
