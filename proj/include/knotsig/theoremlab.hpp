#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotsig/braid.hpp"
#include "knotsig/checkerboard.hpp"
#include "knotsig/cyclotomic.hpp"
#include "knotsig/diagram.hpp"
#include "knotsig/polynomial.hpp"

namespace knotsig {

// ---------------------------------------------------------------------------
// Reduction of positive diagrams

enum class BigonKind {
  kNotSeifertCircle,
  kSeifertReducing,     ///< the circle meets a single other circle
  kSeifertNonreducing,  ///< the circle meets two distinct other circles
};

const char* to_string(BigonKind kind);

struct BigonInfo {
  int face = 0;
  BigonKind kind = BigonKind::kNotSeifertCircle;
  std::array<int, 2> crossings{};
};

/// Labels every 2-edge face of a reduced positive diagram.
std::vector<BigonInfo> classify_bigons(const LinkDiagram& d);

struct ReductionStep {
  std::array<int, 2> crossings{};  ///< crossing ids in the diagram before this step
  int crossings_before = 0;
  int betti_before = 0;
  int betti_after = 0;
  int sigma_before = 0;
  int sigma_after = 0;
};

struct Reduction {
  LinkDiagram diagram;
  std::vector<ReductionStep> steps;
};

/// Removes clasps around Seifert-circle bigons that touch two distinct
/// circles, one at a time until none are left. Each step is a crossing change
/// followed by a Reidemeister II move; b1 preservation and signature
/// monotonicity are checked after every step.
Reduction reduce_with_log(const LinkDiagram& d);
LinkDiagram reduce(const LinkDiagram& d);

// ---------------------------------------------------------------------------
// Curve census and bound certificates

struct CurveCensus {
  std::map<std::pair<int, int>, int> counts;  ///< (m, n) -> number of generators
  int negative = 0;                           ///< generators with framing < 0
  int nonnegative = 0;                        ///< generators with framing >= 0
  int hopf_factors = 0;                       ///< split Hopf links detected

  int count(int m, int n) const;
};

/// Census of the white-face generators. Throws InternalError if a census
/// invariant fails.
CurveCensus curve_census(const LinkDiagram& d, const CheckerboardData& coloring);

/// A rational inequality lhs <= rhs.
struct Inequality {
  std::string name;
  mpq_class lhs;
  mpq_class rhs;
  bool holds = false;
};

Inequality make_inequality(std::string name, const mpq_class& lhs, const mpq_class& rhs);

enum class IndependentSetMethod { kExact, kGreedy };

/// Maximum independent set for up to 40 vertices, otherwise the largest
/// color class of a greedy coloring along a degeneracy order.
std::vector<int> independent_set(const std::vector<std::vector<bool>>& adjacency, IndependentSetMethod& method);

struct BoundCertificate {
  std::string diagram_id;
  char coloring = 'A';
  int crossings = 0;       ///< c of the reduced diagram
  int mu = 0;
  int white_faces = 0;
  int black_faces = 0;
  int sigma = 0;           ///< signature of the reduced diagram
  IntMatrix goeritz;
  int omitted_face = -1;
  std::vector<int> generator_faces;
  std::vector<std::pair<int, int>> generator_types;  ///< (m, n) per generator
  CurveCensus census;
  std::vector<int> independent_set;  ///< generator indices
  IndependentSetMethod method = IndependentSetMethod::kExact;
  bool chain_applicable = false;  ///< |I| >= gamma_{>=0} / 4
  mpq_class achieved_fraction;    ///< |I| / gamma_{>=0}, 1 when there are none
  std::vector<Inequality> inequalities;
  mpq_class bound;  ///< mu - (f_w - 1) + |I|, a lower bound for sigma
};

enum class Verdict { kHolds, kDegraded, kFailed };
const char* to_string(Verdict v);

struct BoundReport {
  std::string diagram_id;
  int crossings = 0;
  int seifert_circles = 0;
  int betti = 0;
  int sigma = 0;
  int reduced_crossings = 0;
  int reduced_seifert_circles = 0;
  int reduced_sigma = 0;
  int reduced_betti = 0;
  std::size_t reduction_steps = 0;
  int hopf_factors = 0;
  std::array<BoundCertificate, 2> certificates;
  std::vector<Inequality> combined;  ///< summed chain and both sides of the bound
  Verdict verdict = Verdict::kHolds;
};

/// Reduces, builds a certificate per coloring and checks
/// b1 / 48 <= sigma <= b1. Requires a reduced positive non-split diagram.
BoundReport certify_bound(const LinkDiagram& d, const std::string& id = "");

// ---------------------------------------------------------------------------
// Twist families

/// Replaces the letter at `position` by its (2N+1)-th power.
BraidWord twist_insert(const BraidWord& b, int position, int n);
/// Deletes the letter at `position`.
BraidWord smooth_at(const BraidWord& b, int position);

/// How a positive crossing is replaced by 2N+1 positive crossings. Parallel
/// twists (the braid letter raised to the power 2N+1) add N to the genus;
/// antiparallel twists keep the genus and correspond to twisting the band of
/// the crossing in a Seifert surface.
enum class TwistKind { kParallel, kAntiparallel };

/// Replaces a positive crossing by a twist region of 2N+1 positive crossings.
LinkDiagram insert_full_twists(const LinkDiagram& d, int crossing, int n, TwistKind kind);

/// First angle 1/q, q = 4..max_q, with sigma(base) = 0 and
/// Delta_L(omega) != 0.
UnitCirclePoint choose_omega0(const BraidWord& base, const BraidWord& smoothed, int max_q = 1024);

/// Seifert matrix of the closure of `b` with N extra full twists in the band
/// of the letter at `position`. The basis is chosen so that a single generator
/// crosses that band; it comes first, so only the top-left entry depends on N
/// and the lower-right block is a Seifert matrix of the smoothed link.
IntMatrix bordered_seifert_matrix(const BraidWord& b, int position, int n);

struct TwistFamilyReport {
  BraidWord base;
  int position = 0;
  int nmax = 0;
  BraidWord smoothed;
  IntPolynomial smoothed_alexander;
  int smoothed_components = 0;
  std::optional<int> smoothed_linking;
  int smoothed_sigma = 0;  ///< sigma at omega0 of L
  UnitCirclePoint omega0;

  /// sigma at omega0 of K(N) = closure of twist_insert(base, position, N).
  std::vector<int> sigma;
  bool monotone = false;
  std::optional<int> n0;  ///< least N with sigma > 0 from N on

  /// Band-twisted family: sigma at omega0 of the bordered matrices S_N.
  std::vector<int> band_sigma;
  bool band_monotone = false;
  std::optional<int> band_n0;
  std::vector<mpz_class> det;  ///< det S_N
  std::vector<mpz_class> x;    ///< top-left entry of S_N
  mpz_class det_b;             ///< det of the block B
  mpz_class r;                 ///< det S_N - x_N det B, constant in N
  mpz_class affine_slope;      ///< det S_N = intercept + slope N
  mpz_class affine_intercept;
  bool affine_exact = false;
  bool border_matches_smoothed = false;  ///< B equals the Bennequin matrix of L
};

TwistFamilyReport twist_family_experiment(const BraidWord& b, int position, int nmax);

}  // namespace knotsig
