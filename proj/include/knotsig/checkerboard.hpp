#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "knotsig/diagram.hpp"
#include "knotsig/matrix.hpp"

namespace knotsig {

enum class FaceColor { kBlack, kWhite };
enum class CrossingType { kI, kII };

/// One of the two checkerboard colorings of a connected diagram.
struct CheckerboardData {
  char label = 'A';  ///< 'A': crossing 0 is type II (face 0 white if there are no crossings)
  std::vector<Face> faces;
  std::vector<std::array<int, 4>> corner_face;  ///< [crossing][corner] -> face id
  std::vector<FaceColor> coloring;              ///< by face id
  std::vector<CrossingType> types;              ///< by crossing id
  int white_count = 0;
  int black_count = 0;
  int mu = 0;  ///< number of type II crossings
};

/// Both colorings, A first. Requires a connected diagram.
std::pair<CheckerboardData, CheckerboardData> colorings(const LinkDiagram& d);

/// Type I iff the white corners at the crossing lie between two ends pointing
/// the same way (both into or both out of the crossing).
CrossingType crossing_type(const LinkDiagram& d, const CheckerboardData& coloring, int crossing);

/// Curve running once around a white face.
struct WhiteGenerator {
  int face = 0;
  std::vector<int> crossings;  ///< crossings on the face boundary, in boundary order
  int m = 0;                   ///< type I crossings
  int n = 0;                   ///< type II crossings
  int framing() const { return m - n; }
};

struct WhiteBasis {
  char coloring = 'A';
  int omitted_face = -1;
  std::vector<WhiteGenerator> generators;
};

/// One generator per white face except the omitted one, which defaults to the
/// white face with the most edges (smallest id on ties). Requires a reduced
/// diagram.
WhiteBasis white_basis(const LinkDiagram& d, const CheckerboardData& coloring, std::optional<int> omit = std::nullopt);

struct GoeritzForm {
  IntMatrix matrix;
  char coloring = 'A';
  int omitted_face = -1;
};

/// Diagonal: framing of each generator. Off-diagonal: minus (shared type I
/// crossings minus shared type II crossings).
GoeritzForm goeritz(const WhiteBasis& basis, const CheckerboardData& coloring);
GoeritzForm goeritz(const LinkDiagram& d, const CheckerboardData& coloring);

/// sign(G) + mu for one coloring.
int gl_signature(const LinkDiagram& d, const CheckerboardData& coloring);

/// Gordon-Litherland signature of a positive, connected, reduced diagram.
/// Both colorings are evaluated; disagreement throws InternalError.
int gl_signature(const LinkDiagram& d);

}  // namespace knotsig
