#include "knotsig/checkerboard.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "knotsig/error.hpp"
#include "knotsig/quadform.hpp"

namespace knotsig {

namespace {

// The corners whose two bounding slots are both incoming or both outgoing.
bool unmixed_corner(const Crossing& x, int corner) {
  return x.incoming(corner) == x.incoming((corner + 1) % 4);
}

CrossingType type_from_corners(const Crossing& x, const std::array<int, 4>& corners, const std::vector<FaceColor>& coloring) {
  // Corner 0 and corner 1 differ in color; one of them is unmixed.
  const int white_corner = coloring[static_cast<std::size_t>(corners[0])] == FaceColor::kWhite ? 0 : 1;
  return unmixed_corner(x, white_corner) ? CrossingType::kI : CrossingType::kII;
}

void finish(const LinkDiagram& d, CheckerboardData& c) {
  c.types.clear();
  c.mu = 0;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    c.types.push_back(type_from_corners(d.crossings()[x], c.corner_face[x], c.coloring));
    if (c.types.back() == CrossingType::kII) ++c.mu;
  }
  c.white_count = static_cast<int>(std::count(c.coloring.begin(), c.coloring.end(), FaceColor::kWhite));
  c.black_count = static_cast<int>(c.coloring.size()) - c.white_count;
}

}  // namespace

std::pair<CheckerboardData, CheckerboardData> colorings(const LinkDiagram& d) {
  CheckerboardData a;
  a.faces = faces(d);
  a.corner_face = corner_faces(d, a.faces);
  const std::size_t nf = a.faces.size();

  // Faces across each arc are adjacent; corners k and k+1 sit on either side of slot k+1.
  std::vector<std::vector<int>> adj(nf);
  if (d.empty()) {
    adj[0].push_back(1);
    adj[1].push_back(0);
  }
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    for (int k = 0; k < 4; ++k) {
      const int f = a.corner_face[x][static_cast<std::size_t>(k)];
      const int g = a.corner_face[x][static_cast<std::size_t>((k + 1) % 4)];
      adj[static_cast<std::size_t>(f)].push_back(g);
      adj[static_cast<std::size_t>(g)].push_back(f);
    }

  std::vector<int> side(nf, -1);
  side[0] = 0;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    const int f = todo.front();
    todo.pop();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      int& s = side[static_cast<std::size_t>(g)];
      if (s < 0) {
        s = 1 - side[static_cast<std::size_t>(f)];
        todo.push(g);
      } else if (s == side[static_cast<std::size_t>(f)]) {
        throw InternalError("face adjacency graph is not bipartite");
      }
    }
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) throw InternalError("face adjacency graph is disconnected");

  // Pick the orientation in which face 0 is white, then decide which one is A.
  a.coloring.resize(nf);
  for (std::size_t f = 0; f < nf; ++f) a.coloring[f] = side[f] == 0 ? FaceColor::kWhite : FaceColor::kBlack;
  CheckerboardData b = a;
  for (auto& col : b.coloring) col = col == FaceColor::kWhite ? FaceColor::kBlack : FaceColor::kWhite;
  finish(d, a);
  finish(d, b);
  if (!d.empty() && a.types[0] != CrossingType::kII) std::swap(a, b);
  a.label = 'A';
  b.label = 'B';
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    if (a.types[x] == b.types[x]) throw InternalError("crossing type did not swap between colorings");
  return {std::move(a), std::move(b)};
}

CrossingType crossing_type(const LinkDiagram& d, const CheckerboardData& coloring, int crossing) {
  if (crossing < 0 || static_cast<std::size_t>(crossing) >= d.crossing_count())
    throw PreconditionError("crossing " + std::to_string(crossing) + " out of range");
  const auto x = static_cast<std::size_t>(crossing);
  return type_from_corners(d.crossings()[x], coloring.corner_face[x], coloring.coloring);
}

WhiteBasis white_basis(const LinkDiagram& d, const CheckerboardData& coloring, std::optional<int> omit) {
  if (!is_reduced(d)) throw PreconditionError("white_basis needs a reduced diagram");
  WhiteBasis basis;
  basis.coloring = coloring.label;
  for (const Face& f : coloring.faces) {
    if (coloring.coloring[static_cast<std::size_t>(f.id)] != FaceColor::kWhite) continue;
    if (basis.omitted_face < 0 || f.edge_count() > coloring.faces[static_cast<std::size_t>(basis.omitted_face)].edge_count())
      basis.omitted_face = f.id;
  }
  if (omit) {
    if (*omit < 0 || static_cast<std::size_t>(*omit) >= coloring.faces.size() ||
        coloring.coloring[static_cast<std::size_t>(*omit)] != FaceColor::kWhite)
      throw PreconditionError("omitted face " + std::to_string(*omit) + " is not a white face");
    basis.omitted_face = *omit;
  }
  for (const Face& f : coloring.faces) {
    if (coloring.coloring[static_cast<std::size_t>(f.id)] != FaceColor::kWhite || f.id == basis.omitted_face) continue;
    WhiteGenerator g;
    g.face = f.id;
    for (const FaceCorner& c : f.boundary) {
      if (std::find(g.crossings.begin(), g.crossings.end(), c.crossing) != g.crossings.end())
        throw InternalError("generator passes twice through crossing " + std::to_string(c.crossing));
      g.crossings.push_back(c.crossing);
      (coloring.types[static_cast<std::size_t>(c.crossing)] == CrossingType::kI ? g.m : g.n) += 1;
    }
    basis.generators.push_back(std::move(g));
  }
  return basis;
}

GoeritzForm goeritz(const WhiteBasis& basis, const CheckerboardData& coloring) {
  const std::size_t n = basis.generators.size();
  GoeritzForm form;
  form.coloring = basis.coloring;
  form.omitted_face = basis.omitted_face;
  form.matrix = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    form.matrix(i, i) = basis.generators[i].framing();
    for (std::size_t j = i + 1; j < n; ++j) {
      long shared = 0;
      for (int x : basis.generators[i].crossings) {
        const auto& other = basis.generators[j].crossings;
        if (std::find(other.begin(), other.end(), x) == other.end()) continue;
        shared += coloring.types[static_cast<std::size_t>(x)] == CrossingType::kI ? 1 : -1;
      }
      form.matrix(i, j) = -shared;
      form.matrix(j, i) = -shared;
    }
  }
  return form;
}

GoeritzForm goeritz(const LinkDiagram& d, const CheckerboardData& coloring) {
  return goeritz(white_basis(d, coloring), coloring);
}

int gl_signature(const LinkDiagram& d, const CheckerboardData& coloring) {
  return signature_symmetric(goeritz(d, coloring).matrix).signature() + coloring.mu;
}

int gl_signature(const LinkDiagram& d) {
  if (!d.is_positive()) throw PreconditionError("gl_signature needs a positive diagram");
  if (is_split(d)) throw PreconditionError("gl_signature needs a connected diagram");
  if (!is_reduced(d)) throw PreconditionError("gl_signature needs a reduced diagram");
  const auto [a, b] = colorings(d);
  const int sa = gl_signature(d, a);
  const int sb = gl_signature(d, b);
  if (sa != sb)
    throw InternalError("colorings disagree on the signature: A gives " + std::to_string(sa) + ", B gives " + std::to_string(sb));
  return sa;
}

}  // namespace knotsig
