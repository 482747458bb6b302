#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace knotsig {

/// How the four labels of X[a,b,c,d] are ordered around the crossing.
/// Both start at the incoming under-strand.
enum class PdRotation {
  kCounterclockwise,  ///< KnotInfo / SnapPy convention
  kClockwise,         ///< mirror reading of the same labels
};

struct PdOptions {
  PdRotation rotation = PdRotation::kCounterclockwise;
  /// Components that never pass under a crossing are oriented by label
  /// succession. Listing any label of such a component here reverses it.
  std::set<long> reverse_labels;
};

/// One crossing. Slots are in counterclockwise order with slot 0 the
/// incoming under-strand, so the under-strand runs 0 -> 2 and the
/// over-strand runs over_in -> over_in + 2 (mod 4).
struct Crossing {
  std::array<int, 4> arcs{};  ///< internal arc ids by slot
  int over_in = 3;            ///< 1 or 3

  int over_out() const { return over_in ^ 2; }
  bool incoming(int slot) const { return slot == 0 || slot == over_in; }
  /// +1 iff the over-strand comes from the left of the under-strand.
  int sign() const { return over_in == 3 ? 1 : -1; }
  std::pair<int, int> under_arcs() const { return {arcs[0], arcs[2]}; }  ///< (in, out)
  std::pair<int, int> over_arcs() const { return {arcs[over_in], arcs[over_out()]}; }
  /// The outgoing slot joined to `slot` by the oriented smoothing.
  int smoothing_partner(int slot) const;
};

/// End of an arc: a (crossing, slot) position.
struct ArcEnd {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const ArcEnd&, const ArcEnd&) = default;
};

/// An oriented link diagram given combinatorially by a rotation system.
/// Crossingless components are counted as free loops; the unknot is the
/// empty diagram with one free loop. Immutable once built.
class LinkDiagram {
 public:
  LinkDiagram() : LinkDiagram(std::vector<Crossing>{}, 1) {}

  /// Validates and renumbers arcs densely (0..2c-1). Each arc id must occur
  /// exactly twice, once at an incoming and once at an outgoing slot, and the
  /// rotation system must be planar.
  LinkDiagram(std::vector<Crossing> crossings, int free_loops);

  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t arc_count() const { return tail_.size(); }
  int free_loops() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int id) const;

  /// Where an arc starts (an outgoing slot) and ends (an incoming slot).
  ArcEnd tail(int arc) const { return tail_.at(static_cast<std::size_t>(arc)); }
  ArcEnd head(int arc) const { return head_.at(static_cast<std::size_t>(arc)); }
  /// The end of `arc` other than the given one.
  ArcEnd other_end(ArcEnd e) const;

  /// Link components with crossings, each as arcs in travel order.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_arc(int arc) const { return component_of_arc_.at(static_cast<std::size_t>(arc)); }
  /// Components including free loops.
  int component_count() const { return static_cast<int>(components_.size()) + free_loops_; }

  bool is_positive() const;
  bool empty() const { return crossings_.empty(); }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::vector<ArcEnd> tail_, head_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_arc_;
};

/// Parses whitespace or comma separated X[a,b,c,d] tuples, optionally
/// wrapped in PD[...]. Empty text is the unknot.
LinkDiagram parse_pd(const std::string& text, const PdOptions& options = {});

/// PD text with arcs relabelled 1..2c along each component in travel order.
std::string to_pd(const LinkDiagram& d, PdRotation rotation = PdRotation::kCounterclockwise);

/// n disjoint crossingless circles.
LinkDiagram unlink(int n);

int crossing_sign(const LinkDiagram& d, int crossing);

/// Changes over/under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);
/// Changes over/under at one crossing.
LinkDiagram mirror_crossing(const LinkDiagram& d, int crossing);
/// Orientation-respecting smoothing of one crossing.
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing);

/// Deletes two crossings that bound a bigon, letting both strands run
/// straight through (the inverse of a second Reidemeister move when the
/// crossings form a clasp, up to one crossing change).
LinkDiagram remove_bigon(const LinkDiagram& d, int x, int y);

struct SeifertCircleSet {
  std::vector<std::vector<int>> circles;  ///< arcs of each circle with crossings
  int free_loops = 0;                     ///< crossingless circles
  std::vector<int> circle_of_arc;
  /// The two circles joined at each crossing (may coincide).
  std::vector<std::pair<int, int>> adjacency;

  int count() const { return static_cast<int>(circles.size()) + free_loops; }
};

SeifertCircleSet seifert_circles(const LinkDiagram& d);

/// c(D) - s(D) + 1 for a positive non-split diagram.
int first_betti(const LinkDiagram& d);

/// Corner k of a crossing lies between slots k and k+1 (counterclockwise).
struct FaceCorner {
  int crossing = -1;
  int corner = -1;
  int arc = -1;  ///< boundary arc running into this corner
};

struct Face {
  int id = 0;
  std::vector<FaceCorner> boundary;
  int edge_count() const { return static_cast<int>(boundary.size()); }
};

/// Faces of a connected diagram. The unknot has two faces with no edges.
std::vector<Face> faces(const LinkDiagram& d);

/// face id of every corner, indexed [crossing][corner].
std::vector<std::array<int, 4>> corner_faces(const LinkDiagram& d, const std::vector<Face>& fs);

/// True iff the 4-valent graph plus free loops has several pieces.
bool is_split(const LinkDiagram& d);

/// True iff no single oriented smoothing splits the diagram.
bool is_reduced(const LinkDiagram& d);

}  // namespace knotsig
