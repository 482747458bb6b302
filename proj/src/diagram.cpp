#include "knotsig/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Orbits of the face permutation: leave crossing x through slot i, arrive at
// (y, j), continue through slot j - 1 of y.
std::vector<Face> trace_faces(const LinkDiagram& d) {
  const std::size_t c = d.crossing_count();
  std::vector<std::array<bool, 4>> seen(c, {false, false, false, false});
  std::vector<Face> out;
  for (std::size_t x = 0; x < c; ++x) {
    for (int i = 0; i < 4; ++i) {
      if (seen[x][static_cast<std::size_t>(i)]) continue;
      Face f;
      f.id = static_cast<int>(out.size());
      ArcEnd cur{static_cast<int>(x), i};
      while (!seen[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot)]) {
        seen[static_cast<std::size_t>(cur.crossing)][static_cast<std::size_t>(cur.slot)] = true;
        const int arc = d.crossing(cur.crossing).arcs[static_cast<std::size_t>(cur.slot)];
        const ArcEnd next = d.other_end(cur);
        const int corner = (next.slot + 3) % 4;
        f.boundary.push_back({next.crossing, corner, arc});
        cur = {next.crossing, corner};
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

// Connected pieces of the 4-valent graph: piece id per crossing.
std::vector<int> crossing_pieces(const LinkDiagram& d, int& count) {
  UnionFind uf(d.crossing_count());
  for (std::size_t a = 0; a < d.arc_count(); ++a) uf.unite(d.tail(static_cast<int>(a)).crossing, d.head(static_cast<int>(a)).crossing);
  std::map<int, int> ids;
  std::vector<int> piece(d.crossing_count());
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    auto [it, _] = ids.emplace(uf.find(static_cast<int>(x)), static_cast<int>(ids.size()));
    piece[x] = it->second;
  }
  count = static_cast<int>(ids.size());
  return piece;
}

}  // namespace

int Crossing::smoothing_partner(int slot) const {
  if (slot == 0) return over_out();
  if (slot == over_out()) return 0;
  if (slot == over_in) return 2;
  return over_in;  // slot 2
}

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  if (free_loops_ < 0) throw PreconditionError("negative number of free loops");
  std::map<int, std::vector<ArcEnd>> ends;
  for (std::size_t x = 0; x < crossings_.size(); ++x) {
    const Crossing& cr = crossings_[x];
    if (cr.over_in != 1 && cr.over_in != 3) throw PreconditionError("crossing " + std::to_string(x) + ": over-strand must enter at slot 1 or 3");
    for (int s = 0; s < 4; ++s) ends[cr.arcs[static_cast<std::size_t>(s)]].push_back({static_cast<int>(x), s});
  }
  std::map<int, int> dense;
  for (const auto& [id, list] : ends) {
    if (list.size() != 2)
      throw PreconditionError("arc " + std::to_string(id) + " appears " + std::to_string(list.size()) + " times (expected 2)");
    dense.emplace(id, static_cast<int>(dense.size()));
  }
  for (auto& cr : crossings_)
    for (auto& a : cr.arcs) a = dense.at(a);
  tail_.assign(dense.size(), {});
  head_.assign(dense.size(), {});
  for (const auto& [id, list] : ends) {
    const int a = dense.at(id);
    const bool in0 = crossings_[static_cast<std::size_t>(list[0].crossing)].incoming(list[0].slot);
    const bool in1 = crossings_[static_cast<std::size_t>(list[1].crossing)].incoming(list[1].slot);
    if (in0 == in1)
      throw PreconditionError("arc " + std::to_string(id) + " has two " + (in0 ? "incoming" : "outgoing") + " ends (inconsistent orientation)");
    head_[static_cast<std::size_t>(a)] = in0 ? list[0] : list[1];
    tail_[static_cast<std::size_t>(a)] = in0 ? list[1] : list[0];
  }

  component_of_arc_.assign(arc_count(), -1);
  for (std::size_t start = 0; start < arc_count(); ++start) {
    if (component_of_arc_[start] >= 0) continue;
    std::vector<int> comp;
    int a = static_cast<int>(start);
    const int id = static_cast<int>(components_.size());
    while (component_of_arc_[static_cast<std::size_t>(a)] < 0) {
      component_of_arc_[static_cast<std::size_t>(a)] = id;
      comp.push_back(a);
      const ArcEnd h = head(a);
      a = crossings_[static_cast<std::size_t>(h.crossing)].arcs[static_cast<std::size_t>((h.slot + 2) % 4)];
    }
    components_.push_back(std::move(comp));
  }

  // Planarity: every connected piece satisfies V - E + F = 2 with E = 2V.
  int pieces = 0;
  const std::vector<int> piece = crossing_pieces(*this, pieces);
  std::vector<int> v(static_cast<std::size_t>(pieces)), f(static_cast<std::size_t>(pieces));
  for (int p : piece) ++v[static_cast<std::size_t>(p)];
  for (const Face& face : trace_faces(*this)) ++f[static_cast<std::size_t>(piece[static_cast<std::size_t>(face.boundary.front().crossing)])];
  for (int p = 0; p < pieces; ++p)
    if (f[static_cast<std::size_t>(p)] != v[static_cast<std::size_t>(p)] + 2)
      throw PreconditionError("rotation system is not planar (piece with " + std::to_string(v[static_cast<std::size_t>(p)]) +
                              " crossings has " + std::to_string(f[static_cast<std::size_t>(p)]) + " faces)");
}

const Crossing& LinkDiagram::crossing(int id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= crossings_.size()) throw PreconditionError("unknown crossing id " + std::to_string(id));
  return crossings_[static_cast<std::size_t>(id)];
}

ArcEnd LinkDiagram::other_end(ArcEnd e) const {
  const int arc = crossing(e.crossing).arcs.at(static_cast<std::size_t>(e.slot));
  return head(arc) == e ? tail(arc) : head(arc);
}

bool LinkDiagram::is_positive() const {
  return std::all_of(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.sign() > 0; });
}

// ---------------------------------------------------------------------------

LinkDiagram parse_pd(const std::string& text, const PdOptions& options) {
  std::string body = text;
  auto trim = [](std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  trim(body);
  if (body.rfind("PD[", 0) == 0) {
    if (body.back() != ']') throw ParseError("unterminated PD[...] wrapper");
    body = body.substr(3, body.size() - 4);
  }

  std::vector<std::array<long, 4>> tuples;
  std::size_t pos = 0;
  auto fail = [&](std::size_t at) {
    const std::size_t end = std::min(body.size(), body.find(']', at) == std::string::npos ? body.size() : body.find(']', at) + 1);
    throw ParseError("malformed tuple at offset " + std::to_string(at) + ": '" + body.substr(at, end - at) + "'");
  };
  while (true) {
    while (pos < body.size() && (std::isspace(static_cast<unsigned char>(body[pos])) || body[pos] == ',')) ++pos;
    if (pos >= body.size()) break;
    const std::size_t start = pos;
    if (body.compare(pos, 2, "X[") != 0) fail(start);
    pos += 2;
    std::array<long, 4> t{};
    for (int k = 0; k < 4; ++k) {
      while (pos < body.size() && body[pos] == ' ') ++pos;
      std::size_t used = 0;
      try {
        t[static_cast<std::size_t>(k)] = std::stol(body.substr(pos), &used);
      } catch (const std::exception&) {
        fail(start);
      }
      pos += used;
      while (pos < body.size() && body[pos] == ' ') ++pos;
      const char expect = k < 3 ? ',' : ']';
      if (pos >= body.size() || body[pos] != expect) fail(start);
      ++pos;
    }
    tuples.push_back(t);
  }
  if (tuples.empty()) return unlink(1);

  // Internal counterclockwise order.
  if (options.rotation == PdRotation::kClockwise)
    for (auto& t : tuples) std::swap(t[1], t[3]);

  std::map<long, std::vector<ArcEnd>> ends;
  for (std::size_t x = 0; x < tuples.size(); ++x)
    for (int s = 0; s < 4; ++s) ends[tuples[x][static_cast<std::size_t>(s)]].push_back({static_cast<int>(x), s});
  for (const auto& [label, list] : ends)
    if (list.size() != 2)
      throw ParseError("arc label " + std::to_string(label) + " appears " + std::to_string(list.size()) + " times (expected 2)");

  // dir: 1 incoming, 0 outgoing, -1 unknown. Ends of an arc are opposite; the
  // two over-strand slots of a crossing are opposite.
  std::vector<std::array<int, 4>> dir(tuples.size(), {1, -1, 0, -1});
  auto label_at = [&](ArcEnd e) { return tuples[static_cast<std::size_t>(e.crossing)][static_cast<std::size_t>(e.slot)]; };
  auto other = [&](ArcEnd e) {
    const auto& list = ends.at(label_at(e));
    return list[0] == e ? list[1] : list[0];
  };
  // Propagates from the seeds; returns the labels touched.
  auto propagate = [&](std::vector<ArcEnd> queue) {
    std::set<long> touched;
    while (!queue.empty()) {
      const ArcEnd e = queue.back();
      queue.pop_back();
      const int v = dir[static_cast<std::size_t>(e.crossing)][static_cast<std::size_t>(e.slot)];
      touched.insert(label_at(e));
      std::vector<ArcEnd> linked{other(e)};
      if (e.slot % 2 == 1) linked.push_back({e.crossing, e.slot ^ 2});
      for (const ArcEnd& n : linked) {
        int& w = dir[static_cast<std::size_t>(n.crossing)][static_cast<std::size_t>(n.slot)];
        if (w == -1) {
          w = 1 - v;
          queue.push_back(n);
        } else if (w == v) {
          throw ParseError("inconsistent orientation at arc label " + std::to_string(label_at(n)));
        }
      }
    }
    return touched;
  };
  std::vector<ArcEnd> seeds;
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    seeds.push_back({static_cast<int>(x), 0});
    seeds.push_back({static_cast<int>(x), 2});
  }
  propagate(seeds);
  // Components passing only over: orient by label succession.
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    if (dir[x][1] != -1) continue;
    const long b = tuples[x][1], d = tuples[x][3];
    const bool adjacent = b - d == 1 || d - b == 1;
    // Travel goes from the smaller label to the larger unless this is the wrap.
    const bool b_in = adjacent ? b < d : b > d;
    dir[x][1] = b_in ? 1 : 0;
    dir[x][3] = b_in ? 0 : 1;
    const std::set<long> touched = propagate({{static_cast<int>(x), 1}, {static_cast<int>(x), 3}});
    const bool flip = std::any_of(touched.begin(), touched.end(), [&](long l) { return options.reverse_labels.count(l) > 0; });
    if (flip) {
      std::set<long> labels = touched;
      for (std::size_t y = 0; y < tuples.size(); ++y)
        for (int s : {1, 3})
          if (labels.count(tuples[y][static_cast<std::size_t>(s)])) dir[y][static_cast<std::size_t>(s)] ^= 1;
    }
  }

  std::vector<Crossing> crossings;
  for (std::size_t x = 0; x < tuples.size(); ++x) {
    Crossing c;
    for (int s = 0; s < 4; ++s) {
      const long l = tuples[x][static_cast<std::size_t>(s)];
      if (l < -(1L << 30) || l > (1L << 30)) throw ParseError("arc label out of range: " + std::to_string(l));
      c.arcs[static_cast<std::size_t>(s)] = static_cast<int>(l);
    }
    c.over_in = dir[x][1] == 1 ? 1 : 3;
    crossings.push_back(c);
  }
  try {
    return LinkDiagram(std::move(crossings), 0);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string to_pd(const LinkDiagram& d, PdRotation rotation) {
  if (d.empty()) {
    if (d.free_loops() <= 1) return "";
    throw PreconditionError("PD notation cannot express an unlink of " + std::to_string(d.free_loops()) + " circles");
  }
  if (d.free_loops() > 0) throw PreconditionError("PD notation cannot express free loops next to crossings");
  std::vector<int> label(d.arc_count());
  // Keep the existing numbering when it already runs along each component.
  bool along = true;
  for (const auto& comp : d.components())
    for (std::size_t k = 0; k < comp.size(); ++k) along = along && comp[k] == comp[0] + static_cast<int>(k);
  std::iota(label.begin(), label.end(), 1);
  if (!along) {
    int next = 1;
    for (const auto& comp : d.components()) {
      // Start at the arc entering the lowest-numbered crossing, so a component
      // that only passes over is read back with the same orientation.
      std::size_t start = 0;
      for (std::size_t k = 1; k < comp.size(); ++k) {
        const ArcEnd a = d.head(comp[k]), b = d.head(comp[start]);
        if (a.crossing < b.crossing || (a.crossing == b.crossing && a.slot < b.slot)) start = k;
      }
      for (std::size_t k = 0; k < comp.size(); ++k) label[static_cast<std::size_t>(comp[(start + k) % comp.size()])] = next++;
    }
  }
  std::ostringstream out;
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& a = d.crossings()[x].arcs;
    const std::array<int, 4> order = rotation == PdRotation::kCounterclockwise ? std::array<int, 4>{0, 1, 2, 3} : std::array<int, 4>{0, 3, 2, 1};
    if (x) out << ' ';
    out << "X[";
    for (int k = 0; k < 4; ++k) out << (k ? "," : "") << label[static_cast<std::size_t>(a[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])])];
    out << ']';
  }
  return out.str();
}

LinkDiagram unlink(int n) { return LinkDiagram(std::vector<Crossing>{}, n); }

int crossing_sign(const LinkDiagram& d, int crossing) { return d.crossing(crossing).sign(); }

namespace {

Crossing flipped(const Crossing& c) {
  Crossing r;
  const int k = c.over_in;
  for (int i = 0; i < 4; ++i) r.arcs[static_cast<std::size_t>(i)] = c.arcs[static_cast<std::size_t>((k + i) % 4)];
  r.over_in = 4 - k;
  return r;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> cs;
  for (const auto& c : d.crossings()) cs.push_back(flipped(c));
  return LinkDiagram(std::move(cs), d.free_loops());
}

LinkDiagram mirror_crossing(const LinkDiagram& d, int crossing) {
  std::vector<Crossing> cs = d.crossings();
  cs.at(static_cast<std::size_t>(crossing)) = flipped(d.crossing(crossing));
  return LinkDiagram(std::move(cs), d.free_loops());
}

LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing) {
  const Crossing& x = d.crossing(crossing);
  UnionFind uf(d.arc_count());
  uf.unite(x.arcs[0], x.arcs[static_cast<std::size_t>(x.over_out())]);
  uf.unite(x.arcs[static_cast<std::size_t>(x.over_in)], x.arcs[2]);
  std::vector<Crossing> cs;
  std::set<int> live;
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    if (static_cast<int>(k) == crossing) continue;
    Crossing c = d.crossings()[k];
    for (auto& a : c.arcs) {
      a = uf.find(a);
      live.insert(a);
    }
    cs.push_back(c);
  }
  std::set<int> dead;
  for (int a : x.arcs)
    if (!live.count(uf.find(a))) dead.insert(uf.find(a));
  return LinkDiagram(std::move(cs), d.free_loops() + static_cast<int>(dead.size()));
}

LinkDiagram remove_bigon(const LinkDiagram& d, int x, int y) {
  if (x == y) throw PreconditionError("remove_bigon needs two distinct crossings");
  const Crossing& cx = d.crossing(x);
  const Crossing& cy = d.crossing(y);
  int shared = 0;
  for (int a : cx.arcs)
    if (std::find(cy.arcs.begin(), cy.arcs.end(), a) != cy.arcs.end()) ++shared;
  if (shared < 2) throw PreconditionError("crossings " + std::to_string(x) + " and " + std::to_string(y) + " do not bound a bigon");
  // Both strands run straight through each removed crossing.
  UnionFind uf(d.arc_count());
  for (const Crossing* c : {&cx, &cy}) {
    uf.unite(c->arcs[0], c->arcs[2]);
    uf.unite(c->arcs[1], c->arcs[3]);
  }
  std::vector<Crossing> cs;
  std::set<int> live;
  for (std::size_t k = 0; k < d.crossing_count(); ++k) {
    if (static_cast<int>(k) == x || static_cast<int>(k) == y) continue;
    Crossing c = d.crossings()[k];
    for (auto& a : c.arcs) {
      a = uf.find(a);
      live.insert(a);
    }
    cs.push_back(c);
  }
  std::set<int> dead;
  for (const Crossing* c : {&cx, &cy})
    for (int a : c->arcs)
      if (!live.count(uf.find(a))) dead.insert(uf.find(a));
  return LinkDiagram(std::move(cs), d.free_loops() + static_cast<int>(dead.size()));
}

SeifertCircleSet seifert_circles(const LinkDiagram& d) {
  SeifertCircleSet s;
  s.free_loops = d.free_loops();
  s.circle_of_arc.assign(d.arc_count(), -1);
  for (std::size_t start = 0; start < d.arc_count(); ++start) {
    if (s.circle_of_arc[start] >= 0) continue;
    const int id = static_cast<int>(s.circles.size());
    std::vector<int> circle;
    int a = static_cast<int>(start);
    while (s.circle_of_arc[static_cast<std::size_t>(a)] < 0) {
      s.circle_of_arc[static_cast<std::size_t>(a)] = id;
      circle.push_back(a);
      const ArcEnd h = d.head(a);
      const Crossing& c = d.crossings()[static_cast<std::size_t>(h.crossing)];
      a = c.arcs[static_cast<std::size_t>(c.smoothing_partner(h.slot))];
    }
    s.circles.push_back(std::move(circle));
  }
  for (const auto& c : d.crossings())
    s.adjacency.emplace_back(s.circle_of_arc[static_cast<std::size_t>(c.arcs[0])],
                             s.circle_of_arc[static_cast<std::size_t>(c.arcs[static_cast<std::size_t>(c.over_in)])]);
  return s;
}

int first_betti(const LinkDiagram& d) {
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    if (d.crossings()[x].sign() < 0)
      throw PreconditionError("first_betti needs a positive diagram; crossing " + std::to_string(x) + " is negative");
  if (is_split(d)) throw PreconditionError("first_betti needs a non-split diagram");
  return static_cast<int>(d.crossing_count()) - seifert_circles(d).count() + 1;
}

std::vector<Face> faces(const LinkDiagram& d) {
  if (is_split(d)) throw PreconditionError("faces needs a connected diagram; split it first");
  if (d.empty()) return {Face{0, {}}, Face{1, {}}};
  return trace_faces(d);
}

std::vector<std::array<int, 4>> corner_faces(const LinkDiagram& d, const std::vector<Face>& fs) {
  std::vector<std::array<int, 4>> out(d.crossing_count(), {-1, -1, -1, -1});
  for (const Face& f : fs)
    for (const FaceCorner& c : f.boundary) out[static_cast<std::size_t>(c.crossing)][static_cast<std::size_t>(c.corner)] = f.id;
  return out;
}

bool is_split(const LinkDiagram& d) {
  int pieces = 0;
  crossing_pieces(d, pieces);
  return pieces + d.free_loops() > 1;
}

bool is_reduced(const LinkDiagram& d) {
  for (std::size_t x = 0; x < d.crossing_count(); ++x)
    if (is_split(smooth_crossing(d, static_cast<int>(x)))) return false;
  return true;
}

}  // namespace knotsig
