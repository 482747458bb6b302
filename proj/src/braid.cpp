#include "knotsig/braid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "knotsig/error.hpp"

namespace knotsig {

bool BraidWord::is_positive() const {
  return std::all_of(letters.begin(), letters.end(), [](int l) { return l > 0; });
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  out << strands << ':';
  for (int l : letters) out << ' ' << l;
  return out.str();
}

BraidWord parse_braid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("braid must look like 'N: l1 l2 ...', got '" + text + "'");
  BraidWord b;
  {
    std::istringstream head(text.substr(0, colon));
    std::string tok, extra;
    if (!(head >> tok) || (head >> extra)) throw ParseError("missing strand count in '" + text + "'");
    std::size_t used = 0;
    try {
      b.strands = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || b.strands < 1) throw ParseError("strand count must be a positive integer, got '" + tok + "'");
  }
  std::istringstream body(text.substr(colon + 1));
  std::string tok;
  while (body >> tok) {
    std::size_t used = 0;
    int l = 0;
    try {
      l = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("bad braid letter '" + tok + "'");
    if (l == 0 || std::abs(l) >= b.strands)
      throw ParseError("braid letter " + tok + " out of range for " + std::to_string(b.strands) + " strands");
    b.letters.push_back(l);
  }
  return b;
}

namespace {

// Position p (1-based) after each letter, as a permutation of 1..n.
std::vector<int> closure_permutation(const BraidWord& b) {
  std::vector<int> where(static_cast<std::size_t>(b.strands) + 1);
  std::iota(where.begin(), where.end(), 0);  // where[start] = current position
  std::vector<int> at(where);                // at[position] = start strand
  for (int l : b.letters) {
    const int i = std::abs(l);
    std::swap(at[static_cast<std::size_t>(i)], at[static_cast<std::size_t>(i) + 1]);
  }
  // Strand starting at position at[p] ends at p.
  std::vector<int> perm(static_cast<std::size_t>(b.strands) + 1);
  for (int p = 1; p <= b.strands; ++p) perm[static_cast<std::size_t>(at[static_cast<std::size_t>(p)])] = p;
  return perm;
}

// Component id of every bottom position.
std::vector<int> position_components(const BraidWord& b, int& count) {
  const std::vector<int> perm = closure_permutation(b);
  std::vector<int> comp(static_cast<std::size_t>(b.strands) + 1, -1);
  count = 0;
  for (int p = 1; p <= b.strands; ++p) {
    if (comp[static_cast<std::size_t>(p)] >= 0) continue;
    for (int q = p; comp[static_cast<std::size_t>(q)] < 0; q = perm[static_cast<std::size_t>(q)]) comp[static_cast<std::size_t>(q)] = count;
    ++count;
  }
  return comp;
}

void require_valid(const BraidWord& b) {
  if (b.strands < 1) throw PreconditionError("braid needs at least one strand");
  for (int l : b.letters)
    if (l == 0 || std::abs(l) >= b.strands) throw PreconditionError("braid letter " + std::to_string(l) + " out of range");
}

}  // namespace

int closure_components(const BraidWord& b) {
  require_valid(b);
  int count = 0;
  position_components(b, count);
  return count;
}

SeifertMatrixData seifert_matrix(const BraidWord& b) {
  require_valid(b);
  SeifertMatrixData out;
  for (int i = 1; i < b.strands; ++i) {
    int prev = -1;
    for (std::size_t k = 0; k < b.letters.size(); ++k) {
      if (std::abs(b.letters[k]) != i) continue;
      if (prev >= 0) out.basis.push_back({i, prev, static_cast<int>(k)});
      prev = static_cast<int>(k);
    }
  }
  const std::size_t m = out.basis.size();
  IntMatrix a(m, m);
  for (std::size_t g = 0; g < m; ++g) {
    const BrickGenerator& gen = out.basis[g];
    const bool right1 = b.letters[static_cast<std::size_t>(gen.first)] > 0;
    const bool right2 = b.letters[static_cast<std::size_t>(gen.second)] > 0;
    if (right1 && right2) a(g, g) = -1;
    else if (!right1 && !right2) a(g, g) = 1;

    // Next brick in the same column shares the band at gen.second.
    if (g + 1 < m && out.basis[g + 1].index == gen.index) {
      if (right2) a(g + 1, g) = 1;
      else a(g, g + 1) = -1;
    }
    // Bricks in the column to the right that interleave with this one.
    for (std::size_t h = 0; h < m; ++h) {
      const BrickGenerator& nb = out.basis[h];
      if (nb.index != gen.index + 1) continue;
      if (nb.first < gen.first && gen.first < nb.second && nb.second < gen.second) a(h, g) = 1;
      else if (gen.first < nb.first && nb.first < gen.second && gen.second < nb.second) a(h, g) = -1;
    }
  }
  out.matrix = std::move(a);
  return out;
}

SeifertMatrixData bennequin_seifert_matrix(const BraidWord& b) {
  require_valid(b);
  if (!b.is_positive()) throw PreconditionError("Bennequin matrix needs a positive braid word");
  std::set<int> used;
  for (int l : b.letters) used.insert(l);
  for (int i = 1; i < b.strands; ++i)
    if (!used.count(i)) throw PreconditionError("closure is split: generator " + std::to_string(i) + " is unused");
  return seifert_matrix(b);
}

IntPolynomial alexander_raw(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("Seifert matrix must be square");
  return pencil_determinant(-a.transposed(), a);
}

IntPolynomial alexander(const IntMatrix& a) {
  IntPolynomial raw = alexander_raw(a);
  if (raw.is_zero()) return raw;
  raw.strip_variable_powers();
  std::vector<mpz_class> c = raw.coefficients();
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  const int deg = static_cast<int>(c.size()) - 1;
  return IntPolynomial(std::move(c), -deg);
}

IntPolynomial conway(const IntMatrix& a) {
  if (!a.square()) throw PreconditionError("Seifert matrix must be square");
  const int d = static_cast<int>(a.rows());
  // det(s^-1 A - s A^T) = s^-d det(A - s^2 A^T)
  const IntPolynomial q = pencil_determinant(a, -a.transposed());
  std::map<int, mpz_class> laurent;
  for (int k = 0; k <= q.degree(); ++k)
    if (q.coefficient(k) != 0) laurent[2 * k - d] = q.coefficient(k);
  std::vector<mpz_class> z;
  while (!laurent.empty()) {
    auto top = std::prev(laurent.end());
    const int k = top->first;
    const mpz_class c = top->second;
    if (k < 0) throw InternalError("Conway substitution left a negative power");
    if (z.size() <= static_cast<std::size_t>(k)) z.resize(static_cast<std::size_t>(k) + 1);
    z[static_cast<std::size_t>(k)] = c;
    // subtract c (s - s^-1)^k
    mpz_class binom = 1;
    for (int j = 0; j <= k; ++j) {
      const int e = k - 2 * j;
      mpz_class term = c * binom;
      if (j % 2) term = -term;
      auto& slot = laurent[e];
      slot -= term;
      if (slot == 0) laurent.erase(e);
      binom = binom * (k - j) / (j + 1);
    }
  }
  return IntPolynomial(std::move(z));
}

int linking_number(const BraidWord& b) {
  require_valid(b);
  int count = 0;
  std::vector<int> comp = position_components(b, count);
  if (count != 2) throw PreconditionError("linking number needs a 2-component closure, got " + std::to_string(count));
  int total = 0;
  for (int l : b.letters) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l));
    if (comp[i] != comp[i + 1]) total += l > 0 ? 1 : -1;
    std::swap(comp[i], comp[i + 1]);
  }
  if (total % 2 != 0) throw InternalError("odd inter-component crossing count");
  return total / 2;
}

int conway_linear_coefficient(const BraidWord& b) {
  const int comps = closure_components(b);
  if (comps != 2) throw PreconditionError("Conway linear coefficient needs a 2-component closure, got " + std::to_string(comps));
  if (!b.is_positive()) throw PreconditionError("Conway linear coefficient needs a positive word");
  if (is_split(closure_diagram(b))) throw PreconditionError("closure is split");
  const IntPolynomial nabla = conway(seifert_matrix(b).matrix);
  const mpz_class c = nabla.coefficient(1);
  return static_cast<int>(c.get_si());
}

LinkDiagram closure_diagram(const BraidWord& b, std::vector<int>* letter_of_crossing) {
  require_valid(b);
  const int n = b.strands;
  const int len = static_cast<int>(b.letters.size());
  if (len == 0) {
    if (letter_of_crossing) letter_of_crossing->clear();
    return unlink(n);
  }
  // Segment (p, k): position p just below letter k; level len wraps to 0.
  auto seg = [&](int p, int k) { return (p - 1) * len + (k % len); };
  std::vector<int> parent(static_cast<std::size_t>(n * len));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int k = 0; k < len; ++k) {
    const int i = std::abs(b.letters[static_cast<std::size_t>(k)]);
    for (int p = 1; p <= n; ++p)
      if (p != i && p != i + 1) parent[static_cast<std::size_t>(find(seg(p, k)))] = find(seg(p, k + 1));
  }
  std::vector<Crossing> raw;
  for (int k = 0; k < len; ++k) {
    const int l = b.letters[static_cast<std::size_t>(k)];
    const int i = std::abs(l);
    const int sw = find(seg(i, k)), se = find(seg(i + 1, k));
    const int nw = find(seg(i, k + 1)), ne = find(seg(i + 1, k + 1));
    Crossing c;
    if (l > 0) {
      c.arcs = {se, ne, nw, sw};
      c.over_in = 3;
    } else {
      c.arcs = {sw, se, ne, nw};
      c.over_in = 1;
    }
    raw.push_back(c);
  }
  std::set<int> live;
  for (const auto& c : raw) live.insert(c.arcs.begin(), c.arcs.end());
  std::set<int> loops;
  for (int p = 1; p <= n; ++p)
    for (int k = 0; k < len; ++k)
      if (!live.count(find(seg(p, k)))) loops.insert(find(seg(p, k)));

  // Relabel along components, each starting at its first under-passage.
  const LinkDiagram tmp(raw, 0);
  // tmp renumbered arcs densely in increasing raw id order.
  std::map<int, int> label;
  int next = 1;
  auto walk = [&](int arc) {
    for (int a = arc; !label.count(a);) {
      label[a] = next++;
      const ArcEnd h = tmp.head(a);
      a = tmp.crossings()[static_cast<std::size_t>(h.crossing)].arcs[static_cast<std::size_t>((h.slot + 2) % 4)];
    }
  };
  for (const auto& c : tmp.crossings())
    if (!label.count(c.arcs[0])) walk(c.arcs[0]);
  for (const auto& c : tmp.crossings())
    if (!label.count(c.arcs[static_cast<std::size_t>(c.over_in)])) walk(c.arcs[static_cast<std::size_t>(c.over_in)]);

  std::vector<int> order(static_cast<std::size_t>(len));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Crossing> relabelled = tmp.crossings();
  for (auto& c : relabelled)
    for (auto& a : c.arcs) a = label.at(a);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return relabelled[static_cast<std::size_t>(x)].arcs[0] < relabelled[static_cast<std::size_t>(y)].arcs[0]; });
  std::vector<Crossing> sorted;
  for (int k : order) sorted.push_back(relabelled[static_cast<std::size_t>(k)]);
  if (letter_of_crossing) *letter_of_crossing = order;
  return LinkDiagram(std::move(sorted), static_cast<int>(loops.size()));
}

}  // namespace knotsig
