#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "diagram_internal.hpp"
#include "gordian/errors.hpp"

namespace gordian {

namespace detail {

ArcTable::ArcTable(const std::vector<Crossing>& crossings) {
  labels_.reserve(crossings.size() * 4);
  for (const auto& c : crossings)
    for (int a : c.arcs) labels_.push_back(a);
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());

  occ_.assign(labels_.size(), {});
  std::vector<int> seen(labels_.size(), 0);
  for (int k = 0; k < static_cast<int>(crossings.size()); ++k) {
    for (int s = 0; s < 4; ++s) {
      int i = index(crossings[k].arcs[s]);
      if (seen[i] >= 2)
        throw ParseError(ParseError::Kind::Invalid,
                         "arc " + std::to_string(labels_[i]) + " appears more than twice");
      occ_[i][seen[i]++] = {k, s};
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (seen[i] != 2)
      throw ParseError(ParseError::Kind::Invalid,
                       "arc " + std::to_string(labels_[i]) + " appears only once");
}

int ArcTable::index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  return static_cast<int>(it - labels_.begin());
}

SlotRef ArcTable::partner(int crossing, int slot, const std::vector<Crossing>& crossings) const {
  const auto& occ = occ_[index(crossings[crossing].arcs[slot])];
  if (occ[0].crossing == crossing && occ[0].slot == slot) return occ[1];
  return occ[0];
}

Faces trace_faces(const std::vector<Crossing>& crossings, const ArcTable& table) {
  const int darts = static_cast<int>(crossings.size()) * 4;
  Faces faces;
  faces.face_of_dart.assign(darts, -1);
  for (int start = 0; start < darts; ++start) {
    if (faces.face_of_dart[start] >= 0) continue;
    const int id = static_cast<int>(faces.darts.size());
    faces.darts.emplace_back();
    int dart = start;
    while (faces.face_of_dart[dart] < 0) {
      faces.face_of_dart[dart] = id;
      faces.darts[id].push_back(dart);
      SlotRef other = table.partner(dart / 4, dart % 4, crossings);
      dart = other.crossing * 4 + (other.slot + 1) % 4;
    }
  }
  return faces;
}

}  // namespace detail

namespace {

using detail::ArcTable;
using detail::SlotRef;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

bool is_in_slot(const Crossing& c, int slot) { return slot == 0 || slot == c.over_in_slot(); }

/// Oriented incidence: where each arc starts and ends.
struct Orientation {
  std::vector<SlotRef> head;
  std::vector<SlotRef> tail;
};

Orientation orient(const std::vector<Crossing>& crossings, const ArcTable& table) {
  Orientation o;
  o.head.resize(table.size());
  o.tail.resize(table.size());
  for (int i = 0; i < table.size(); ++i) {
    const auto& occ = table.occurrences(i);
    bool in0 = is_in_slot(crossings[occ[0].crossing], occ[0].slot);
    bool in1 = is_in_slot(crossings[occ[1].crossing], occ[1].slot);
    if (in0 == in1)
      throw ParseError(ParseError::Kind::Invalid,
                       "arc " + std::to_string(table.label(i)) + " has inconsistent orientation");
    o.head[i] = in0 ? occ[0] : occ[1];
    o.tail[i] = in0 ? occ[1] : occ[0];
  }
  return o;
}

int next_arc(const std::vector<Crossing>& crossings, const ArcTable& table, const Orientation& o,
             int arc_index) {
  const SlotRef h = o.head[arc_index];
  const Crossing& c = crossings[h.crossing];
  return table.index(h.slot == 0 ? c.under_out() : c.over_out());
}

/// Component arc-index sequences, ordered by smallest label.
std::vector<std::vector<int>> trace_components(const std::vector<Crossing>& crossings,
                                               const ArcTable& table, const Orientation& o) {
  std::vector<std::vector<int>> comps;
  std::vector<char> visited(table.size(), 0);
  for (int start = 0; start < table.size(); ++start) {
    if (visited[start]) continue;
    comps.emplace_back();
    int a = start;
    do {
      visited[a] = 1;
      comps.back().push_back(a);
      a = next_arc(crossings, table, o, a);
    } while (a != start);
  }
  return comps;
}

void check_planar(const std::vector<Crossing>& crossings, const ArcTable& table) {
  if (crossings.empty()) return;
  const int n = static_cast<int>(crossings.size());
  UnionFind graph(n);
  for (int i = 0; i < table.size(); ++i) {
    const auto& occ = table.occurrences(i);
    graph.unite(occ[0].crossing, occ[1].crossing);
  }
  int pieces = 0;
  for (int k = 0; k < n; ++k)
    if (graph.find(k) == k) ++pieces;
  auto faces = detail::trace_faces(crossings, table);
  if (static_cast<int>(faces.darts.size()) != n + 2 * pieces)
    throw ParseError(ParseError::Kind::Invalid, "crossing data does not describe a planar diagram");
}

enum class Join { PassThrough, Smooth };

/// Deletes crossings, joining the strands through each one, and renormalizes.
Diagram contract(const Diagram& d, const std::vector<std::pair<std::size_t, Join>>& removals) {
  const auto& crossings = d.crossings();
  ArcTable table(crossings);
  UnionFind uf(table.size());
  std::vector<char> removed(crossings.size(), 0);
  for (const auto& [k, join] : removals) {
    const Crossing& c = crossings[k];
    removed[k] = 1;
    const int ui = table.index(c.under_in()), uo = table.index(c.under_out());
    const int oi = table.index(c.over_in()), oo = table.index(c.over_out());
    if (join == Join::PassThrough) {
      uf.unite(ui, uo);
      uf.unite(oi, oo);
    } else {
      uf.unite(ui, oo);
      uf.unite(oi, uo);
    }
  }
  std::vector<Crossing> kept;
  std::set<int> live_roots;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    if (removed[k]) continue;
    Crossing c = crossings[k];
    for (int& a : c.arcs) {
      int root = uf.find(table.index(a));
      live_roots.insert(root);
      a = table.label(root);
    }
    kept.push_back(c);
  }
  std::set<int> closed;
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    if (!removed[k]) continue;
    for (int a : crossings[k].arcs) {
      int root = uf.find(table.index(a));
      if (!live_roots.count(root)) closed.insert(root);
    }
  }
  return renormalized(
      DiagramAccess::make(std::move(kept), d.free_circles() + static_cast<int>(closed.size())));
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_circles)
    : crossings_(std::move(crossings)), free_circles_(free_circles) {
  if (free_circles_ < 0) throw ParseError(ParseError::Kind::Invalid, "negative circle count");
  for (const auto& c : crossings_)
    if (c.sign != 1 && c.sign != -1)
      throw ParseError(ParseError::Kind::Invalid, "crossing sign must be +1 or -1");
  ArcTable table(crossings_);
  orient(crossings_, table);
  check_planar(crossings_, table);
}

Diagram Diagram::unlink(int circles) {
  if (circles < 0) throw std::invalid_argument("negative circle count");
  return DiagramAccess::make({}, circles);
}

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& quads, int free_circles,
                         const std::vector<OrientOverride>& overrides) {
  std::vector<Crossing> crossings;
  crossings.reserve(quads.size());
  for (const auto& q : quads) crossings.push_back({q, 0});
  ArcTable table(crossings);
  const int n = static_cast<int>(crossings.size());

  // dir[k]: +1 over-strand enters at slot 1, -1 at slot 3, 0 unknown.
  std::vector<int> dir(n, 0);
  auto invalid = [](const std::string& why) { throw ParseError(ParseError::Kind::Invalid, why); };
  // Role of an occurrence: +1 in, -1 out, 0 unknown.
  auto role = [&](SlotRef r) -> int {
    if (r.slot == 0) return 1;
    if (r.slot == 2) return -1;
    if (dir[r.crossing] == 0) return 0;
    return (r.slot == 1) == (dir[r.crossing] > 0) ? 1 : -1;
  };
  std::vector<int> work;
  auto set_dir = [&](int k, int value) {
    if (dir[k] == value) return;
    if (dir[k] != 0)
      invalid("inconsistent orientation at crossing " + std::to_string(k + 1));
    dir[k] = value;
    work.push_back(k);
  };
  // Makes `r` (an over slot) have the given role.
  auto force = [&](SlotRef r, int wanted) {
    if (r.slot == 0 || r.slot == 2) {
      if (role(r) != wanted) invalid("inconsistent orientation at crossing " + std::to_string(r.crossing + 1));
      return;
    }
    set_dir(r.crossing, (r.slot == 1) == (wanted > 0) ? 1 : -1);
  };
  auto propagate = [&] {
    while (!work.empty()) {
      int k = work.back();
      work.pop_back();
      for (int s : {1, 3}) {
        SlotRef here{k, s};
        SlotRef other = table.partner(k, s, crossings);
        force(other, -role(here));
      }
    }
  };

  for (int i = 0; i < table.size(); ++i) {
    const auto& occ = table.occurrences(i);
    int r0 = role(occ[0]), r1 = role(occ[1]);
    if (r0 != 0 && r1 != 0) {
      if (r0 == r1) invalid("arc " + std::to_string(table.label(i)) + " has inconsistent orientation");
    } else if (r0 != 0) {
      force(occ[1], -r0);
    } else if (r1 != 0) {
      force(occ[0], -r1);
    }
    propagate();
  }

  for (const auto& ov : overrides) {
    if (ov.crossing < 1 || ov.crossing > n) invalid("orient(): crossing out of range");
    int i = table.index(ov.arc);
    if (i >= table.size() || table.label(i) != ov.arc) invalid("orient(): unknown arc");
    bool found = false;
    for (const auto& r : table.occurrences(i)) {
      if (r.crossing != ov.crossing - 1) continue;
      found = true;
      if (role(r) == -1 && r.slot % 2 == 0) invalid("orient(): contradicts an under-strand");
      if (r.slot % 2 == 1) force(r, 1);
      break;
    }
    if (!found) invalid("orient(): arc does not meet that crossing");
    propagate();
  }

  // Remaining unknowns belong to components that never pass under.
  while (true) {
    int best = -1;
    for (int i = 0; i < table.size() && best < 0; ++i) {
      const auto& occ = table.occurrences(i);
      if (role(occ[0]) == 0) best = i;
    }
    if (best < 0) break;
    const auto& occ = table.occurrences(best);
    auto neighbour = [&](SlotRef r) { return crossings[r.crossing].arcs[r.slot == 1 ? 3 : 1]; };
    int n0 = neighbour(occ[0]), n1 = neighbour(occ[1]);
    SlotRef into = occ[0];
    if (n1 < n0 || (n1 == n0 && occ[1].crossing < occ[0].crossing)) into = occ[1];
    force(into, 1);
    propagate();
  }

  for (int k = 0; k < n; ++k) crossings[k].sign = dir[k];
  return Diagram(std::move(crossings), free_circles);
}

int Diagram::components() const {
  if (crossings_.empty()) return free_circles_;
  return static_cast<int>(component_arcs(*this).size()) + free_circles_;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& c : crossings_) w += c.sign;
  return w;
}

int Diagram::crossing_sign(std::size_t i) const { return crossings_.at(i).sign; }

std::vector<std::vector<int>> component_arcs(const Diagram& d) {
  ArcTable table(d.crossings());
  Orientation o = orient(d.crossings(), table);
  auto comps = trace_components(d.crossings(), table, o);
  for (auto& comp : comps)
    for (int& a : comp) a = table.label(a);
  return comps;
}

std::vector<std::pair<int, int>> crossing_components(const Diagram& d) {
  ArcTable table(d.crossings());
  Orientation o = orient(d.crossings(), table);
  auto comps = trace_components(d.crossings(), table, o);
  std::vector<int> comp_of(table.size());
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int a : comps[c]) comp_of[a] = c;
  std::vector<std::pair<int, int>> out;
  for (const auto& c : d.crossings())
    out.emplace_back(comp_of[table.index(c.under_in())], comp_of[table.index(c.over_in())]);
  return out;
}

Diagram renormalized(const Diagram& d) {
  ArcTable table(d.crossings());
  Orientation o = orient(d.crossings(), table);
  auto comps = trace_components(d.crossings(), table, o);
  std::vector<int> fresh(table.size());
  int next = 1;
  for (const auto& comp : comps)
    for (int a : comp) fresh[a] = next++;
  std::vector<Crossing> out = d.crossings();
  for (auto& c : out)
    for (int& a : c.arcs) a = fresh[table.index(a)];
  return DiagramAccess::make(std::move(out), d.free_circles());
}

Diagram switch_crossing(const Diagram& d, std::size_t i) {
  std::vector<Crossing> out = d.crossings();
  Crossing& c = out.at(i);
  const auto [a, b, cc, dd] = c.arcs;
  c.arcs = c.sign > 0 ? std::array<int, 4>{b, cc, dd, a} : std::array<int, 4>{dd, a, b, cc};
  c.sign = -c.sign;
  return DiagramAccess::make(std::move(out), d.free_circles());
}

Diagram smooth_crossing(const Diagram& d, std::size_t i) {
  if (i >= d.crossing_count()) throw std::out_of_range("smooth_crossing: index out of range");
  return contract(d, {{i, Join::Smooth}});
}

Diagram mirror(const Diagram& d) {
  Diagram out = d;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) out = switch_crossing(out, i);
  return out;
}

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (cur.crossing_count() > 0) {
    const auto& crossings = cur.crossings();
    ArcTable table(crossings);
    auto faces = detail::trace_faces(crossings, table);
    std::vector<std::pair<std::size_t, Join>> removal;
    for (const auto& face : faces.darts) {
      if (face.size() == 1) {
        removal = {{static_cast<std::size_t>(face[0] / 4), Join::PassThrough}};
        break;
      }
    }
    if (removal.empty()) {
      for (const auto& face : faces.darts) {
        if (face.size() != 2) continue;
        const int k1 = face[0] / 4, s1 = face[0] % 4;
        SlotRef far = table.partner(k1, s1, crossings);
        if (far.crossing == k1) continue;
        // The bigon's first side runs over (or under) at both ends.
        if ((s1 % 2) != (far.slot % 2)) continue;
        removal = {{static_cast<std::size_t>(k1), Join::PassThrough},
                   {static_cast<std::size_t>(far.crossing), Join::PassThrough}};
        break;
      }
    }
    if (removal.empty()) break;
    cur = contract(cur, removal);
  }
  return cur;
}

Diagram split_union(const Diagram& a, const Diagram& b) {
  int offset = 0;
  for (const auto& c : a.crossings())
    for (int x : c.arcs) offset = std::max(offset, x);
  std::vector<Crossing> out = a.crossings();
  for (Crossing c : b.crossings()) {
    for (int& x : c.arcs) x += offset;
    out.push_back(c);
  }
  return DiagramAccess::make(std::move(out), a.free_circles() + b.free_circles());
}

bool is_nugatory(const Diagram& d, std::size_t i) {
  const auto& crossings = d.crossings();
  if (i >= crossings.size()) throw std::out_of_range("is_nugatory: index out of range");
  ArcTable table(crossings);
  auto faces = detail::trace_faces(crossings, table);
  const auto& f = faces.face_of_dart;
  const int base = static_cast<int>(i) * 4;
  return f[base + 0] == f[base + 2] || f[base + 1] == f[base + 3];
}

CanonicalForm canonical_form(const Diagram& d) {
  if (d.crossing_count() == 0) {
    std::string code;
    for (int i = 0; i < d.free_circles(); ++i) code += i ? " O" : "O";
    return {code, Diagram::unlink(d.free_circles())};
  }
  const auto& crossings = d.crossings();
  ArcTable table(crossings);
  Orientation o = orient(crossings, table);
  auto comps = trace_components(crossings, table, o);
  const int r = static_cast<int>(comps.size());

  std::vector<int> comp_of(table.size());
  for (int c = 0; c < r; ++c)
    for (int a : comps[c]) comp_of[a] = c;
  // Label-invariant signature: (length, self crossings). Only components with
  // equal signatures need to be permuted against each other.
  std::vector<std::pair<int, int>> signature(r);
  for (int c = 0; c < r; ++c) signature[c] = {static_cast<int>(comps[c].size()), 0};
  for (const auto& c : crossings) {
    int cu = comp_of[table.index(c.under_in())];
    if (cu == comp_of[table.index(c.over_in())]) ++signature[cu].second;
  }
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair(signature[a], a) < std::pair(signature[b], b); });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in `order`
  for (int i = 0; i < r;) {
    int j = i;
    while (j < r && signature[order[j]] == signature[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::vector<Crossing> best;
  std::vector<Crossing> candidate(crossings.size());
  std::vector<int> fresh(table.size());
  std::vector<int> start(r, 0);

  auto evaluate = [&] {
    int next = 1;
    for (int c : order) {
      const auto& seq = comps[c];
      const int len = static_cast<int>(seq.size());
      for (int j = 0; j < len; ++j) fresh[seq[(start[c] + j) % len]] = next++;
    }
    for (std::size_t k = 0; k < crossings.size(); ++k) {
      candidate[k].sign = crossings[k].sign;
      for (int s = 0; s < 4; ++s) candidate[k].arcs[s] = fresh[table.index(crossings[k].arcs[s])];
    }
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  };

  auto each_start = [&] {
    std::fill(start.begin(), start.end(), 0);
    while (true) {
      evaluate();
      int c = 0;
      while (c < r && ++start[c] == static_cast<int>(comps[c].size())) start[c++] = 0;
      if (c == r) break;
    }
  };

  // Odometer over permutations inside each signature group.
  while (true) {
    each_start();
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto first = order.begin() + groups[g].first, last = order.begin() + groups[g].second;
      if (std::next_permutation(first, last)) break;
    }
    if (g == groups.size()) break;
  }

  Diagram canonical = DiagramAccess::make(std::move(best), d.free_circles());
  return {render_pd(canonical), std::move(canonical)};
}

std::string canonical_code(const Diagram& d) { return canonical_form(d).code; }

SkeinTriple make_skein_triple(const Diagram& d, std::size_t i) {
  if (i >= d.crossing_count()) throw std::out_of_range("make_skein_triple: index out of range");
  SkeinTriple t;
  t.site = i;
  Diagram switched = switch_crossing(d, i);
  if (d.crossing_sign(i) > 0) {
    t.plus = d;
    t.minus = std::move(switched);
  } else {
    t.plus = std::move(switched);
    t.minus = d;
  }
  t.zero = smooth_crossing(d, i);
  t.delta = (t.plus.components() - t.zero.components() + 1) / 2;
  return t;
}

}  // namespace gordian
