#include <optional>

#include "diagram_internal.hpp"
#include "gordian/errors.hpp"

namespace gordian {

namespace {

/// Assembles a diagram from crossings drawn in the plane. Each crossing has
/// ports in clockwise order NW=0, NE=1, SE=2, SW=3; a strand runs straight
/// through, from port p to port p+2.
class PlanarBuilder {
 public:
  struct Port {
    int crossing;
    int port;
  };

  static constexpr int kNW = 0, kNE = 1, kSE = 2, kSW = 3;

  int add_crossing(bool nw_se_over) {
    over_nw_se_.push_back(nw_se_over);
    link_.push_back({-1, -1, -1, -1});
    return static_cast<int>(over_nw_se_.size()) - 1;
  }

  /// An edge between two ports, oriented from `from` to `to` when it is the
  /// first edge met on its component.
  void connect(Port from, Port to) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({from, to});
    link_[from.crossing][from.port] = id;
    link_[to.crossing][to.port] = id;
  }

  void add_circle() { ++circles_; }

  Diagram build() const {
    const int n = static_cast<int>(link_.size());
    const int m = static_cast<int>(edges_.size());
    std::vector<int> label(m, 0);
    // Port where each edge arrives, per the orientation found by traversal.
    std::vector<Port> head(m, {-1, -1});
    int next = 1;
    for (int start = 0; start < m; ++start) {
      if (label[start]) continue;
      int e = start;
      Port from = edges_[start].from;
      while (!label[e]) {
        label[e] = next++;
        Port to = other_end(e, from);
        head[e] = to;
        Port out{to.crossing, (to.port + 2) % 4};
        e = link_[out.crossing][out.port];
        from = out;
      }
    }
    std::vector<Crossing> crossings(n);
    for (int k = 0; k < n; ++k) {
      // Under diagonal is NE-SW when NW-SE passes over.
      const int u0 = over_nw_se_[k] ? kNE : kNW;
      auto arrives = [&](int port) {
        int e = link_[k][port];
        return head[e].crossing == k && head[e].port == port;
      };
      const int under_in = arrives(u0) ? u0 : u0 + 2;
      for (int s = 0; s < 4; ++s) crossings[k].arcs[s] = label[link_[k][(under_in + s) % 4]];
      crossings[k].sign = arrives((under_in + 1) % 4) ? 1 : -1;
    }
    return Diagram(std::move(crossings), circles_);
  }

 private:
  struct Edge {
    Port from, to;
  };
  Port other_end(int e, Port from) const {
    const Edge& edge = edges_[e];
    if (edge.from.crossing == from.crossing && edge.from.port == from.port) return edge.to;
    return edge.from;
  }

  std::vector<bool> over_nw_se_;
  std::vector<std::array<int, 4>> link_;
  std::vector<Edge> edges_;
  int circles_ = 0;
};

}  // namespace

Diagram braid_closure(const std::vector<int>& word, int strands) {
  if (strands < 1) throw InvalidWord("braid needs at least one strand");
  using Port = PlanarBuilder::Port;
  PlanarBuilder b;
  std::vector<std::optional<Port>> top(strands), bottom(strands);
  auto attach = [&](int position, Port port) {
    if (bottom[position])
      b.connect(*bottom[position], port);
    else
      top[position] = port;
  };
  for (int letter : word) {
    const int g = letter < 0 ? -letter : letter;
    if (g < 1 || g >= strands)
      throw InvalidWord("generator " + std::to_string(letter) + " out of range for " +
                        std::to_string(strands) + " strands");
    // Strands run downward; the NE-SW strand passing over is a positive crossing.
    const int k = b.add_crossing(letter < 0);
    attach(g - 1, {k, PlanarBuilder::kNW});
    attach(g, {k, PlanarBuilder::kNE});
    bottom[g - 1] = Port{k, PlanarBuilder::kSW};
    bottom[g] = Port{k, PlanarBuilder::kSE};
  }
  for (int j = 0; j < strands; ++j) {
    if (!top[j])
      b.add_circle();
    else
      b.connect(*bottom[j], *top[j]);
  }
  return b.build();
}

Diagram pretzel_diagram(long p, long q, long r) {
  for (long x : {p, q, r})
    if (x % 2 == 0)
      throw NotOdd("pretzel parameters must be odd (got " + std::to_string(x) + ")");
  using Port = PlanarBuilder::Port;
  PlanarBuilder b;
  struct Band {
    Port tl, tr, bl, br;
  };
  std::vector<Band> bands;
  for (long twists : {p, q, r}) {
    const long count = twists < 0 ? -twists : twists;
    int first = -1, prev = -1;
    for (long j = 0; j < count; ++j) {
      // Antiparallel band strands: NW-SE passing over gives positive crossings.
      int k = b.add_crossing(twists > 0);
      if (prev >= 0) {
        b.connect({prev, PlanarBuilder::kSW}, {k, PlanarBuilder::kNW});
        b.connect({prev, PlanarBuilder::kSE}, {k, PlanarBuilder::kNE});
      } else {
        first = k;
      }
      prev = k;
    }
    bands.push_back({{first, PlanarBuilder::kNW},
                     {first, PlanarBuilder::kNE},
                     {prev, PlanarBuilder::kSW},
                     {prev, PlanarBuilder::kSE}});
  }
  for (int i = 0; i < 3; ++i) {
    const Band& left = bands[i];
    const Band& right = bands[(i + 1) % 3];
    b.connect(left.tr, right.tl);
    b.connect(left.br, right.bl);
  }
  return b.build();
}

Diagram torus_link_2(int k) {
  const int n = k < 0 ? -k : k;
  if (n == 0) return Diagram::unlink(2);
  return braid_closure(std::vector<int>(static_cast<std::size_t>(2 * n), k > 0 ? 1 : -1), 2);
}

}  // namespace gordian
