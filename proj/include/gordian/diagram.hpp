#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gordian {

/// One oriented crossing of a planar diagram.
///
/// The four incident arcs are listed clockwise, starting from the incoming
/// under-strand, so `arcs[0]` enters under and `arcs[2]` leaves under:
///
///              arcs[2]                      arcs[2]
///                 ^                            ^
///                 |                            |
///     arcs[1] ----|---> arcs[3]    arcs[1] <---|---- arcs[3]
///                 |                            |
///              arcs[0]                      arcs[0]
///           sign = +1                     sign = -1
///
/// A crossing is positive when the over-strand enters at `arcs[1]`, i.e. it
/// passes left-to-right when viewed along the under-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 1;

  int under_in() const noexcept { return arcs[0]; }
  int under_out() const noexcept { return arcs[2]; }
  int over_in() const noexcept { return sign > 0 ? arcs[1] : arcs[3]; }
  int over_out() const noexcept { return sign > 0 ? arcs[3] : arcs[1]; }
  int over_in_slot() const noexcept { return sign > 0 ? 1 : 3; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

/// Orientation override for a component that only ever passes over: arc
/// `arc` runs into the crossing at 1-based position `crossing`.
struct OrientOverride {
  int arc = 0;
  int crossing = 0;
};

/// An oriented link diagram: PD crossings plus crossingless circles.
///
/// Every arc label appears exactly twice, once entering a crossing and once
/// leaving one, and the 4-valent graph is planar. Values are immutable; all
/// moves return new diagrams.
class Diagram {
 public:
  /// The empty diagram (no crossings, no circles). Not a link.
  Diagram() = default;

  /// Validates labels, orientation and planarity; throws ParseError(Invalid).
  explicit Diagram(std::vector<Crossing> crossings, int free_circles = 0);

  /// Builds from unoriented PD quadruples (slot 0 incoming under-strand),
  /// inferring every crossing sign from the orientation of the strands.
  /// Components that never pass under take their direction from
  /// `overrides`, or else from arc-label order: the smallest arc of such a
  /// component runs toward its smaller-labelled neighbour.
  static Diagram from_pd(const std::vector<std::array<int, 4>>& quads, int free_circles = 0,
                         const std::vector<OrientOverride>& overrides = {});

  static Diagram unlink(int circles);
  static Diagram unknot() { return unlink(1); }

  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  int free_circles() const noexcept { return free_circles_; }
  bool empty() const noexcept { return crossings_.empty() && free_circles_ == 0; }

  int components() const;
  int writhe() const;
  int crossing_sign(std::size_t i) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  struct Unchecked {};
  Diagram(Unchecked, std::vector<Crossing> crossings, int free_circles)
      : crossings_(std::move(crossings)), free_circles_(free_circles) {}

  friend class DiagramAccess;

  std::vector<Crossing> crossings_;
  int free_circles_ = 0;
};

/// Arc sequences of every component that has crossings, in orientation
/// order. Components are ordered by their smallest arc label and each
/// sequence starts at that label. Crossingless circles are not listed.
std::vector<std::vector<int>> component_arcs(const Diagram& d);

/// For each crossing, the component indices (as in component_arcs) of its
/// under-strand and over-strand.
std::vector<std::pair<int, int>> crossing_components(const Diagram& d);

/// Relabels arcs 1..2n along component_arcs order. Crossing order is kept.
Diagram renormalized(const Diagram& d);

/// Over/under exchanged at crossing i; everything else identical.
Diagram switch_crossing(const Diagram& d, std::size_t i);

/// Oriented smoothing at crossing i. Crossing order of the survivors is kept
/// and arcs are renormalized.
Diagram smooth_crossing(const Diagram& d, std::size_t i);

/// Every crossing switched.
Diagram mirror(const Diagram& d);

/// Removes R1 kinks and R2 bigons until none remain.
Diagram simplify(const Diagram& d);

/// Disjoint union; arcs of `b` are shifted past those of `a`.
Diagram split_union(const Diagram& a, const Diagram& b);

/// A crossing is nugatory when some circle in the plane meets the diagram
/// only at that crossing. Diagnostic only.
bool is_nugatory(const Diagram& d, std::size_t i);

/// Label-invariant encoding: the lexicographically smallest PD text over
/// all component orders and starting arcs. Crossingless diagrams encode as
/// `O` per circle.
std::string canonical_code(const Diagram& d);

/// The relabelled diagram whose PD text is canonical_code(d).
struct CanonicalForm {
  std::string code;
  Diagram diagram;
};
CanonicalForm canonical_form(const Diagram& d);

/// (K+, K-, K0) at one crossing. `delta` is 0 when both strands at the
/// site lie on the same component of K+ and 1 otherwise.
struct SkeinTriple {
  Diagram plus;
  Diagram minus;
  Diagram zero;
  std::size_t site = 0;
  int delta = 0;
};

SkeinTriple make_skein_triple(const Diagram& d, std::size_t i);

/// PD text: `X[a,b,c,d]` atoms, `O` for crossingless circles and
/// `orient(arc=crossing)` overrides. An optional `PD[...]` wrapper and
/// commas between atoms are accepted. Throws ParseError.
Diagram parse_pd(std::string_view text);

/// Inverse of parse_pd: parse_pd(render_pd(d)) == d.
std::string render_pd(const Diagram& d);

// Generators.

/// Closure of a braid word on `strands` strands. Letter +i is sigma_i
/// (a positive crossing), -i its inverse. Throws InvalidWord.
Diagram braid_closure(const std::vector<int>& word, int strands);

/// Three-band pretzel P(p, q, r). A positive parameter gives a band of
/// positive crossings; all parameters must be odd. Throws NotOdd.
Diagram pretzel_diagram(long p, long q, long r);

/// The (2, 2k) torus link, closure of sigma_1^(2k) with parallel strands.
Diagram torus_link_2(int k);

}  // namespace gordian
