#pragma once

#include <array>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

class DiagramAccess {
 public:
  static Diagram make(std::vector<Crossing> crossings, int free_circles) {
    return Diagram(Diagram::Unchecked{}, std::move(crossings), free_circles);
  }
};

namespace detail {

struct SlotRef {
  int crossing = -1;
  int slot = -1;
};

/// Arc incidence for a diagram with arbitrary integer labels.
class ArcTable {
 public:
  /// Throws ParseError(Invalid) unless every label appears exactly twice.
  explicit ArcTable(const std::vector<Crossing>& crossings);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int index(int label) const;
  int label(int index) const noexcept { return labels_[index]; }
  const std::array<SlotRef, 2>& occurrences(int index) const noexcept { return occ_[index]; }

  /// The other end of the arc sitting at (crossing, slot).
  SlotRef partner(int crossing, int slot, const std::vector<Crossing>& crossings) const;

 private:
  std::vector<int> labels_;
  std::vector<std::array<SlotRef, 2>> occ_;
};

/// Face structure of the 4-valent graph; darts are 4 * crossing + slot.
struct Faces {
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> darts;  // per face, in boundary order
};

Faces trace_faces(const std::vector<Crossing>& crossings, const ArcTable& table);

}  // namespace detail
}  // namespace gordian
