#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/homfly_poly.hpp"
#include "gordian/laurent.hpp"

namespace gordian {

/// Conway polynomial as z-exponent -> coefficient.
struct ConwayPoly {
  std::map<LaurentPoly::Exponent, Integer> terms;

  Integer coefficient(LaurentPoly::Exponent k) const {
    auto it = terms.find(k);
    return it == terms.end() ? Integer(0) : it->second;
  }
  friend bool operator==(const ConwayPoly&, const ConwayPoly&) = default;
};

struct HomflyOptions {
  /// Largest crossing count accepted after simplification.
  int max_crossings = 16;
  /// Threads used for the subtrees of the top-level expansion.
  int workers = 1;
  /// Reidemeister I/II reduction of every intermediate diagram. Off means
  /// the bare resolving tree.
  bool simplify = true;
};

/// Skein-tree evaluator for v^-1 P(K+) - v P(K-) = z P(K0), P(unknot) = 1.
///
/// Each diagram is put in canonical form and made descending from its
/// basepoints (components in order of their smallest arc, starting there):
/// every crossing first met on its under-strand is switched, and the
/// smoothing at that crossing is evaluated recursively. A descending
/// diagram is an unlink. Results are memoized on canonical_code.
///
/// The memo table is shared between threads with get-or-insert semantics.
class HomflyEngine {
 public:
  explicit HomflyEngine(HomflyOptions options = {});
  ~HomflyEngine();

  HomflyEngine(const HomflyEngine&) = delete;
  HomflyEngine& operator=(const HomflyEngine&) = delete;

  /// Throws TooLarge when the simplified diagram exceeds the crossing cap.
  HomflyPoly compute(const Diagram& d);

  /// Attaches an append-only cache file (`code TAB polynomial` per line).
  /// Existing entries are loaded; unreadable lines are skipped with a
  /// warning on stderr. New results are appended after each compute().
  void attach_cache(const std::filesystem::path& file);

  std::size_t memo_size() const;
  const HomflyOptions& options() const noexcept { return options_; }

 private:
  struct Branch {
    HomflyPoly coefficient;
    Diagram diagram;
  };
  struct Expansion {
    HomflyPoly constant;
    std::vector<Branch> branches;
  };

  HomflyPoly evaluate(const Diagram& d);
  Expansion expand(const Diagram& canonical) const;
  std::optional<HomflyPoly> lookup(const std::string& code) const;
  void store(const std::string& code, const HomflyPoly& value);
  void flush_cache();

  HomflyOptions options_;
  mutable std::shared_mutex memo_mutex_;
  std::unordered_map<std::string, HomflyPoly> memo_;
  std::vector<std::string> pending_;
  std::mutex cache_mutex_;
  std::optional<std::filesystem::path> cache_file_;
};

/// One-shot evaluation with a private engine.
HomflyPoly compute_homfly(const Diagram& d, HomflyOptions options = {});

/// [p0, p1, ...] from P = (v^-1 z)^(1 - r) * sum_i p_i(v) z^(2i), where r is
/// the number of components. Throws MalformedHomfly if P has no such form.
std::vector<LaurentPoly> coefficient_polys(const HomflyPoly& p);

/// Component count implied by P (its lowest z power is 1 - r).
int homfly_components(const HomflyPoly& p);

LaurentPoly p0(const HomflyPoly& p);
LaurentPoly p0(const Diagram& d, HomflyEngine& engine);

/// The Conway polynomial P(1, z).
ConwayPoly conway(const HomflyPoly& p);

/// z^2 coefficient of the Conway polynomial of a knot. Throws NotAKnot.
Integer a2(const HomflyPoly& p);
Integer a2(const Diagram& d, HomflyEngine& engine);

/// Sum over pairs of components of their linking numbers.
int total_linking_number(const Diagram& d);

/// (v^-2 - 1)^(n-1) v^(2 lk) p0(K_1) ... p0(K_n) for an n-component link;
/// a single knot's p0 is returned unchanged, whatever `lk` says.
LaurentPoly p0_product(const std::vector<LaurentPoly>& component_p0s, long lk);

/// P of the mirror image: P(v, z) -> P(v^-1, -z).
HomflyPoly mirror_homfly(const HomflyPoly& p);

}  // namespace gordian
