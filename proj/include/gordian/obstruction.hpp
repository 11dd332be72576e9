#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gordian/laurent.hpp"

namespace gordian {

/// Every test here checks a necessary condition. EXCLUDED means the
/// condition fails, so the configuration is impossible; NOT_EXCLUDED only
/// means the test is silent.
enum class Status { Excluded, NotExcluded, Inapplicable };

/// Where a branch stopped: the residual was not divisible by the divisor,
/// the quotient was not a square, or its root f failed f(1) = 1, f'(1) = 0,
/// f in Z[v^2, v^-2].
enum class FailureStage { Division, Square, Normalization };

std::string_view to_string(Status s);
std::string_view to_string(FailureStage s);

/// One attempt to write `residual = divisor * f^2` with f admissible.
struct BranchResult {
  std::string label;
  int eps = 0;
  bool mirrored = false;
  LaurentPoly residual;
  LaurentPoly divisor;
  std::optional<LaurentPoly> quotient;
  std::optional<FailureStage> stage;  // empty iff the branch passed
  std::optional<LaurentPoly> witness;

  bool passed() const noexcept { return !stage.has_value(); }
};

struct Verdict {
  Status status = Status::Inapplicable;
  std::optional<LaurentPoly> witness;
  std::vector<BranchResult> trace;
  std::vector<std::string> hypotheses;
  std::string reason;  // set for INAPPLICABLE
};

/// Invariants of one knot as consumed by the tests. `genus` is the user's
/// assertion; nothing here computes a genus.
struct KnotData {
  std::string name;
  LaurentPoly p0;
  Integer a2;
  std::optional<int> genus;
};

/// Tries R = v^-eps p0K - v^eps p0K2 against
/// D = eps (v^-1 - v) v^(2 eps (a2K - a2K2)).
BranchResult gordian_one_branch(const LaurentPoly& p0K, const LaurentPoly& p0K2, const Integer& a2K,
                                const Integer& a2K2, int eps);

/// Can K2 arise from K by one crossing change at a non-nugatory crossing,
/// both knots being of genus one? Sweeps eps = +-1, and with
/// `sweep_mirrors` also the mirror image of K (p0 -> p0(v^-1), a2 fixed).
/// EXCLUDED iff every branch fails.
Verdict gordian_one_test(const KnotData& K, const KnotData& K2, bool sweep_mirrors);

/// Generalized cosmetic crossing test for a genus-one knot: silent iff p0
/// is an admissible square. EXCLUDED covers every degree q != 0.
Verdict cosmetic_test(const LaurentPoly& p0K, std::optional<int> asserted_genus);
Verdict cosmetic_test(const KnotData& K);

/// A 2-component link bounding an annulus has
/// p0 = (v^-2 - 1) v^(2 lk) f^2 with f admissible.
Verdict annulus_form_check(const LaurentPoly& p0L, long lk);

/// Odd pretzel parameters.
struct PretzelParams {
  long p = 1;
  long q = 1;
  long r = 1;

  /// Throws NotOdd.
  static PretzelParams make(long p, long q, long r);
  friend auto operator<=>(const PretzelParams&, const PretzelParams&) = default;
};

/// v^(p+q) - v^(p+q+r+1) - v^(p+q+r-1) + v^(p+r) + v^(q+r).
LaurentPoly pretzel_p0(const PretzelParams& k);

/// (pq + qr + pr + 1) / 4.
long pretzel_a2(const PretzelParams& k);

struct ScanEntry {
  PretzelParams params;  // normalized: p >= q > 1, r < -1
  long a2 = 0;
  LaurentPoly p0;
  Verdict verdict;
  bool odd_coefficient = false;    // coefficient of v^(p+q+r+1) is odd
  bool exponents_ordered = false;  // p+q > p+q+r+1 > p+q+r-1 > p+r >= q+r

  bool counterexample() const noexcept {
    return !(odd_coefficient && exponents_ordered && verdict.status == Status::Excluded);
  }
};

struct ScanReport {
  long bound = 0;
  std::uint64_t enumerated = 0;      // odd triples with |.| <= bound
  std::uint64_t a2_zero = 0;         // of which a2 = 0
  std::uint64_t trivial = 0;         // a2 = 0 triples that are the unknot
  std::vector<ScanEntry> survivors;  // distinct, sorted by (p, q, r)
  std::vector<ScanEntry> counterexamples;
};

/// Every genus-one pretzel knot P(p,q,r) with |p|,|q|,|r| <= bound and
/// a2 = 0, reduced by mirroring and reordering to p >= q > 0 > r, with the
/// unknots (q = 1 or r = -1) dropped. Throws std::invalid_argument if
/// bound < 3.
ScanReport pretzel_scan(long bound);

}  // namespace gordian
