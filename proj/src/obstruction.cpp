#include "gordian/obstruction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gordian/errors.hpp"

namespace gordian {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Excluded:
      return "EXCLUDED";
    case Status::NotExcluded:
      return "NOT_EXCLUDED";
    case Status::Inapplicable:
      return "INAPPLICABLE";
  }
  return "?";
}

std::string_view to_string(FailureStage s) {
  switch (s) {
    case FailureStage::Division:
      return "DIVISION";
    case FailureStage::Square:
      return "SQUARE";
    case FailureStage::Normalization:
      return "NORMALIZATION";
  }
  return "?";
}

namespace {

const LaurentPoly kVInvMinusV{{-1, 1}, {1, -1}};
const LaurentPoly kVInv2Minus1{{-2, 1}, {0, -1}};

/// Fills quotient/stage/witness for residual = divisor * f^2.
void resolve(BranchResult& b) {
  b.quotient = exact_div(b.residual, b.divisor);
  if (!b.quotient) {
    b.stage = FailureStage::Division;
    return;
  }
  auto root = sqrt_exact(*b.quotient);
  if (!root) {
    b.stage = FailureStage::Square;
    return;
  }
  if (eval_at_one(*root) != 1 || derivative_at_one(*root) != 0 || !root->has_even_exponents()) {
    b.stage = FailureStage::Normalization;
    return;
  }
  if (b.divisor * *root * *root != b.residual)
    throw InternalError("witness does not reproduce the residual for branch " + b.label);
  b.witness = std::move(root);
}

Verdict conclude(std::vector<BranchResult> trace, std::vector<std::string> hypotheses) {
  Verdict v;
  v.hypotheses = std::move(hypotheses);
  v.status = Status::Excluded;
  for (const auto& b : trace) {
    if (b.passed()) {
      v.status = Status::NotExcluded;
      v.witness = b.witness;
      break;
    }
  }
  v.trace = std::move(trace);
  return v;
}

Verdict inapplicable(std::string reason, std::vector<std::string> hypotheses = {}) {
  Verdict v;
  v.status = Status::Inapplicable;
  v.reason = std::move(reason);
  v.hypotheses = std::move(hypotheses);
  return v;
}

std::string genus_text(const std::optional<int>& g) { return g ? std::to_string(*g) : "unknown"; }

}  // namespace

BranchResult gordian_one_branch(const LaurentPoly& p0K, const LaurentPoly& p0K2, const Integer& a2K,
                                const Integer& a2K2, int eps) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
  BranchResult b;
  b.eps = eps;
  b.label = eps > 0 ? "eps=+1" : "eps=-1";
  b.residual = p0K.shifted(-eps) - p0K2.shifted(eps);
  const Integer shift = 2 * eps * (a2K - a2K2);
  b.divisor = (eps * kVInvMinusV).shifted(static_cast<LaurentPoly::Exponent>(shift));
  resolve(b);
  return b;
}

Verdict gordian_one_test(const KnotData& K, const KnotData& K2, bool sweep_mirrors) {
  std::vector<std::string> hypotheses = {
      "genus(" + K.name + ")=1 (asserted)", "genus(" + K2.name + ")=1 (asserted)",
      "the changed crossing is non-nugatory (assumed, not checked)"};
  if (K.genus != 1 || K2.genus != 1)
    return inapplicable("both knots need an asserted genus of 1 (got " + genus_text(K.genus) + " and " +
                            genus_text(K2.genus) + ")",
                        std::move(hypotheses));
  if (sweep_mirrors) hypotheses.push_back("a2 is invariant under mirroring");
  std::vector<BranchResult> trace;
  for (bool mirrored : {false, true}) {
    if (mirrored && !sweep_mirrors) break;
    const LaurentPoly p = mirrored ? substitute_v_inverse(K.p0) : K.p0;
    for (int eps : {1, -1}) {
      BranchResult b = gordian_one_branch(p, K2.p0, K.a2, K2.a2, eps);
      b.mirrored = mirrored;
      if (mirrored) b.label += ", " + K.name + " mirrored";
      trace.push_back(std::move(b));
    }
  }
  return conclude(std::move(trace), std::move(hypotheses));
}

Verdict cosmetic_test(const LaurentPoly& p0K, std::optional<int> asserted_genus) {
  std::vector<std::string> hypotheses = {"genus(K)=1 (asserted)"};
  if (asserted_genus != 1)
    return inapplicable("asserted genus is " + genus_text(asserted_genus) + ", not 1", std::move(hypotheses));
  BranchResult b;
  b.label = "p0 = f^2";
  b.residual = p0K;
  b.divisor = 1;
  resolve(b);
  return conclude({std::move(b)}, std::move(hypotheses));
}

Verdict cosmetic_test(const KnotData& K) {
  Verdict v = cosmetic_test(K.p0, K.genus);
  for (auto& h : v.hypotheses)
    if (h == "genus(K)=1 (asserted)") h = "genus(" + K.name + ")=1 (asserted)";
  return v;
}

Verdict annulus_form_check(const LaurentPoly& p0L, long lk) {
  BranchResult b;
  b.label = "p0 = (v^-2 - 1) v^(2lk) f^2";
  b.residual = p0L;
  b.divisor = kVInv2Minus1.shifted(2 * lk);
  resolve(b);
  return conclude({std::move(b)}, {"L is a 2-component link"});
}

PretzelParams PretzelParams::make(long p, long q, long r) {
  for (long x : {p, q, r})
    if (x % 2 == 0) throw NotOdd("pretzel parameters must be odd (got " + std::to_string(x) + ")");
  return {p, q, r};
}

LaurentPoly pretzel_p0(const PretzelParams& k) {
  const auto [p, q, r] = PretzelParams::make(k.p, k.q, k.r);
  const long s = p + q + r;
  LaurentPoly out;
  out += LaurentPoly::monomial(1, p + q);
  out -= LaurentPoly::monomial(1, s + 1);
  out -= LaurentPoly::monomial(1, s - 1);
  out += LaurentPoly::monomial(1, p + r);
  out += LaurentPoly::monomial(1, q + r);
  return out;
}

long pretzel_a2(const PretzelParams& k) {
  const auto [p, q, r] = PretzelParams::make(k.p, k.q, k.r);
  const long numerator = p * q + q * r + p * r + 1;
  if (numerator % 4 != 0) throw InternalError("pq+qr+pr+1 is not divisible by 4");
  return numerator / 4;
}

ScanReport pretzel_scan(long bound) {
  if (bound < 3) throw std::invalid_argument("scan bound must be at least 3");
  ScanReport report;
  report.bound = bound;
  std::set<PretzelParams> survivors;
  const long top = bound % 2 == 0 ? bound - 1 : bound;
  for (long p = -top; p <= top; p += 2) {
    for (long q = -top; q <= top; q += 2) {
      for (long r = -top; r <= top; r += 2) {
        ++report.enumerated;
        if (p * q + q * r + p * r + 1 != 0) continue;
        ++report.a2_zero;
        // a2 = 0 rules out all-positive and all-negative triples; mirror so
        // that exactly one parameter is negative, then sort the positives.
        std::array<long, 3> t{p, q, r};
        if (std::count_if(t.begin(), t.end(), [](long x) { return x < 0; }) >= 2)
          for (long& x : t) x = -x;
        std::sort(t.begin(), t.end());
        PretzelParams k{t[2], t[1], t[0]};
        if (k.q == 1 || k.r == -1) {
          ++report.trivial;
          continue;
        }
        survivors.insert(k);
      }
    }
  }
  for (const auto& k : survivors) {
    ScanEntry e;
    e.params = k;
    e.a2 = pretzel_a2(k);
    e.p0 = pretzel_p0(k);
    const long s = k.p + k.q + k.r;
    e.exponents_ordered = k.p + k.q > s + 1 && s + 1 > s - 1 && s - 1 > k.p + k.r && k.p + k.r >= k.q + k.r;
    e.odd_coefficient = e.p0.coefficient(s + 1) % 2 != 0;
    e.verdict = cosmetic_test(e.p0, 1);
    e.verdict.hypotheses.push_back("a2 = 0; a2 != 0 is covered by the Alexander polynomial criterion");
    if (e.counterexample()) report.counterexamples.push_back(e);
    report.survivors.push_back(std::move(e));
  }
  return report;
}

}  // namespace gordian
