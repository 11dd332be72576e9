#include "gordian/report.hpp"

#include <sstream>

namespace gordian {

int exit_code(Status s) {
  switch (s) {
    case Status::Excluded:
      return kExitExcluded;
    case Status::NotExcluded:
      return kExitNotExcluded;
    case Status::Inapplicable:
      return kExitInapplicable;
  }
  return kExitInapplicable;
}

namespace {

nlohmann::json optional_poly(const std::optional<LaurentPoly>& p) {
  return p ? nlohmann::json(p->to_string()) : nlohmann::json(nullptr);
}

std::string outcome(const Verdict& v) {
  if (v.status == Status::NotExcluded) return "f = " + v.witness->to_string();
  if (v.status == Status::Inapplicable) return v.reason;
  // The deciding failure is the last branch's; all of them failed.
  return std::string(to_string(*v.trace.back().stage));
}

}  // namespace

nlohmann::json to_json(const BranchResult& b) {
  return {
      {"branch", b.label},
      {"eps", b.eps == 0 ? nlohmann::json(nullptr) : nlohmann::json(b.eps)},
      {"mirrored", b.mirrored},
      {"residual", b.residual.to_string()},
      {"divisor", b.divisor.to_string()},
      {"quotient", optional_poly(b.quotient)},
      {"stage", b.stage ? nlohmann::json(std::string(to_string(*b.stage))) : nlohmann::json(nullptr)},
      {"witness", optional_poly(b.witness)},
  };
}

nlohmann::json to_json(const Verdict& v) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& b : v.trace) trace.push_back(to_json(b));
  return {
      {"verdict", std::string(to_string(v.status))},
      {"witness", optional_poly(v.witness)},
      {"trace", trace},
      {"hypotheses", v.hypotheses},
      {"reason", v.reason.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.reason)},
  };
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.status);
  if (v.witness) out << "  f = " << *v.witness;
  if (!v.reason.empty()) out << "  (" << v.reason << ")";
  out << '\n';
  for (const auto& b : v.trace) {
    out << "  [" << b.label << "] residual = " << b.residual << "; divisor = " << b.divisor;
    if (b.quotient) out << "; quotient = " << *b.quotient;
    if (b.stage)
      out << "; FAIL(" << to_string(*b.stage) << ")";
    else
      out << "; PASS f = " << *b.witness;
    out << '\n';
  }
  for (const auto& h : v.hypotheses) out << "  assumes: " << h << '\n';
  return out.str();
}

std::string scan_line(const ScanEntry& e) {
  std::ostringstream out;
  out << "P(" << e.params.p << ',' << e.params.q << ',' << e.params.r << ")\t" << e.a2 << '\t'
      << to_string(e.verdict.status) << '\t' << outcome(e.verdict);
  return out.str();
}

std::string scan_text(const ScanReport& r) {
  std::ostringstream out;
  for (const auto& e : r.survivors) out << scan_line(e) << '\n';
  out << r.counterexamples.size() << " counterexamples / " << r.survivors.size() << " knots scanned"
      << " (bound " << r.bound << ", " << r.enumerated << " triples, " << r.a2_zero << " with a2 = 0, "
      << r.trivial << " unknots)\n";
  return out.str();
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : r.survivors) {
    rows.push_back({
        {"p", e.params.p},
        {"q", e.params.q},
        {"r", e.params.r},
        {"a2", e.a2},
        {"p0", e.p0.to_string()},
        {"odd_coefficient", e.odd_coefficient},
        {"exponents_ordered", e.exponents_ordered},
        {"result", to_json(e.verdict)},
    });
  }
  return {
      {"bound", r.bound},
      {"enumerated", r.enumerated},
      {"a2_zero", r.a2_zero},
      {"trivial", r.trivial},
      {"scanned", r.survivors.size()},
      {"counterexamples", r.counterexamples.size()},
      {"knots", rows},
  };
}

}  // namespace gordian
