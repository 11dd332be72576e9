#pragma once

#include <string>

#include "json.hpp"

#include "gordian/homfly_poly.hpp"
#include "gordian/obstruction.hpp"

namespace gordian {

/// Process exit codes for obstruction commands; a function of the verdict
/// status only.
inline constexpr int kExitNotExcluded = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitTooLarge = 3;
inline constexpr int kExitExcluded = 10;
inline constexpr int kExitInapplicable = 11;

int exit_code(Status s);

nlohmann::json to_json(const BranchResult& b);
nlohmann::json to_json(const Verdict& v);

/// Human-readable multi-line verdict with its trace.
std::string verdict_text(const Verdict& v);

/// `P(p,q,r) TAB a2 TAB verdict TAB stage-or-witness`
std::string scan_line(const ScanEntry& e);
std::string scan_text(const ScanReport& r);
nlohmann::json to_json(const ScanReport& r);

}  // namespace gordian
