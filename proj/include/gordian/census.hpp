#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gordian/homfly.hpp"
#include "gordian/knot_table.hpp"
#include "gordian/obstruction.hpp"

namespace gordian {

struct CensusRow {
  KnotRecord record;
  /// One of EXCLUDED, NOT_EXCLUDED, INAPPLICABLE, TOO_LARGE, ERROR.
  std::string outcome;
  std::string detail;
  std::optional<LaurentPoly> p0;
  std::optional<Integer> a2;
  std::optional<Verdict> verdict;
};

struct CensusReport {
  std::vector<CensusRow> rows;  // input order
  std::size_t excluded = 0;
  std::size_t not_excluded = 0;
  std::size_t inapplicable = 0;
  std::size_t too_large = 0;
  std::size_t errors = 0;
};

/// p0 and a2 for every row, and the cosmetic-crossing test on rows with
/// asserted genus 1. Row failures are recorded, never thrown. Rows are
/// spread over `workers` threads; output order is input order.
CensusReport run_census(const std::vector<KnotRecord>& table, HomflyEngine& engine, int workers = 1);

/// One tab-separated line per row (`name p0 a2 outcome detail`) and a
/// summary line.
std::string census_text(const CensusReport& report);
nlohmann::json to_json(const CensusReport& report);

}  // namespace gordian
