#include "gordian/census.hpp"

#include <atomic>
#include <future>
#include <sstream>

#include "gordian/errors.hpp"
#include "gordian/report.hpp"

namespace gordian {

namespace {

CensusRow census_row(const KnotRecord& rec, HomflyEngine& engine) {
  CensusRow row;
  row.record = rec;
  if (rec.problem) {
    row.outcome = "ERROR";
    row.detail = *rec.problem;
    return row;
  }
  try {
    Diagram d = parse_pd(rec.pd);
    HomflyPoly P = engine.compute(d);
    row.p0 = p0(P);
    if (d.components() != 1) {
      row.outcome = "INAPPLICABLE";
      row.detail = "not a knot (" + std::to_string(d.components()) + " components)";
      return row;
    }
    row.a2 = a2(P);
    KnotData k{rec.name, *row.p0, *row.a2, rec.genus};
    row.verdict = cosmetic_test(k);
    row.outcome = std::string(to_string(row.verdict->status));
    if (row.verdict->status == Status::NotExcluded)
      row.detail = "f = " + row.verdict->witness->to_string();
    else if (row.verdict->status == Status::Excluded)
      row.detail = std::string(to_string(*row.verdict->trace.back().stage));
    else
      row.detail = row.verdict->reason;
  } catch (const TooLarge& e) {
    row.outcome = "TOO_LARGE";
    row.detail = e.what();
  } catch (const ParseError& e) {
    row.outcome = "ERROR";
    row.detail = std::string(e.kind() == ParseError::Kind::Malformed ? "MALFORMED: " : "INVALID: ") + e.what();
  } catch (const std::exception& e) {
    row.outcome = "ERROR";
    row.detail = e.what();
  }
  return row;
}

}  // namespace

CensusReport run_census(const std::vector<KnotRecord>& table, HomflyEngine& engine, int workers) {
  CensusReport report;
  report.rows.resize(table.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < table.size();) report.rows[i] = census_row(table[i], engine);
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(table.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::future<void>> pool;
    for (int t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, work));
    for (auto& f : pool) f.get();
  }
  for (const auto& row : report.rows) {
    if (row.outcome == "EXCLUDED")
      ++report.excluded;
    else if (row.outcome == "NOT_EXCLUDED")
      ++report.not_excluded;
    else if (row.outcome == "INAPPLICABLE")
      ++report.inapplicable;
    else if (row.outcome == "TOO_LARGE")
      ++report.too_large;
    else
      ++report.errors;
  }
  return report;
}

std::string census_text(const CensusReport& report) {
  std::ostringstream out;
  for (const auto& row : report.rows) {
    out << row.record.name << '\t' << (row.p0 ? row.p0->to_string() : "-") << '\t'
        << (row.a2 ? row.a2->str() : "-") << '\t' << row.outcome << '\t' << row.detail << '\n';
  }
  out << "rows=" << report.rows.size() << " EXCLUDED=" << report.excluded
      << " NOT_EXCLUDED=" << report.not_excluded << " INAPPLICABLE=" << report.inapplicable
      << " TOO_LARGE=" << report.too_large << " ERROR=" << report.errors << '\n';
  return out.str();
}

nlohmann::json to_json(const CensusReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({
        {"name", row.record.name},
        {"genus", row.record.genus ? nlohmann::json(*row.record.genus) : nlohmann::json(nullptr)},
        {"p0", row.p0 ? nlohmann::json(row.p0->to_string()) : nlohmann::json(nullptr)},
        {"a2", row.a2 ? nlohmann::json(row.a2->str()) : nlohmann::json(nullptr)},
        {"outcome", row.outcome},
        {"detail", row.detail},
        {"result", row.verdict ? to_json(*row.verdict) : nlohmann::json(nullptr)},
    });
  }
  return {
      {"rows", rows},
      {"summary",
       {{"rows", report.rows.size()},
        {"EXCLUDED", report.excluded},
        {"NOT_EXCLUDED", report.not_excluded},
        {"INAPPLICABLE", report.inapplicable},
        {"TOO_LARGE", report.too_large},
        {"ERROR", report.errors}}},
  };
}

}  // namespace gordian
