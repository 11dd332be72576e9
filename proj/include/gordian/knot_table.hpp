#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gordian {

/// One row of a knot table. The genus is an assertion supplied by the
/// user (or a published table), never computed.
struct KnotRecord {
  std::string name;
  std::string pd;
  std::optional<int> genus;
  /// Set when the CSV row itself could not be read; the row is kept so a
  /// census can report it in place.
  std::optional<std::string> problem;
};

/// Splits one CSV line into fields. Quoted fields may contain commas and
/// doubled quotes. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split_csv_line(const std::string& line);

/// Reads a table with header `name,pd,genus` (genus column optional, and
/// may be empty per row). Throws ParseError if the header is wrong.
std::vector<KnotRecord> parse_knot_table(std::istream& in);

/// Throws Error if the file cannot be opened.
std::vector<KnotRecord> load_knot_table(const std::filesystem::path& file);

/// A few small knots in KnotTheory PD convention with their genera.
const std::vector<KnotRecord>& builtin_knot_table();

std::optional<KnotRecord> find_knot(const std::vector<KnotRecord>& table, const std::string& name);

}  // namespace gordian
