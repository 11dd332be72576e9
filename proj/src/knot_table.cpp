#include "gordian/knot_table.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "gordian/errors.hpp"

namespace gordian {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<std::vector<std::string>> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  if (quoted) return std::nullopt;
  for (auto& f : fields) f = trim(f);
  return fields;
}

std::vector<KnotRecord> parse_knot_table(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    if (!fields) throw ParseError(ParseError::Kind::Malformed, "table header: unterminated quote");
    header = *fields;
  }
  if (header.empty()) return {};
  if (header.size() < 2 || header.size() > 3 || header[0] != "name" || header[1] != "pd" ||
      (header.size() == 3 && header[2] != "genus"))
    throw ParseError(ParseError::Kind::Malformed, "table header must be name,pd[,genus]");

  std::vector<KnotRecord> rows;
  std::set<std::string> names;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    KnotRecord rec;
    const std::string where = "line " + std::to_string(line_no);
    auto fields = split_csv_line(line);
    if (!fields) {
      rec.name = where;
      rec.problem = "unterminated quote";
    } else if (fields->size() < 2 || fields->size() > header.size()) {
      rec.name = fields->empty() || (*fields)[0].empty() ? where : (*fields)[0];
      rec.problem = "expected " + std::to_string(header.size()) + " fields";
    } else {
      rec.name = (*fields)[0];
      rec.pd = (*fields)[1];
      if (fields->size() == 3 && !(*fields)[2].empty()) {
        try {
          std::size_t used = 0;
          int g = std::stoi((*fields)[2], &used);
          if (used != (*fields)[2].size() || g < 0) throw std::invalid_argument("genus");
          rec.genus = g;
        } catch (const std::exception&) {
          rec.problem = "genus '" + (*fields)[2] + "' is not a non-negative integer";
        }
      }
      if (rec.name.empty()) {
        rec.name = where;
        rec.problem = "empty name";
      } else if (!names.insert(rec.name).second) {
        rec.problem = "duplicate name";
      }
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

std::vector<KnotRecord> load_knot_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read table " + file.string());
  return parse_knot_table(in);
}

const std::vector<KnotRecord>& builtin_knot_table() {
  static const std::vector<KnotRecord> table = {
      {"unknot", "O", 0, std::nullopt},
      {"3_1", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", 1, std::nullopt},
      {"4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", 1, std::nullopt},
      {"5_1", "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]", 2, std::nullopt},
      {"5_2", "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]", 1, std::nullopt},
      {"6_1", "X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]", 1,
       std::nullopt},
      {"6_2", "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]", 2,
       std::nullopt},
      {"6_3", "X[4,2,5,1] X[8,4,9,3] X[12,9,1,10] X[10,5,11,6] X[6,11,7,12] X[2,8,3,7]", 2,
       std::nullopt},
  };
  return table;
}

std::optional<KnotRecord> find_knot(const std::vector<KnotRecord>& table, const std::string& name) {
  auto it = std::find_if(table.begin(), table.end(), [&](const KnotRecord& r) { return r.name == name; });
  if (it == table.end()) return std::nullopt;
  return *it;
}

}  // namespace gordian
