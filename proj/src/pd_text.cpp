#include <cctype>
#include <set>

#include "diagram_internal.hpp"
#include "gordian/errors.hpp"

namespace gordian {

namespace {

class PdLexer {
 public:
  explicit PdLexer(std::string_view text) : text_(text) {}

  void skip_separators() {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) fail("expected an integer");
    if (pos_ - digits > 9) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(ParseError::Kind::Malformed,
                     "PD: " + why + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
  PdLexer lex(text);
  std::vector<std::array<int, 4>> quads;
  std::vector<OrientOverride> overrides;
  int circles = 0;

  lex.skip_separators();
  const bool wrapped = lex.accept("PD[");
  while (true) {
    lex.skip_separators();
    if (lex.at_end() || (wrapped && lex.peek() == ']')) break;
    if (lex.accept("X[")) {
      std::array<int, 4> q{};
      for (int s = 0; s < 4; ++s) {
        if (s > 0) lex.expect(",");
        q[s] = lex.integer();
      }
      lex.expect("]");
      quads.push_back(q);
    } else if (lex.accept("orient(")) {
      OrientOverride ov;
      ov.arc = lex.integer();
      lex.expect("=");
      ov.crossing = lex.integer();
      lex.expect(")");
      overrides.push_back(ov);
    } else if (lex.accept("O")) {
      ++circles;
    } else {
      lex.fail("unexpected character");
    }
  }
  if (wrapped) {
    lex.expect("]");
    lex.skip_separators();
    if (!lex.at_end()) lex.fail("trailing text after PD[...]");
  }
  if (quads.empty() && circles == 0)
    throw ParseError(ParseError::Kind::Invalid, "PD: empty diagram (use O for an unknot)");
  if (quads.empty() && !overrides.empty())
    throw ParseError(ParseError::Kind::Invalid, "PD: orient() without crossings");
  return Diagram::from_pd(quads, circles, overrides);
}

std::string render_pd(const Diagram& d) {
  std::string out;
  for (const auto& c : d.crossings()) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(c.arcs[0]) + ',' + std::to_string(c.arcs[1]) + ',' +
           std::to_string(c.arcs[2]) + ',' + std::to_string(c.arcs[3]) + ']';
  }
  for (int i = 0; i < d.free_circles(); ++i) out += out.empty() ? "O" : " O";
  if (d.crossing_count() == 0) return out;

  // Components that never pass under carry no orientation in the quads.
  auto comps = component_arcs(d);
  auto pairs = crossing_components(d);
  std::set<int> passes_under;
  for (const auto& [under, over] : pairs) passes_under.insert(under);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
    if (passes_under.count(c)) continue;
    const int arc = comps[c].front();
    for (std::size_t k = 0; k < d.crossing_count(); ++k) {
      if (d.crossings()[k].over_in() == arc) {
        out += " orient(" + std::to_string(arc) + '=' + std::to_string(k + 1) + ')';
        break;
      }
    }
  }
  return out;
}

}  // namespace gordian
