#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gordian/census.hpp"
#include "gordian/diagram.hpp"
#include "gordian/errors.hpp"
#include "gordian/homfly.hpp"
#include "gordian/knot_table.hpp"
#include "gordian/obstruction.hpp"
#include "gordian/report.hpp"

namespace fs = std::filesystem;
using namespace gordian;

namespace {

struct Global {
  std::string table_file;
  std::string cache_dir;
  bool no_cache = false;
  int max_crossings = 16;
  int workers = 1;
};

fs::path default_cache_dir() {
  if (const char* env = std::getenv("GORDIAN_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "gordian";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "gordian";
  return fs::path(".gordian-cache");
}

std::vector<long> parse_ints(const std::string& text, const char* what) {
  std::vector<long> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      long value = std::stol(token, &used);
      if (token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::logic_error&) {
      throw ParseError(ParseError::Kind::Malformed, std::string("bad ") + what + ": '" + text + "'");
    }
  }
  return out;
}

class Session {
 public:
  explicit Session(const Global& g) : global_(g), engine_(HomflyOptions{g.max_crossings, g.workers, true}) {
    if (!g.no_cache) {
      fs::path dir = g.cache_dir.empty() ? default_cache_dir() : fs::path(g.cache_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec)
        std::cerr << "warning: cache disabled, cannot create " << dir << ": " << ec.message() << '\n';
      else
        engine_.attach_cache(dir / "homfly.tsv");
    }
  }

  HomflyEngine& engine() { return engine_; }

  const std::vector<KnotRecord>& table() {
    if (!table_) table_ = global_.table_file.empty() ? builtin_knot_table() : load_knot_table(global_.table_file);
    return *table_;
  }

  struct Knot {
    std::string name;
    Diagram diagram;
    std::optional<int> genus;
  };

  // table:NAME | pd:TEXT | pretzel:p,q,r | braid:w1,w2,...
  Knot resolve(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw ParseError(ParseError::Kind::Malformed, "knot spec must be table:, pd:, pretzel: or braid: ('" + spec + "')");
    std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
    if (kind == "table") return from_table(rest);
    if (kind == "pd") return {rest, parse_pd(rest), std::nullopt};
    if (kind == "pretzel") return from_pretzel(rest);
    if (kind == "braid") return from_braid(rest);
    throw ParseError(ParseError::Kind::Malformed, "unknown knot spec kind '" + kind + "'");
  }

  Knot from_table(const std::string& name) {
    auto rec = find_knot(table(), name);
    if (!rec) throw ParseError(ParseError::Kind::Invalid, "no knot named '" + name + "' in table");
    if (rec->problem) throw ParseError(ParseError::Kind::Malformed, name + ": " + *rec->problem);
    return {rec->name, parse_pd(rec->pd), rec->genus};
  }

  static Knot from_pretzel(const std::string& text) {
    auto v = parse_ints(text, "pretzel parameters");
    if (v.size() != 3) throw ParseError(ParseError::Kind::Malformed, "pretzel needs three parameters");
    return {"P(" + text + ")", pretzel_diagram(v[0], v[1], v[2]), std::nullopt};
  }

  static Knot from_braid(const std::string& text) {
    auto v = parse_ints(text, "braid word");
    std::vector<int> word(v.begin(), v.end());
    int strands = 1;
    for (int g : word) strands = std::max(strands, std::abs(g) + 1);
    return {"braid(" + text + ")", braid_closure(word, strands), std::nullopt};
  }

 private:
  Global global_;
  HomflyEngine engine_;
  std::optional<std::vector<KnotRecord>> table_;
};

struct Source {
  std::string pd, pretzel, braid, knot;

  void add_to(CLI::App* cmd) {
    auto* g = cmd->add_option_group("input");
    g->add_option("--pd", pd, "PD code");
    g->add_option("--pretzel", pretzel, "odd pretzel parameters p,q,r");
    g->add_option("--braid", braid, "braid word as signed generator indices, e.g. 1,1,1");
    g->add_option("--knot", knot, "knot spec: table:NAME, pd:TEXT, pretzel:p,q,r or braid:WORD");
    g->require_option(1);
  }

  Session::Knot resolve(Session& s) const {
    if (!pd.empty()) return s.resolve("pd:" + pd);
    if (!pretzel.empty()) return s.resolve("pretzel:" + pretzel);
    if (!braid.empty()) return s.resolve("braid:" + braid);
    return s.resolve(knot);
  }
};

void emit(const Verdict& v, bool json) {
  if (json)
    std::cout << to_json(v).dump(2) << '\n';
  else
    std::cout << verdict_text(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HOMFLY polynomials and crossing-change obstructions for knots"};
  app.require_subcommand(1);
  Global global;
  app.add_option("--table", global.table_file, "knot table CSV (name,pd,genus); defaults to a small built-in table");
  app.add_option("--cache-dir", global.cache_dir, "cache directory (default $GORDIAN_CACHE_DIR or ~/.cache/gordian)");
  app.add_flag("--no-cache", global.no_cache, "neither read nor write the polynomial cache");
  app.add_option("--max-crossings", global.max_crossings, "crossing cap after simplification")->check(CLI::PositiveNumber);
  app.add_option("--workers", global.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* homfly = app.add_subcommand("homfly", "print the HOMFLY polynomial");
  Source homfly_src;
  homfly_src.add_to(homfly);

  auto* obstruct = app.add_subcommand("obstruct", "run an obstruction test");
  obstruct->require_subcommand(1);
  bool json = false;

  auto* cosmetic = obstruct->add_subcommand("cosmetic", "generalized cosmetic crossing test");
  Source cosmetic_src;
  cosmetic_src.add_to(cosmetic);
  std::optional<int> genus;
  cosmetic->add_option("--genus", genus, "asserted genus of the knot");
  cosmetic->add_flag("--json", json);

  auto* gordian = obstruct->add_subcommand("gordian", "can one crossing change turn knot A into knot B?");
  std::string knot_a, knot_b;
  std::optional<int> genus_a, genus_b;
  bool sweep_mirrors = false;
  gordian->add_option("--knot-a", knot_a, "knot spec")->required();
  gordian->add_option("--knot-b", knot_b, "knot spec")->required();
  gordian->add_option("--genus-a", genus_a, "asserted genus of knot A (defaults to the table value)");
  gordian->add_option("--genus-b", genus_b, "asserted genus of knot B (defaults to the table value)");
  gordian->add_flag("--sweep-mirrors", sweep_mirrors, "also try the mirror image of knot A");
  gordian->add_flag("--json", json);

  auto* scan = obstruct->add_subcommand("pretzel-scan", "genus-one pretzel knots with a2 = 0");
  long bound = 99;
  scan->add_option("--bound", bound, "largest |parameter|")->check(CLI::Range(3L, 100000L));
  scan->add_flag("--json", json);

  auto* annulus = obstruct->add_subcommand("annulus", "p0 form of a 2-component link bounding an annulus");
  Source annulus_src;
  annulus_src.add_to(annulus);
  annulus->add_flag("--json", json);

  auto* census = app.add_subcommand("census", "run the cosmetic test over a knot table");
  std::string census_file;
  census->add_option("file", census_file, "CSV with header name,pd,genus")->required();
  census->add_flag("--json", json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*homfly) {
      Session s(global);
      auto k = homfly_src.resolve(s);
      std::cout << s.engine().compute(k.diagram) << '\n';
      return 0;
    }
    if (*cosmetic) {
      Session s(global);
      auto k = cosmetic_src.resolve(s);
      HomflyPoly P = s.engine().compute(k.diagram);
      Verdict v;
      if (k.diagram.components() != 1) {
        v.reason = "input is a link with " + std::to_string(k.diagram.components()) + " components, not a knot";
      } else {
        v = cosmetic_test(KnotData{k.name, p0(P), a2(P), genus ? genus : k.genus});
      }
      emit(v, json);
      return exit_code(v.status);
    }
    if (*gordian) {
      Session s(global);
      auto a = s.resolve(knot_a);
      auto b = s.resolve(knot_b);
      HomflyPoly Pa = s.engine().compute(a.diagram);
      HomflyPoly Pb = s.engine().compute(b.diagram);
      Verdict v;
      if (a.diagram.components() != 1 || b.diagram.components() != 1) {
        v.reason = "both inputs must be knots";
      } else {
        KnotData ka{a.name, p0(Pa), a2(Pa), genus_a ? genus_a : a.genus};
        KnotData kb{b.name, p0(Pb), a2(Pb), genus_b ? genus_b : b.genus};
        v = gordian_one_test(ka, kb, sweep_mirrors);
      }
      emit(v, json);
      return exit_code(v.status);
    }
    if (*scan) {
      ScanReport r = pretzel_scan(bound);
      if (json)
        std::cout << to_json(r).dump(2) << '\n';
      else
        std::cout << scan_text(r);
      return r.counterexamples.empty() ? 0 : 1;
    }
    if (*annulus) {
      Session s(global);
      auto k = annulus_src.resolve(s);
      Verdict v;
      if (k.diagram.components() != 2) {
        v.reason = "annulus check needs a 2-component link";
      } else {
        v = annulus_form_check(p0(s.engine().compute(k.diagram)), total_linking_number(k.diagram));
      }
      emit(v, json);
      return exit_code(v.status);
    }
    if (*census) {
      std::vector<KnotRecord> rows;
      try {
        rows = load_knot_table(census_file);
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
      }
      Session s(global);
      CensusReport r = run_census(rows, s.engine(), global.workers);
      if (json)
        std::cout << to_json(r).dump(2) << '\n';
      else
        std::cout << census_text(r);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const NotOdd& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvalidWord& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
