#include "gordian/homfly.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

#include "gordian/errors.hpp"

namespace gordian {

HomflyEngine::HomflyEngine(HomflyOptions options) : options_(options) {
  if (options_.workers < 1) options_.workers = 1;
}

HomflyEngine::~HomflyEngine() = default;

std::size_t HomflyEngine::memo_size() const {
  std::shared_lock lock(memo_mutex_);
  return memo_.size();
}

std::optional<HomflyPoly> HomflyEngine::lookup(const std::string& code) const {
  std::shared_lock lock(memo_mutex_);
  auto it = memo_.find(code);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void HomflyEngine::store(const std::string& code, const HomflyPoly& value) {
  std::unique_lock lock(memo_mutex_);
  auto [it, inserted] = memo_.try_emplace(code, value);
  if (inserted && cache_file_) pending_.push_back(code + '\t' + value.to_cache_string());
}

HomflyEngine::Expansion HomflyEngine::expand(const Diagram& canonical) const {
  // Arcs of a canonical diagram are numbered along the traversal, so a
  // crossing is met first on its under-strand iff under_in < over_in.
  std::vector<std::pair<int, std::size_t>> ascending;
  const auto& crossings = canonical.crossings();
  for (std::size_t k = 0; k < crossings.size(); ++k)
    if (crossings[k].under_in() < crossings[k].over_in()) ascending.emplace_back(crossings[k].under_in(), k);
  std::sort(ascending.begin(), ascending.end());

  Expansion out;
  HomflyPoly multiplier = 1;
  Diagram current = canonical;
  for (const auto& [first_visit, k] : ascending) {
    const int s = current.crossing_sign(k);
    // P(+) = v^2 P(-) + v z P(0);  P(-) = v^-2 P(+) - v^-1 z P(0).
    out.branches.push_back({multiplier * HomflyPoly::monomial(s, s, 1), smooth_crossing(current, k)});
    current = switch_crossing(current, k);
    multiplier = multiplier.shifted(2 * s, 0);
    if (options_.simplify) {
      Diagram reduced = simplify(current);
      if (reduced.crossing_count() < canonical.crossing_count()) {
        out.branches.push_back({multiplier, std::move(reduced)});
        return out;
      }
    }
  }
  out.constant = multiplier * HomflyPoly::unlink(canonical.components());
  return out;
}

HomflyPoly HomflyEngine::evaluate(const Diagram& d) {
  Diagram reduced = options_.simplify ? simplify(d) : d;
  if (reduced.crossing_count() == 0) return HomflyPoly::unlink(reduced.free_circles());
  CanonicalForm form = canonical_form(reduced);
  if (auto hit = lookup(form.code)) return *hit;
  Expansion ex = expand(form.diagram);
  HomflyPoly result = ex.constant;
  for (const auto& branch : ex.branches) result += branch.coefficient * evaluate(branch.diagram);
  store(form.code, result);
  return result;
}

HomflyPoly HomflyEngine::compute(const Diagram& d) {
  if (d.empty()) throw std::invalid_argument("HOMFLY of the empty diagram is undefined");
  Diagram reduced = options_.simplify ? simplify(d) : d;
  const int n = static_cast<int>(reduced.crossing_count());
  if (n > options_.max_crossings) throw TooLarge(n, options_.max_crossings);
  if (n == 0) return HomflyPoly::unlink(reduced.free_circles());

  CanonicalForm form = canonical_form(reduced);
  if (auto hit = lookup(form.code)) return *hit;

  Expansion ex = expand(form.diagram);
  std::vector<HomflyPoly> values(ex.branches.size());
  const int workers = std::min<int>(options_.workers, static_cast<int>(ex.branches.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < ex.branches.size(); ++i) values[i] = evaluate(ex.branches[i].diagram);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (int w = 0; w < workers; ++w) {
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ex.branches.size();)
          values[i] = evaluate(ex.branches[i].diagram);
      }));
    }
    for (auto& f : pool) f.get();
  }
  HomflyPoly result = ex.constant;
  for (std::size_t i = 0; i < ex.branches.size(); ++i) result += ex.branches[i].coefficient * values[i];
  store(form.code, result);
  flush_cache();
  return result;
}

void HomflyEngine::attach_cache(const std::filesystem::path& file) {
  std::lock_guard cache_lock(cache_mutex_);
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  bool needs_newline = false;
  {
    std::ifstream in(file, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t line_no = 0, pos = 0;
    std::unique_lock lock(memo_mutex_);
    while (pos < content.size()) {
      ++line_no;
      std::size_t end = content.find('\n', pos);
      if (end == std::string::npos) {
        // Partial trailing record from an interrupted write.
        std::cerr << "warning: " << file.string() << ":" << line_no << ": incomplete record skipped\n";
        needs_newline = true;
        break;
      }
      std::string line = content.substr(pos, end - pos);
      pos = end + 1;
      if (line.empty()) continue;
      try {
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) throw Error("missing field separator");
        std::string code = line.substr(0, tab);
        HomflyPoly value = HomflyPoly::parse(std::string_view(line).substr(tab + 1));
        if (value.is_zero()) throw Error("zero polynomial");
        Diagram key = parse_pd(code);
        if (key.components() != homfly_components(value)) throw Error("component count mismatch");
        coefficient_polys(value);
        memo_.try_emplace(std::move(code), std::move(value));
      } catch (const std::exception& e) {
        std::cerr << "warning: " << file.string() << ":" << line_no << ": skipped (" << e.what() << ")\n";
      }
    }
  }
  if (needs_newline) {
    std::ofstream out(file, std::ios::app | std::ios::binary);
    out << '\n';
  }
  cache_file_ = file;
}

void HomflyEngine::flush_cache() {
  std::vector<std::string> lines;
  {
    std::unique_lock lock(memo_mutex_);
    if (!cache_file_ || pending_.empty()) return;
    lines.swap(pending_);
  }
  std::lock_guard cache_lock(cache_mutex_);
  std::ofstream out(*cache_file_, std::ios::app | std::ios::binary);
  for (const auto& line : lines) out << line << '\n';
  out.flush();
}

HomflyPoly compute_homfly(const Diagram& d, HomflyOptions options) {
  HomflyEngine engine(options);
  return engine.compute(d);
}

int homfly_components(const HomflyPoly& p) {
  if (p.is_zero()) throw MalformedHomfly("zero HOMFLY polynomial");
  return static_cast<int>(1 - p.min_z_exponent());
}

std::vector<LaurentPoly> coefficient_polys(const HomflyPoly& p) {
  const int r = homfly_components(p);
  if (r < 1) throw MalformedHomfly("HOMFLY polynomial has positive lowest z power");
  const HomflyPoly normalized = p.shifted(-(r - 1), r - 1);
  LaurentPoly::Exponent top = 0;
  for (const auto& [key, c] : normalized.terms()) {
    const auto [v_exp, z_exp] = key;
    if (z_exp < 0 || z_exp % 2 != 0) throw MalformedHomfly("odd or negative z power in " + p.to_string());
    if (v_exp % 2 != 0) throw MalformedHomfly("odd v power in " + p.to_string());
    top = std::max(top, z_exp);
  }
  std::vector<LaurentPoly> out;
  for (LaurentPoly::Exponent k = 0; k <= top; k += 2) out.push_back(normalized.z_coefficient(k));
  return out;
}

LaurentPoly p0(const HomflyPoly& p) { return coefficient_polys(p).front(); }

LaurentPoly p0(const Diagram& d, HomflyEngine& engine) { return p0(engine.compute(d)); }

ConwayPoly conway(const HomflyPoly& p) {
  ConwayPoly out;
  for (const auto& [key, c] : p.terms()) out.terms[key.second] += c;
  for (auto it = out.terms.begin(); it != out.terms.end();) {
    if (it->second == 0) {
      it = out.terms.erase(it);
      continue;
    }
    if (it->first < 0) throw MalformedHomfly("Conway polynomial has negative z power");
    ++it;
  }
  return out;
}

Integer a2(const HomflyPoly& p) {
  if (homfly_components(p) != 1) throw NotAKnot("a2 is defined for knots only");
  return conway(p).coefficient(2);
}

Integer a2(const Diagram& d, HomflyEngine& engine) {
  if (d.components() != 1) throw NotAKnot("a2 is defined for knots only");
  return a2(engine.compute(d));
}

int total_linking_number(const Diagram& d) {
  if (d.crossing_count() == 0) return 0;
  const auto pairs = crossing_components(d);
  int twice = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].first != pairs[k].second) twice += d.crossings()[k].sign;
  return twice / 2;
}

LaurentPoly p0_product(const std::vector<LaurentPoly>& component_p0s, long lk) {
  if (component_p0s.empty()) throw std::invalid_argument("p0_product needs at least one component");
  if (component_p0s.size() == 1) return component_p0s.front();
  const LaurentPoly factor{{-2, 1}, {0, -1}};
  LaurentPoly out = pow(factor, static_cast<unsigned>(component_p0s.size() - 1)).shifted(2 * lk);
  for (const auto& p : component_p0s) out *= p;
  return out;
}

HomflyPoly mirror_homfly(const HomflyPoly& p) {
  HomflyPoly out;
  for (const auto& [key, c] : p.terms())
    out += HomflyPoly::monomial(key.second % 2 == 0 ? c : Integer(-c), -key.first, key.second);
  return out;
}

}  // namespace gordian
