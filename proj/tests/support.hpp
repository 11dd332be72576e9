#pragma once

// Reference implementations and random generators shared by the test
// binaries. Nothing here calls into the skein engine.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/homfly_poly.hpp"
#include "gordian/laurent.hpp"

namespace testing_support {

using gordian::Diagram;
using gordian::HomflyPoly;
using gordian::Integer;
using gordian::LaurentPoly;

// HOMFLY of a closed braid through the Hecke algebra H_n with
// g^2 = z g + 1, sigma = v g, and the trace
//   P(x) = delta P(x) when x lies in H_{n-1},
//   P(x g_{n-2}) = v^-1 P(x) for x in H_{n-1},
//   P(ab) = P(ba),
// on the permutation basis T_w. Generator k (0-based) swaps positions k, k+1.
class HeckeOracle {
 public:
  using Perm = std::vector<int>;
  using Element = std::map<Perm, HomflyPoly>;

  HomflyPoly closure(const std::vector<int>& word, int strands) {
    Perm id(strands);
    std::iota(id.begin(), id.end(), 0);
    Element x{{id, HomflyPoly(1)}};
    const HomflyPoly z = HomflyPoly::monomial(1, 0, 1);
    for (int letter : word) {
      int k = std::abs(letter) - 1;
      Element g = right_mul(x, k);
      if (letter > 0) {
        x = scale(g, HomflyPoly::monomial(1, 1, 0));
      } else {
        // sigma^-1 = v^-1 (g - z)
        Element acc = g;
        add(acc, scale(x, HomflyPoly(0) - z));
        x = scale(acc, HomflyPoly::monomial(1, -1, 0));
      }
    }
    HomflyPoly total;
    for (const auto& [w, c] : x) total += c * trace(w);
    return total;
  }

 private:
  static bool right_up(const Perm& w, int k) { return w[k] < w[k + 1]; }
  static bool left_up(const Perm& w, int k) {
    auto a = std::find(w.begin(), w.end(), k), b = std::find(w.begin(), w.end(), k + 1);
    return a < b;
  }

  static void add(Element& x, const Element& y) {
    for (const auto& [w, c] : y) {
      auto& slot = x[w];
      slot += c;
      if (slot.is_zero()) x.erase(w);
    }
  }
  static Element scale(const Element& x, const HomflyPoly& c) {
    Element out;
    for (const auto& [w, a] : x) {
      HomflyPoly p = a * c;
      if (!p.is_zero()) out[w] = p;
    }
    return out;
  }

  static Element right_mul(const Element& x, int k) {
    const HomflyPoly z = HomflyPoly::monomial(1, 0, 1);
    Element out;
    for (const auto& [w, c] : x) {
      Perm ws = w;
      std::swap(ws[k], ws[k + 1]);
      add(out, {{ws, c}});
      if (!right_up(w, k)) add(out, {{w, c * z}});
    }
    return out;
  }

  static Element left_mul(const Element& x, int k) {
    const HomflyPoly z = HomflyPoly::monomial(1, 0, 1);
    Element out;
    for (const auto& [w, c] : x) {
      Perm sw = w;
      for (int& value : sw)
        if (value == k)
          value = k + 1;
        else if (value == k + 1)
          value = k;
      add(out, {{sw, c}});
      if (!left_up(w, k)) add(out, {{w, c * z}});
    }
    return out;
  }

  HomflyPoly trace(const Perm& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    const int n = static_cast<int>(w.size());
    HomflyPoly result;
    if (n == 1) {
      result = HomflyPoly(1);
    } else if (w[n - 1] == n - 1) {
      result = HomflyPoly::unlink(2) * trace(Perm(w.begin(), w.end() - 1));
    } else {
      // w = w' s_{n-2} ... s_p with w' in S_{n-1}
      int p = static_cast<int>(std::find(w.begin(), w.end(), n - 1) - w.begin());
      Perm wp = w;
      for (int k = p; k < n - 1; ++k) std::swap(wp[k], wp[k + 1]);
      Perm small(wp.begin(), wp.end() - 1);
      Element x{{small, HomflyPoly(1)}};
      for (int k = p; k <= n - 3; ++k) x = left_mul(x, k);
      for (const auto& [u, c] : x) result += c * trace(u);
      result = result * HomflyPoly::monomial(1, -1, 0);
    }
    memo_[w] = result;
    return result;
  }

  std::map<Perm, HomflyPoly> memo_;
};

// Every admissible f with even exponents in [-4, 4] and coefficients in
// [-bound, bound], keyed by f^2. If p = f^2 has k terms bounded by c, then
// sum f_i^2 = mean |f|^2 <= sqrt(mean |f|^4) = sqrt(sum p_j^2) <= c sqrt(k),
// so bound 7 is exhaustive for k <= 5, c <= 12.
inline std::map<LaurentPoly::Terms, LaurentPoly> admissible_squares(int bound) {
  std::map<LaurentPoly::Terms, LaurentPoly> table;
  const int exps[] = {-4, -2, 0, 2, 4};
  std::vector<int> c(5, -bound);
  for (;;) {
    long sum = 0, moment = 0;
    for (int i = 0; i < 5; ++i) {
      sum += c[i];
      moment += static_cast<long>(exps[i]) * c[i];
    }
    if (sum == 1 && moment == 0) {
      LaurentPoly f;
      for (int i = 0; i < 5; ++i) f += LaurentPoly::monomial(c[i], exps[i]);
      table.emplace((f * f).terms(), f);
    }
    int i = 0;
    while (i < 5 && c[i] == bound) c[i++] = -bound;
    if (i == 5) break;
    ++c[i];
  }
  return table;
}

inline std::vector<int> random_braid_word(std::mt19937& rng, int strands, int length) {
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w(length);
  for (int& letter : w) letter = sign(rng) ? gen(rng) : -gen(rng);
  return w;
}

// Relabels arcs by a random injection into [1, 10 * 2n] and shuffles the
// crossing order. The result describes the same oriented diagram.
inline Diagram scrambled(const Diagram& d, std::mt19937& rng) {
  std::vector<int> labels;
  for (const auto& c : d.crossings())
    for (int a : c.arcs) labels.push_back(a);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> pool(labels.size() * 10);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < labels.size(); ++i) relabel[labels[i]] = pool[i];
  std::vector<gordian::Crossing> cs = d.crossings();
  for (auto& c : cs)
    for (int& a : c.arcs) a = relabel[a];
  std::shuffle(cs.begin(), cs.end(), rng);
  return Diagram(cs, d.free_circles());
}

struct Sample {
  Diagram diagram;
  std::vector<int> word;  // empty unless the diagram is a braid closure
  int strands = 0;
};

// Closed braids on 2..4 strands, pretzels with small parameters, and their
// split unions, all with at most `max_crossings` crossings.
inline Sample random_diagram(std::mt19937& rng, int max_crossings) {
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0: {
      std::uniform_int_distribution<int> half(-1, 1);
      auto odd = [&] { return 2 * half(rng) + 1; };
      long p = odd(), q = odd(), r = odd();
      return {gordian::pretzel_diagram(p, q, r), {}, 0};
    }
    case 1: {
      int len = std::uniform_int_distribution<int>(1, max_crossings / 2)(rng);
      auto a = random_braid_word(rng, 2, len);
      auto b = random_braid_word(rng, 3, std::uniform_int_distribution<int>(1, max_crossings - len)(rng));
      return {gordian::split_union(gordian::braid_closure(a, 2), gordian::braid_closure(b, 3)), {}, 0};
    }
    default: {
      int strands = std::uniform_int_distribution<int>(2, 4)(rng);
      int len = std::uniform_int_distribution<int>(1, max_crossings)(rng);
      auto w = random_braid_word(rng, strands, len);
      return {gordian::braid_closure(w, strands), w, strands};
    }
  }
}

}  // namespace testing_support
