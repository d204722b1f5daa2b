#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "lengthsmith/monoid.hpp"
#include "lengthsmith/rational.hpp"
#include "lengthsmith/zerosum.hpp"

namespace oracle {

using lengthsmith::Element;
using lengthsmith::Factorization;
using lengthsmith::MonoidPresentation;

inline std::set<std::uint64_t> sumset(const std::set<std::uint64_t>& a,
                                      const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

inline std::set<std::uint64_t> n_fold(const std::set<std::uint64_t>& a,
                                      unsigned n) {
  std::set<std::uint64_t> out{0};
  for (unsigned i = 0; i < n; ++i) out = sumset(out, a);
  return out;
}

// Every x over atoms[first, last) with scaled degree <= budget, keyed by A x.
inline void half_sums(const MonoidPresentation& m, std::size_t first,
                      std::size_t last, std::int64_t budget,
                      std::map<Element, std::vector<std::vector<std::uint32_t>>>& out) {
  std::vector<std::uint32_t> x(last - first, 0);
  Element sum(m.dim(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                          std::int64_t left) {
    if (i == last) {
      out[sum].push_back(x);
      return;
    }
    const auto w = m.scaled_atom_degree(i);
    const auto& a = m.atom(i).vector;
    for (std::int64_t k = 0; k * w <= left; ++k) {
      x[i - first] = static_cast<std::uint32_t>(k);
      rec(i + 1, left - k * w);
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] += a[c];
    }
    const auto taken = static_cast<std::int64_t>(x[i - first]) + 1;
    for (std::size_t c = 0; c < sum.size(); ++c) sum[c] -= taken * a[c];
    x[i - first] = 0;
  };
  rec(first, budget);
}

// Meet-in-the-middle over the atom index split [0, m/2) | [m/2, m).
inline std::vector<Factorization> mitm_factorizations(
    const MonoidPresentation& m, const Element& v) {
  const std::int64_t budget = m.scaled_degree(v);
  if (budget < 0) return {};
  const std::size_t half = m.atom_count() / 2;
  std::map<Element, std::vector<std::vector<std::uint32_t>>> left, right;
  half_sums(m, 0, half, budget, left);
  half_sums(m, half, m.atom_count(), budget, right);
  std::vector<Factorization> out;
  for (const auto& [sum, xs] : left) {
    Element need(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) need[c] = v[c] - sum[c];
    auto it = right.find(need);
    if (it == right.end()) continue;
    for (const auto& a : xs)
      for (const auto& b : it->second) {
        Factorization z;
        z.multiplicities = a;
        z.multiplicities.insert(z.multiplicities.end(), b.begin(), b.end());
        out.push_back(std::move(z));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t distance(const Factorization& a, const Factorization& b) {
  // Expand both into sorted atom words and strip the common multiset.
  std::vector<std::size_t> wa, wb;
  for (std::size_t i = 0; i < a.multiplicities.size(); ++i)
    wa.insert(wa.end(), a.multiplicities[i], i);
  for (std::size_t i = 0; i < b.multiplicities.size(); ++i)
    wb.insert(wb.end(), b.multiplicities[i], i);
  std::vector<std::size_t> common;
  std::set_intersection(wa.begin(), wa.end(), wb.begin(), wb.end(),
                        std::back_inserter(common));
  return std::max(wa.size() - common.size(), wb.size() - common.size());
}

// Smallest N such that every pair is chained by steps of distance <= N.
inline std::uint64_t catenary(const std::vector<Factorization>& zs) {
  const std::size_t p = zs.size();
  if (p <= 1) return 0;
  for (std::uint64_t n = 0;; ++n) {
    std::vector<char> seen(p, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (std::size_t w = 0; w < p; ++w)
        if (!seen[w] && oracle::distance(zs[u], zs[w]) <= n) {
          seen[w] = 1;
          q.push(w);
        }
    }
    if (std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
      return n;
  }
}

// Multisets over g0 of size in [1, max_len], as multiplicity vectors.
inline std::vector<std::vector<std::uint32_t>> multisets(std::size_t k,
                                                         std::size_t max_len) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur(k, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i == k) {
      if (std::accumulate(cur.begin(), cur.end(), 0u) > 0) out.push_back(cur);
      return;
    }
    for (std::size_t m = 0; m <= left; ++m) {
      cur[i] = static_cast<std::uint32_t>(m);
      rec(i + 1, left - m);
    }
    cur[i] = 0;
  };
  rec(0, max_len);
  return out;
}

inline bool sums_to_zero(const lengthsmith::GroupSpec& g,
                         const std::vector<std::uint32_t>& s) {
  for (std::size_t c = 0; c < g.cyclic_orders().size(); ++c) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < s.size(); ++i) t += s[i] * g.g0()[i][c];
    if (t % g.cyclic_orders()[c] != 0) return false;
  }
  return true;
}

// Minimal zero-sum sequences by checking every proper sub-multiset.
inline std::vector<std::vector<std::uint32_t>> minimal_zero_sums(
    const lengthsmith::GroupSpec& g, std::size_t max_len) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& s : multisets(g.g0().size(), max_len)) {
    if (!sums_to_zero(g, s)) continue;
    bool minimal = true;
    std::vector<std::uint32_t> t(s.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (!minimal) return;
      if (i == s.size()) {
        const auto len = std::accumulate(t.begin(), t.end(), 0u);
        const auto full = std::accumulate(s.begin(), s.end(), 0u);
        if (len > 0 && len < full && sums_to_zero(g, t)) minimal = false;
        return;
      }
      for (std::uint32_t m = 0; m <= s[i]; ++m) {
        t[i] = m;
        rec(i + 1);
      }
      t[i] = 0;
    };
    rec(0);
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lengths of all ways to write s as a sum of the given atoms.
inline std::set<std::uint64_t> zero_sum_lengths(
    const std::vector<std::vector<std::uint32_t>>& atoms,
    const std::vector<std::uint32_t>& s) {
  std::set<std::uint64_t> out;
  std::vector<std::uint32_t> rest = s;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
                                                          std::uint64_t used) {
    if (std::all_of(rest.begin(), rest.end(), [](auto x) { return x == 0; })) {
      out.insert(used);
      return;
    }
    if (i == atoms.size()) return;
    rec(i + 1, used);
    std::uint64_t copies = 0;
    for (;;) {
      bool fits = true;
      for (std::size_t c = 0; c < rest.size(); ++c)
        if (atoms[i][c] > rest[c]) fits = false;
      if (!fits) break;
      for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= atoms[i][c];
      ++copies;
      rec(i + 1, used + copies);
    }
    for (std::size_t c = 0; c < rest.size(); ++c)
      rest[c] += static_cast<std::uint32_t>(copies) * atoms[i][c];
  };
  rec(0, 0);
  return out;
}

}  // namespace oracle

namespace oracle {

// Sets y + n_1 L_1 + ... + n_t L_t whose cheapest witness in the realized
// coproduct has degree <= bound. The ideal of block b has degree min L_b, and
// the cheapest element with a unique factorization of length y is y copies
// of the lightest atom, of degree (k_1 - 1) / (k_r - 1) in a block with
// r >= 2 rows and 1 in a free block.
inline std::set<std::set<std::uint64_t>> predicted_system(
    const std::vector<std::set<std::uint64_t>>& targets,
    const lengthsmith::Rational& bound) {
  using lengthsmith::Rational;
  Rational lightest(1);
  for (const auto& t : targets) {
    if (t.size() < 2) continue;
    const auto k1 = static_cast<std::int64_t>(*t.begin());
    const auto kr = static_cast<std::int64_t>(*t.rbegin());
    lightest = std::min(lightest, Rational(k1 - 1, kr - 1));
  }
  std::set<std::set<std::uint64_t>> out;
  std::function<void(std::size_t, std::set<std::uint64_t>, Rational)> rec =
      [&](std::size_t b, std::set<std::uint64_t> acc, Rational cost) {
        if (cost > bound) return;
        if (b == targets.size()) {
          for (std::uint64_t y = 0;
               cost + lightest * static_cast<std::int64_t>(y) <= bound; ++y) {
            std::set<std::uint64_t> s;
            for (auto x : acc) s.insert(x + y);
            out.insert(s);
          }
          return;
        }
        const auto k1 = static_cast<std::int64_t>(*targets[b].begin());
        for (std::int64_t n = 0; cost + Rational(n * k1) <= bound; ++n)
          rec(b + 1, sumset(acc, n_fold(targets[b], static_cast<unsigned>(n))),
              cost + Rational(n * k1));
      };
  rec(0, {0}, Rational(0));
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  // Pascal's triangle, independent of the multiplicative formula.
  std::vector<std::vector<std::uint64_t>> c(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return k > n ? 0 : c[n][k];
}

}  // namespace oracle
