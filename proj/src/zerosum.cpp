#include "lengthsmith/zerosum.hpp"

#include <algorithm>
#include <bitset>
#include <functional>
#include <numeric>

#include "lengthsmith/error.hpp"

namespace lengthsmith {

GroupSpec GroupSpec::build(std::vector<std::int64_t> cyclic_orders,
                           std::vector<GroupElement> g0,
                           std::uint64_t order_cap) {
  GroupSpec spec;
  std::uint64_t order = 1;
  for (auto n : cyclic_orders) {
    if (n < 2) {
      throw Error(ErrorCode::kInvalidInput, "cyclic orders must be >= 2");
    }
    order *= static_cast<std::uint64_t>(n);
    if (order > order_cap) {
      throw Error(ErrorCode::kGroupTooLarge,
                  "group order exceeds the cap of " + std::to_string(order_cap));
    }
  }
  spec.orders_ = std::move(cyclic_orders);
  if (g0.empty()) {
    throw Error(ErrorCode::kInvalidInput, "g0 must be non-empty");
  }
  for (auto& g : g0) {
    if (g.size() != spec.orders_.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "group element has the wrong number of components");
    }
    for (std::size_t i = 0; i < g.size(); ++i)
      g[i] = ((g[i] % spec.orders_[i]) + spec.orders_[i]) % spec.orders_[i];
  }
  std::sort(g0.begin(), g0.end());
  if (std::adjacent_find(g0.begin(), g0.end()) != g0.end()) {
    throw Error(ErrorCode::kInvalidInput, "g0 lists an element twice");
  }
  spec.g0_ = std::move(g0);
  return spec;
}

std::uint64_t GroupSpec::order() const {
  std::uint64_t order = 1;
  for (auto n : orders_) order *= static_cast<std::uint64_t>(n);
  return order;
}

std::size_t GroupSpec::atom_length_cap() const {
  std::size_t cap = 1;
  for (auto n : orders_) cap += static_cast<std::size_t>(n - 1);
  return cap;
}

std::size_t GroupSpec::index_of(const GroupElement& g) const {
  auto it = std::lower_bound(g0_.begin(), g0_.end(), g);
  if (it == g0_.end() || *it != g) {
    throw Error(ErrorCode::kInvalidInput, "element is not in g0");
  }
  return static_cast<std::size_t>(it - g0_.begin());
}

std::size_t GroupSpec::encode(const GroupElement& g) const {
  std::size_t code = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    code = code * static_cast<std::size_t>(orders_[i]) +
           static_cast<std::size_t>(g[i]);
  return code;
}

GroupElement GroupSpec::decode(std::size_t code) const {
  GroupElement g(orders_.size());
  for (std::size_t c = orders_.size(); c-- > 0;) {
    const auto n = static_cast<std::size_t>(orders_[c]);
    g[c] = static_cast<std::int64_t>(code % n);
    code /= n;
  }
  return g;
}

GroupElement GroupSpec::add(const GroupElement& a,
                            const GroupElement& b) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = (a[i] + b[i]) % orders_[i];
  return out;
}

GroupElement GroupSpec::negate(const GroupElement& g) const {
  GroupElement out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i)
    out[i] = (orders_[i] - g[i]) % orders_[i];
  return out;
}

std::size_t ZeroSumSequence::length() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(),
                         std::size_t{0});
}

GroupElement sequence_sum(const GroupSpec& spec, const ZeroSumSequence& s) {
  if (s.multiplicities.size() != spec.g0().size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "sequence does not match g0");
  }
  GroupElement sum(spec.cyclic_orders().size(), 0);
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
    for (std::size_t c = 0; c < sum.size(); ++c)
      sum[c] = (sum[c] + static_cast<std::int64_t>(s.multiplicities[i]) *
                             spec.g0()[i][c]) %
               spec.cyclic_orders()[c];
  return sum;
}

bool is_zero_sum(const GroupSpec& spec, const ZeroSumSequence& s) {
  auto sum = sequence_sum(spec, s);
  return std::all_of(sum.begin(), sum.end(), [](auto x) { return x == 0; });
}

bool is_minimal_zero_sum(const GroupSpec& spec, const ZeroSumSequence& s) {
  const std::size_t len = s.length();
  if (len == 0 || !is_zero_sum(spec, s)) return false;
  // reach[g] holds the lengths of subsequences with sum g.
  constexpr std::size_t kMaxLen = 256;
  if (len >= kMaxLen) return false;
  std::vector<std::bitset<kMaxLen>> reach(spec.order());
  reach[0].set(0);
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i) {
    const auto& g = spec.g0()[i];
    for (std::uint32_t copy = 0; copy < s.multiplicities[i]; ++copy) {
      auto next = reach;
      for (std::size_t code = 0; code < reach.size(); ++code) {
        if (reach[code].none()) continue;
        next[spec.encode(spec.add(spec.decode(code), g))] |= reach[code] << 1;
      }
      reach = std::move(next);
    }
  }
  for (std::size_t l = 1; l < len; ++l)
    if (reach[0].test(l)) return false;
  return true;
}

std::vector<ZeroSumSequence> minimal_atoms(const GroupSpec& spec,
                                           std::size_t length_cap) {
  if (length_cap == 0) length_cap = spec.atom_length_cap();
  const std::size_t k = spec.g0().size();
  const std::size_t order = spec.order();
  std::set<ZeroSumSequence> atoms;

  // Depth-first search over zero-sum free sequences T in non-decreasing g0
  // index order. T extended by -sigma(T) is then a minimal zero-sum sequence.
  std::vector<std::size_t> code_to_index(order, k);
  for (std::size_t i = 0; i < k; ++i) code_to_index[spec.encode(spec.g0()[i])] = i;

  ZeroSumSequence cur{std::vector<std::uint32_t>(k, 0)};
  const GroupElement zero(spec.cyclic_orders().size(), 0);
  std::function<void(std::size_t, const GroupElement&, std::vector<char>&,
                     std::size_t)>
      dfs = [&](std::size_t first, const GroupElement& sum,
                std::vector<char>& sums, std::size_t len) {
        if (len > 0) {
          const auto closer = code_to_index[spec.encode(spec.negate(sum))];
          if (closer < k && len + 1 <= length_cap) {
            ++cur.multiplicities[closer];
            atoms.insert(cur);
            --cur.multiplicities[closer];
          }
        }
        if (len + 1 >= length_cap) return;
        for (std::size_t i = first; i < k; ++i) {
          const auto& g = spec.g0()[i];
          if (g == zero) continue;
          // New subsequence sums: g itself and s + g for every old sum s.
          std::vector<char> next = sums;
          next[spec.encode(g)] = 1;
          for (std::size_t code = 0; code < order; ++code)
            if (sums[code]) next[spec.encode(spec.add(spec.decode(code), g))] = 1;
          if (next[spec.encode(zero)]) continue;
          ++cur.multiplicities[i];
          dfs(i, spec.add(sum, g), next, len + 1);
          --cur.multiplicities[i];
        }
      };
  // The sequence consisting of 0 alone is an atom when 0 is in g0.
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.g0()[i] == zero) {
      ZeroSumSequence z{std::vector<std::uint32_t>(k, 0)};
      z.multiplicities[i] = 1;
      atoms.insert(z);
    }
  }
  std::vector<char> sums(order, 0);
  dfs(0, zero, sums, 0);
  return {atoms.begin(), atoms.end()};
}

namespace {

class LengthSolver {
 public:
  LengthSolver(const GroupSpec& spec) : atoms_(minimal_atoms(spec)) {}

  SetOfLengths solve(const ZeroSumSequence& s) {
    if (s.length() == 0) return SetOfLengths{0};
    if (auto it = memo_.find(s.multiplicities); it != memo_.end())
      return it->second;
    // Every factorization has an atom containing the first present element.
    std::size_t first = 0;
    while (s.multiplicities[first] == 0) ++first;
    std::vector<Length> out;
    for (const auto& atom : atoms_) {
      if (atom.multiplicities[first] == 0) continue;
      bool divides = true;
      for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
        if (atom.multiplicities[i] > s.multiplicities[i]) divides = false;
      if (!divides) continue;
      ZeroSumSequence rest = s;
      for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
        rest.multiplicities[i] -= atom.multiplicities[i];
      for (Length l : solve(rest)) out.push_back(l + 1);
    }
    auto result = SetOfLengths::from_unsorted(std::move(out));
    memo_.emplace(s.multiplicities, result);
    return result;
  }

 private:
  std::vector<ZeroSumSequence> atoms_;
  std::map<std::vector<std::uint32_t>, SetOfLengths> memo_;
};

void for_each_sequence(std::size_t k, std::size_t bound,
                       const std::function<void(const ZeroSumSequence&)>& f) {
  ZeroSumSequence cur{std::vector<std::uint32_t>(k, 0)};
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i == k) {
      f(cur);
      return;
    }
    for (std::size_t m = 0; m <= left; ++m) {
      cur.multiplicities[i] = static_cast<std::uint32_t>(m);
      rec(i + 1, left - m);
    }
    cur.multiplicities[i] = 0;
  };
  rec(0, bound);
}

}  // namespace

SetOfLengths zs_lengths(const GroupSpec& spec, const ZeroSumSequence& s) {
  if (!is_zero_sum(spec, s)) {
    throw Error(ErrorCode::kNotZeroSum, "sequence does not sum to zero");
  }
  return LengthSolver(spec).solve(s);
}

std::set<SetOfLengths> zs_system(const GroupSpec& spec, std::size_t bound) {
  LengthSolver solver(spec);
  std::set<SetOfLengths> out;
  for_each_sequence(spec.g0().size(), bound, [&](const ZeroSumSequence& s) {
    if (is_zero_sum(spec, s)) out.insert(solver.solve(s));
  });
  return out;
}

}  // namespace lengthsmith
