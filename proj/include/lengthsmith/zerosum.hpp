#pragma once

// Monoids of zero-sum sequences B(G_0) over a finite abelian group
// G = Z/n_1 x ... x Z/n_k, used as an independently built Krull monoid to
// cross-check systems of sets of lengths.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lengthsmith/lengthsets.hpp"

namespace lengthsmith {

using GroupElement = std::vector<std::int64_t>;

class GroupSpec {
 public:
  static constexpr std::uint64_t kDefaultOrderCap = 64;

  /// Reduces every element mod its orders, sorts g0 lexicographically and
  /// checks it for duplicates. An empty order list is the trivial group.
  /// Throws InvalidInput or GroupTooLarge.
  static GroupSpec build(std::vector<std::int64_t> cyclic_orders,
                         std::vector<GroupElement> g0,
                         std::uint64_t order_cap = kDefaultOrderCap);

  const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
  const std::vector<GroupElement>& g0() const { return g0_; }
  std::uint64_t order() const;
  /// 1 + sum (n_i - 1); an upper bound for the Davenport constant.
  std::size_t atom_length_cap() const;

  /// Index into g0; throws InvalidInput when absent.
  std::size_t index_of(const GroupElement& g) const;
  /// Mixed-radix code of a reduced element, in [0, order()).
  std::size_t encode(const GroupElement& g) const;
  GroupElement decode(std::size_t code) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& g) const;

 private:
  std::vector<std::int64_t> orders_;
  std::vector<GroupElement> g0_;
};

/// Multiplicity of each element of g0, indexed like GroupSpec::g0().
struct ZeroSumSequence {
  std::vector<std::uint32_t> multiplicities;

  std::size_t length() const;
  friend bool operator==(const ZeroSumSequence&,
                         const ZeroSumSequence&) = default;
  friend auto operator<=>(const ZeroSumSequence&,
                          const ZeroSumSequence&) = default;
};

GroupElement sequence_sum(const GroupSpec& spec, const ZeroSumSequence& s);
bool is_zero_sum(const GroupSpec& spec, const ZeroSumSequence& s);
/// No non-empty proper zero-sum subsequence (and zero-sum, non-empty).
bool is_minimal_zero_sum(const GroupSpec& spec, const ZeroSumSequence& s);

/// Minimal zero-sum sequences of length <= length_cap (defaults to
/// atom_length_cap()), in lexicographic order of multiplicity vectors.
std::vector<ZeroSumSequence> minimal_atoms(const GroupSpec& spec,
                                           std::size_t length_cap = 0);

/// Throws NotZeroSum.
SetOfLengths zs_lengths(const GroupSpec& spec, const ZeroSumSequence& s);

/// { L(S) : S zero-sum, |S| <= bound }.
std::set<SetOfLengths> zs_system(const GroupSpec& spec, std::size_t bound);

}  // namespace lengthsmith
