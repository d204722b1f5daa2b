#pragma once

// Finite subsets of N_0 and the additive operations on them: sumsets,
// iterated sumsets, dilations and successive-distance sets.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace lengthsmith {

using Length = std::uint64_t;

/// A non-empty finite set of non-negative integers, kept sorted and free of
/// duplicates so that equality is plain vector equality.
class SetOfLengths {
 public:
  /// The identity for sumset, {0}.
  SetOfLengths() : elems_{0} {}
  SetOfLengths(std::initializer_list<Length> elems);

  /// Sorts and deduplicates. Throws Error(kEmptySet) on empty input.
  static SetOfLengths from_unsorted(std::vector<Length> elems);
  static SetOfLengths singleton(Length value) { return from_sorted({value}); }

  std::span<const Length> elems() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Length min() const noexcept { return elems_.front(); }
  Length max() const noexcept { return elems_.back(); }
  bool is_singleton() const noexcept { return elems_.size() == 1; }
  bool contains(Length value) const;
  bool is_subset_of(const SetOfLengths& other) const;

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Compact form such as "{2,3,5}".
  std::string to_string() const;

  friend bool operator==(const SetOfLengths&, const SetOfLengths&) = default;
  friend auto operator<=>(const SetOfLengths& a, const SetOfLengths& b) {
    return a.elems_ <=> b.elems_;
  }

 private:
  static SetOfLengths from_sorted(std::vector<Length> elems);

  std::vector<Length> elems_;
};

/// Distances are positive integers; the empty set is a valid value.
using DistanceSet = std::set<Length>;

SetOfLengths sumset(const SetOfLengths& a, const SetOfLengths& b);

/// n-fold sumset; {0} when n == 0.
SetOfLengths n_fold_sumset(const SetOfLengths& set, Length n);

/// {n*a : a in set}.
SetOfLengths dilate(const SetOfLengths& set, Length n);

/// Successive differences; empty for singletons.
DistanceSet delta_set(const SetOfLengths& set);

}  // namespace lengthsmith
