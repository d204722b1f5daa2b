#pragma once

// Factorization distances, catenary degrees, distance sets and bounded
// slices of systems of sets of lengths.

#include <set>
#include <span>
#include <string>
#include <vector>

#include "lengthsmith/lengthsets.hpp"
#include "lengthsmith/monoid.hpp"
#include "lengthsmith/rational.hpp"
#include "lengthsmith/zerosum.hpp"

namespace lengthsmith {

/// A finite part of a system of sets of lengths. Every set of the full system
/// whose maximum is at most complete_up_to is guaranteed to be present.
struct SystemSlice {
  std::set<SetOfLengths> sets;
  Rational bound;
  Length complete_up_to = 0;
};

/// Larger residual length after cancelling the common part. Throws
/// AlphabetMismatch.
Length distance(const Factorization& a, const Factorization& b);

/// Least N making the graph on zs with edges {d <= N} connected; 0 for a
/// single factorization.
Length catenary_degree(std::span<const Factorization> zs);

/// Throws NotAnElement.
Length catenary_element(const MonoidPresentation& monoid, const Element& v);

/// max catenary_element over the slice of degree <= bound; a lower bound for
/// the catenary degree of the monoid.
Length catenary_bounded(const MonoidPresentation& monoid,
                        const Rational& bound);

DistanceSet delta_bounded(const MonoidPresentation& monoid,
                          const Rational& bound);

/// complete_up_to = floor(bound / largest atom degree).
SystemSlice monoid_slice(const MonoidPresentation& monoid,
                         const Rational& bound);

/// complete_up_to = floor(bound / longest atom).
SystemSlice zerosum_slice(const GroupSpec& spec, std::size_t bound);

struct GeneratorReport {
  std::vector<SetOfLengths> generators;
  bool generated = false;
  /// Members not expressible over the generators.
  std::vector<SetOfLengths> ungenerated;
};

GeneratorReport irreducible_length_sets(const SystemSlice& slice);

struct ComparisonReport {
  bool agree = true;
  Length compared_up_to = 0;
  std::vector<SetOfLengths> only_in_a;
  std::vector<SetOfLengths> only_in_b;
  std::string trim_rule;
};

/// Compares the sets with max <= min(a.complete_up_to, b.complete_up_to).
ComparisonReport compare_systems(const SystemSlice& a, const SystemSlice& b);

}  // namespace lengthsmith
