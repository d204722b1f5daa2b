#pragma once

// Explicit monoids whose systems of sets of lengths are prescribed.
//
// For L = {k_1 < ... < k_r} subset N>=2 the monoid H_L lives in Z^d with
// d = k_1 + sum_{i>=2} (k_i - 1). The first k_1 unit vectors are the atoms
// u_{1,1..k_1}; each further i owns k_i - 1 fresh unit vectors u_{i,1..k_i-1}
// and one closing atom
//
//     u_{i,k_i} = (u_{1,1} + ... + u_{1,k_1}) - (u_{i,1} + ... + u_{i,k_i-1}),
//
// so every row of atoms sums to the same element, the ideal generator. Every
// element is n * ideal + b with b off the ideal, b has a unique
// factorization, and L(n * ideal + b) = n L + L(b).
//
// A finite family with generators A_1..A_t is realized by the coproduct of
// the H_{A_i} on disjoint coordinate blocks.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lengthsmith/families.hpp"
#include "lengthsmith/lengthsets.hpp"
#include "lengthsmith/monoid.hpp"

namespace lengthsmith {

struct RealizedBlock {
  SetOfLengths target_set;
  std::string label_prefix;
  std::size_t offset = 0;  // first coordinate of the block
  std::size_t width = 0;
  /// (i, j) -> label of u_{i,j}, both 1-based.
  std::map<std::pair<std::size_t, std::size_t>, std::string> atom_index;
  /// u_{1,1} + ... + u_{1,k_1} in ambient coordinates.
  Element ideal_generator;

  std::size_t rows() const { return target_set.size(); }
};

struct RealizedMonoid {
  MonoidPresentation presentation;
  std::vector<RealizedBlock> blocks;

  /// Single-block accessors; throw InvalidInput on a coproduct.
  const RealizedBlock& single_block() const;
  const SetOfLengths& target_set() const { return single_block().target_set; }
  const Element& ideal_generator() const {
    return single_block().ideal_generator;
  }
};

/// Throws SetNotInNGe2.
RealizedMonoid realize_single(const SetOfLengths& target);

/// One block per generator; the free monoid of rank one when there are none.
/// With two or more blocks every label is prefixed "A<b>." (b 1-based).
RealizedMonoid realize_family(const FamilyPresentation& family);

/// { L(v) : v in the slice of degree <= bound }.
std::set<SetOfLengths> system_of_lengths(const RealizedMonoid& realized,
                                         const Rational& bound);

/// 3 * the largest atom degree.
Rational default_verification_bound(const RealizedMonoid& realized);

struct Counterexample {
  std::string check;
  Element element;
  std::string detail;
};

struct CheckTally {
  std::size_t checked = 0;
  std::vector<Counterexample> failures;
  bool passed() const { return failures.empty(); }
};

struct RootClosureTally {
  bool skipped = false;
  std::int64_t radius = 0;
  std::vector<std::int64_t> multipliers;
  std::size_t checked = 0;
  std::vector<Element> violations;
  bool passed() const { return violations.empty(); }
};

struct VerificationOptions {
  std::optional<Rational> bound;
  /// Ideal powers n = 0..max_ideal_power are checked against the
  /// C(n + r - 1, r - 1) factorization count independently of the slice.
  std::uint32_t max_ideal_power = 3;
  /// Root-closure box radius; shrunk (down to 1) or skipped when the box
  /// would exceed max_box_points.
  std::int64_t box_radius = 2;
  std::vector<std::int64_t> box_multipliers{2, 3};
  std::size_t max_box_points = 400000;
  std::uint64_t seed = 0;
  std::size_t superadditivity_samples = 200;
};

struct VerificationReport {
  Rational bound;
  std::size_t slice_size = 0;
  CheckTally property_a;        // equal row products
  CheckTally property_b;        // unique factorization off the ideal
  CheckTally property_c;        // L(v) = nL + L(b) and the factorization set
  CheckTally ideal_powers;      // |Z(n * ideal)| = C(n + r - 1, r - 1)
  CheckTally superadditivity;   // L(u) + L(v) subset L(u + v), sampled
  RootClosureTally root_closure;

  bool passed() const;
  /// First failure, if any.
  std::optional<Counterexample> first_failure() const;
};

VerificationReport verify_properties(const RealizedMonoid& realized,
                                     const VerificationOptions& options = {});

/// Like verify_properties but throws VerificationFailure naming the first
/// counterexample.
VerificationReport ensure_properties(const RealizedMonoid& realized,
                                     const VerificationOptions& options = {});

/// Decomposition v = sum_b n_b * ideal_b + rest with every n_b maximal.
struct IdealDecomposition {
  std::vector<std::uint32_t> powers;
  Element rest;
};

/// Throws NotAnElement.
IdealDecomposition split_off_ideal(const RealizedMonoid& realized,
                                   const Element& v);

}  // namespace lengthsmith
