#pragma once

// Additively closed families of sets of lengths presented by finitely many
// indecomposable generators. The members {0} and {1} are always implicit, so
// every member has the form {y} + n_1*G_1 + ... + n_t*G_t (sumset sense).

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "lengthsmith/lengthsets.hpp"

namespace lengthsmith {

class FamilyPresentation {
 public:
  /// The family of all singletons.
  FamilyPresentation() = default;

  /// Validates and normalizes a generator list. {0} and {1} are accepted and
  /// dropped since they are implicit members. Throws GeneratorNotInNGe2,
  /// DecomposableSingleton or DuplicateGenerator.
  static FamilyPresentation validate(const std::vector<SetOfLengths>& gens);

  /// Nontrivial generators in the order given.
  const std::vector<SetOfLengths>& generators() const noexcept {
    return generators_;
  }

 private:
  std::vector<SetOfLengths> generators_;
};

/// Witness for L = {offset} + sum_i multiplicities[i] * G_i.
struct MembershipWitness {
  Length offset = 0;
  std::vector<Length> multiplicities;

  friend bool operator==(const MembershipWitness&,
                         const MembershipWitness&) = default;
};

/// Rebuilds the set a witness describes.
SetOfLengths assemble(const FamilyPresentation& family,
                      const MembershipWitness& witness);

/// All members with max <= bound, {0} included.
std::set<SetOfLengths> enumerate(const FamilyPresentation& family,
                                 Length bound);

/// Exhaustive membership search in lexicographic order of the multiplicity
/// vector; an empty result proves non-membership.
std::optional<MembershipWitness> contains(const FamilyPresentation& family,
                                          const SetOfLengths& set);

/// Unordered pairs (a, b), a <= b, of members other than {0} with a + b == set.
/// Throws NotAMember.
std::vector<std::pair<SetOfLengths, SetOfLengths>> decompositions(
    const FamilyPresentation& family, const SetOfLengths& set);

/// Throws NotAMember.
bool is_indecomposable(const FamilyPresentation& family,
                       const SetOfLengths& set);

}  // namespace lengthsmith
