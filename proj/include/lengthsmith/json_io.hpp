#pragma once

// JSON encodings of every persisted or printed object. All output goes
// through nlohmann::json, whose object keys are sorted, so dumps are
// canonical.

#include <optional>
#include <set>
#include <string>

#include "json.hpp"
#include "lengthsmith/families.hpp"
#include "lengthsmith/invariants.hpp"
#include "lengthsmith/lengthsets.hpp"
#include "lengthsmith/monoid.hpp"
#include "lengthsmith/realization.hpp"
#include "lengthsmith/zerosum.hpp"

namespace lengthsmith {

using Json = nlohmann::json;

// Sets of lengths: a sorted integer array such as [2,3].
Json as_json(const SetOfLengths& set);
SetOfLengths set_from_json(const Json& j);
Json as_json(const std::set<SetOfLengths>& sets);
Json as_json(const DistanceSet& set);

// Families: {"generators": [[2,3],[2,5]]}.
Json as_json(const FamilyPresentation& family);
FamilyPresentation family_from_json(const Json& j);
Json as_json(const MembershipWitness& witness);

// Monoid file: {"dim", "atoms": [{"label", "vector"}], "grading": ["p/q"],
// "meta"}.
Json as_json(const MonoidPresentation& monoid, const Json& meta = Json::object());
MonoidPresentation monoid_from_json(const Json& j);

/// Monoid file for a realized monoid. Single targets record
/// meta.construction = "prop3.1" and meta.target_set; families record
/// "coproduct" with the generator list.
Json as_json(const RealizedMonoid& realized);

/// The realized structure recorded in a monoid file's meta, rebuilt and
/// checked against the stored presentation. Empty when the file carries no
/// construction. Throws InvalidInput on a mismatch.
std::optional<RealizedMonoid> realized_from_json(const Json& j);

// Factorizations: {"label": multiplicity} with zero entries omitted.
Json as_json(const MonoidPresentation& monoid, const Factorization& z);
Factorization factorization_from_json(const MonoidPresentation& monoid,
                                      const Json& j);

Json as_json(const VerificationReport& report);

// Zero-sum: {"group": [3], "g0": [[1],[2]]}; sequences {"[1]": 3}.
Json as_json(const GroupSpec& spec);
GroupSpec group_from_json(const Json& j);
Json as_json(const GroupSpec& spec, const ZeroSumSequence& s);
ZeroSumSequence sequence_from_json(const GroupSpec& spec, const Json& j);

// Slices and reports.
Json as_json(const SystemSlice& slice);
SystemSlice slice_from_json(const Json& j);
Json as_json(const GeneratorReport& report);
Json as_json(const ComparisonReport& report);

/// Parses text, mapping parse errors to Error(kInvalidInput).
Json parse_json(const std::string& text);

}  // namespace lengthsmith
