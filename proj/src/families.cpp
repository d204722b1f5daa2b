#include "lengthsmith/families.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "lengthsmith/error.hpp"

namespace lengthsmith {

FamilyPresentation FamilyPresentation::validate(
    const std::vector<SetOfLengths>& gens) {
  const SetOfLengths zero{0};
  const SetOfLengths one{1};
  FamilyPresentation out;
  std::set<SetOfLengths> seen;
  for (const auto& gen : gens) {
    if (!seen.insert(gen).second) {
      throw Error(ErrorCode::kDuplicateGenerator,
                  "generator " + gen.to_string() + " listed twice");
    }
    if (gen == zero || gen == one) continue;
    if (gen.min() < 2) {
      throw Error(ErrorCode::kGeneratorNotInNGe2,
                  "generator " + gen.to_string() +
                      " must be {1} or lie in N>=2");
    }
    if (gen.is_singleton()) {
      throw Error(ErrorCode::kDecomposableSingleton,
                  "generator " + gen.to_string() + " equals {1} + {" +
                      std::to_string(gen.min() - 1) + "}");
    }
    out.generators_.push_back(gen);
  }
  return out;
}

SetOfLengths assemble(const FamilyPresentation& family,
                      const MembershipWitness& witness) {
  const auto& gens = family.generators();
  if (witness.multiplicities.size() != gens.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "witness does not match the family's generator count");
  }
  SetOfLengths out = SetOfLengths::singleton(witness.offset);
  for (std::size_t i = 0; i < gens.size(); ++i)
    out = sumset(out, n_fold_sumset(gens[i], witness.multiplicities[i]));
  return out;
}

std::set<SetOfLengths> enumerate(const FamilyPresentation& family,
                                 Length bound) {
  std::set<SetOfLengths> members;
  std::deque<SetOfLengths> queue;
  for (Length y = 0; y <= bound; ++y) {
    auto single = SetOfLengths::singleton(y);
    members.insert(single);
    queue.push_back(single);
  }
  // Closing the singletons under "+ G_i" reaches every {y} + sum n_i G_i.
  while (!queue.empty()) {
    SetOfLengths cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& gen : family.generators()) {
      if (cur.max() + gen.max() > bound) continue;
      auto next = sumset(cur, gen);
      if (members.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return members;
}

namespace {

bool search(const FamilyPresentation& family, const SetOfLengths& target,
            std::size_t index, Length used_min, MembershipWitness& witness) {
  const auto& gens = family.generators();
  if (index == gens.size()) {
    witness.offset = target.min() - used_min;
    return assemble(family, witness) == target;
  }
  const Length step = gens[index].min();
  for (Length n = 0; used_min + n * step <= target.min(); ++n) {
    witness.multiplicities[index] = n;
    if (search(family, target, index + 1, used_min + n * step, witness))
      return true;
  }
  witness.multiplicities[index] = 0;
  return false;
}

}  // namespace

std::optional<MembershipWitness> contains(const FamilyPresentation& family,
                                          const SetOfLengths& set) {
  MembershipWitness witness;
  witness.multiplicities.assign(family.generators().size(), 0);
  if (search(family, set, 0, 0, witness)) return witness;
  return std::nullopt;
}

std::vector<std::pair<SetOfLengths, SetOfLengths>> decompositions(
    const FamilyPresentation& family, const SetOfLengths& set) {
  if (!contains(family, set)) {
    throw Error(ErrorCode::kNotAMember,
                set.to_string() + " is not a member of the family");
  }
  const SetOfLengths zero;
  std::map<std::pair<Length, Length>, std::vector<SetOfLengths>> by_extremes;
  std::vector<SetOfLengths> pool;
  for (const auto& member : enumerate(family, set.max())) {
    if (member == zero) continue;
    by_extremes[{member.min(), member.max()}].push_back(member);
    pool.push_back(member);
  }
  std::vector<std::pair<SetOfLengths, SetOfLengths>> out;
  for (const auto& first : pool) {
    if (first.min() > set.min() || first.max() > set.max()) continue;
    auto it = by_extremes.find(
        {set.min() - first.min(), set.max() - first.max()});
    if (it == by_extremes.end()) continue;
    for (const auto& second : it->second) {
      if (second < first) continue;
      if (sumset(first, second) == set) out.emplace_back(first, second);
    }
  }
  return out;
}

bool is_indecomposable(const FamilyPresentation& family,
                       const SetOfLengths& set) {
  auto parts = decompositions(family, set);
  return parts.empty() && set != SetOfLengths{};
}

}  // namespace lengthsmith
