#include "lengthsmith/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lengthsmith/error.hpp"
#include "lengthsmith/families.hpp"
#include "lengthsmith/parallel.hpp"

namespace lengthsmith {

Length distance(const Factorization& a, const Factorization& b) {
  if (a.multiplicities.size() != b.multiplicities.size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "factorizations use different atom alphabets");
  }
  Length left = 0, right = 0;
  for (std::size_t i = 0; i < a.multiplicities.size(); ++i) {
    const auto common = std::min(a.multiplicities[i], b.multiplicities[i]);
    left += a.multiplicities[i] - common;
    right += b.multiplicities[i] - common;
  }
  return std::max(left, right);
}

Length catenary_degree(std::span<const Factorization> zs) {
  const std::size_t p = zs.size();
  if (p <= 1) return 0;
  struct Edge {
    Length d;
    std::size_t u, v;
  };
  std::vector<Edge> edges;
  edges.reserve(p * (p - 1) / 2);
  for (std::size_t u = 0; u < p; ++u)
    for (std::size_t v = u + 1; v < p; ++v)
      edges.push_back({distance(zs[u], zs[v]), u, v});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.d < y.d; });

  std::vector<std::size_t> parent(p);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = p;
  for (const auto& e : edges) {
    auto ru = find(e.u), rv = find(e.v);
    if (ru == rv) continue;
    parent[ru] = rv;
    if (--components == 1) return e.d;
  }
  return 0;  // unreachable: the complete graph is connected
}

Length catenary_element(const MonoidPresentation& monoid, const Element& v) {
  const auto zs = factorizations(monoid, v);
  return catenary_degree(zs);
}

Length catenary_bounded(const MonoidPresentation& monoid,
                        const Rational& bound) {
  const auto slice = enumerate_elements(monoid, bound);
  std::vector<Length> values(slice.size(), 0);
  parallel_chunks(slice.size(), [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      values[i] = catenary_element(monoid, slice[i]);
  });
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

SystemSlice monoid_slice(const MonoidPresentation& monoid,
                         const Rational& bound) {
  const auto elems = enumerate_elements(monoid, bound);
  std::vector<SetOfLengths> sets(elems.size());
  parallel_chunks(elems.size(), [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) sets[i] = lengths(monoid, elems[i]);
  });
  SystemSlice out;
  out.sets.insert(sets.begin(), sets.end());
  out.bound = bound;
  // An element whose lengths are all <= T has degree <= T * max atom degree.
  const Rational t = bound / monoid.max_atom_degree();
  out.complete_up_to =
      t < 0 ? 0 : static_cast<Length>(t.numerator() / t.denominator());
  return out;
}

DistanceSet delta_bounded(const MonoidPresentation& monoid,
                          const Rational& bound) {
  DistanceSet out;
  for (const auto& set : monoid_slice(monoid, bound).sets) {
    auto d = delta_set(set);
    out.insert(d.begin(), d.end());
  }
  return out;
}

SystemSlice zerosum_slice(const GroupSpec& spec, std::size_t bound) {
  SystemSlice out;
  out.sets = zs_system(spec, bound);
  out.bound = Rational(static_cast<std::int64_t>(bound));
  std::size_t longest = 1;
  for (const auto& atom : minimal_atoms(spec))
    longest = std::max(longest, atom.length());
  out.complete_up_to = bound / longest;
  return out;
}

GeneratorReport irreducible_length_sets(const SystemSlice& slice) {
  const SetOfLengths zero;
  std::map<std::pair<Length, Length>, std::vector<const SetOfLengths*>> index;
  for (const auto& s : slice.sets)
    if (s != zero) index[{s.min(), s.max()}].push_back(&s);

  GeneratorReport report;
  for (const auto& target : slice.sets) {
    if (target == zero) continue;
    bool split = false;
    for (auto it = slice.sets.begin(); it != slice.sets.end() && !split; ++it) {
      const auto& a = *it;
      if (a == zero || a.min() > target.min() || a.max() > target.max())
        continue;
      auto hit = index.find({target.min() - a.min(), target.max() - a.max()});
      if (hit == index.end()) continue;
      for (const SetOfLengths* b : hit->second) {
        if (*b == zero) continue;
        if (sumset(a, *b) == target) {
          split = true;
          break;
        }
      }
    }
    if (!split) report.generators.push_back(target);
  }

  FamilyPresentation family;
  try {
    family = FamilyPresentation::validate(report.generators);
  } catch (const Error&) {
    report.generated = false;
    report.ungenerated.assign(report.generators.begin(),
                              report.generators.end());
    return report;
  }
  for (const auto& s : slice.sets)
    if (!contains(family, s)) report.ungenerated.push_back(s);
  report.generated = report.ungenerated.empty();
  return report;
}

ComparisonReport compare_systems(const SystemSlice& a, const SystemSlice& b) {
  ComparisonReport report;
  report.compared_up_to = std::min(a.complete_up_to, b.complete_up_to);
  report.trim_rule =
      "sets with max <= " + std::to_string(report.compared_up_to) +
      " (the smaller complete_up_to of the two slices)";
  auto keep = [&](const SetOfLengths& s) {
    return s.max() <= report.compared_up_to;
  };
  for (const auto& s : a.sets)
    if (keep(s) && !b.sets.count(s)) report.only_in_a.push_back(s);
  for (const auto& s : b.sets)
    if (keep(s) && !a.sets.count(s)) report.only_in_b.push_back(s);
  report.agree = report.only_in_a.empty() && report.only_in_b.empty();
  return report;
}

}  // namespace lengthsmith
