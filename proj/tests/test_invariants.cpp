#include <random>

#include "doctest.h"
#include "lengthsmith/error.hpp"
#include "lengthsmith/families.hpp"
#include "lengthsmith/invariants.hpp"
#include "lengthsmith/realization.hpp"
#include "oracles.hpp"

using namespace lengthsmith;

namespace {

Factorization fz(std::vector<std::uint32_t> m) { return {std::move(m)}; }

MonoidPresentation free_monoid(std::size_t n) {
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    Element e(n, 0);
    e[i] = 1;
    atoms.push_back({"e" + std::to_string(i + 1), e});
  }
  return MonoidPresentation::build(n, atoms);
}

}  // namespace

TEST_CASE("distance examples") {
  CHECK(distance(fz({1, 2, 0}), fz({1, 2, 0})) == 0);
  // a*b*c against a*d: residuals b*c and d.
  CHECK(distance(fz({1, 1, 1, 0}), fz({1, 0, 0, 1})) == 2);
  // u11*u12 against u21*u22*u23 in H({2,3}).
  CHECK(distance(fz({1, 1, 0, 0, 0}), fz({0, 0, 1, 1, 1})) == 3);
  try {
    distance(fz({1}), fz({1, 0}));
    FAIL("expected AlphabetMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAlphabetMismatch);
  }
}

TEST_CASE("distance is a metric matching the word oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::uint32_t> mult(0, 3);
  auto draw = [&] {
    std::vector<std::uint32_t> m(4);
    for (auto& x : m) x = mult(rng);
    return fz(m);
  };
  for (int t = 0; t < 300; ++t) {
    auto a = draw(), b = draw(), c = draw();
    CHECK(distance(a, b) == oracle::distance(a, b));
    CHECK(distance(a, b) == distance(b, a));
    CHECK((distance(a, b) == 0) == (a == b));
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c));
    // Multiplying both sides by a common factor changes nothing.
    auto ac = a, bc = b;
    for (std::size_t i = 0; i < 4; ++i) {
      ac.multiplicities[i] += c.multiplicities[i];
      bc.multiplicities[i] += c.multiplicities[i];
    }
    CHECK(distance(ac, bc) == distance(a, b));
    CHECK(distance(a, b) >= (a.length() > b.length() ? a.length() - b.length()
                                                     : b.length() - a.length()));
  }
}

TEST_CASE("catenary_element") {
  auto r = realize_single({2, 3});
  const auto& m = r.presentation;
  CHECK(catenary_element(m, m.atom(0).vector) == 0);
  CHECK(catenary_element(m, r.ideal_generator()) == 3);
  CHECK(catenary_element(m, 2 * r.ideal_generator()) == 3);
  CHECK(catenary_element(m, 2 * r.ideal_generator()) ==
        oracle::catenary(factorizations(m, 2 * r.ideal_generator())));
  CHECK_THROWS_AS(catenary_element(m, Element{-1, 0, 0, 0}), Error);
  CHECK(catenary_degree(std::span<const Factorization>{}) == 0);
}

TEST_CASE("catenary_element agrees with the BFS oracle on whole slices") {
  for (const SetOfLengths& l :
       {SetOfLengths{2, 3}, SetOfLengths{3, 4}, SetOfLengths{2, 5}}) {
    auto r = realize_single(l);
    for (const auto& v : enumerate_elements(r.presentation, Rational(3)))
      CHECK(catenary_element(r.presentation, v) ==
            oracle::catenary(factorizations(r.presentation, v)));
  }
}

TEST_CASE("catenary_bounded") {
  CHECK(catenary_bounded(realize_single({2, 3}).presentation, Rational(2)) == 3);
  CHECK(catenary_bounded(realize_single({5}).presentation, Rational(4)) == 0);
  CHECK(catenary_bounded(realize_single({2, 5}).presentation, Rational(2)) == 5);
  CHECK(catenary_bounded(free_monoid(3), Rational(4)) == 0);
  auto m = realize_single({3, 4}).presentation;
  Length prev = 0;
  for (int b = 0; b <= 4; ++b) {
    auto c = catenary_bounded(m, Rational(b));
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("delta_bounded") {
  CHECK(delta_bounded(realize_single({2, 3}).presentation, Rational(3)) ==
        DistanceSet{1});
  CHECK(delta_bounded(realize_single({2, 5}).presentation, Rational(3)) ==
        DistanceSet{3});
  CHECK(delta_bounded(free_monoid(2), Rational(5)).empty());
}

TEST_CASE("catenary degree dominates 2 + max delta elementwise") {
  for (const SetOfLengths& l : {SetOfLengths{2, 3}, SetOfLengths{2, 5},
                                SetOfLengths{2, 3, 4}}) {
    auto r = realize_single(l);
    for (const auto& v : enumerate_elements(r.presentation, Rational(3))) {
      auto d = delta_set(lengths(r.presentation, v));
      if (d.empty()) continue;
      CHECK(catenary_element(r.presentation, v) >= 2 + *d.rbegin());
    }
  }
}

TEST_CASE("irreducible_length_sets") {
  auto single = irreducible_length_sets(
      monoid_slice(realize_single({2, 3}).presentation, Rational(3)));
  CHECK(single.generators == std::vector<SetOfLengths>{{1}, {2, 3}});
  CHECK(single.generated);
  CHECK(single.ungenerated.empty());

  auto free = irreducible_length_sets(monoid_slice(free_monoid(2), Rational(4)));
  CHECK(free.generators == std::vector<SetOfLengths>{{1}});
  CHECK(free.generated);

  auto family = FamilyPresentation::validate({{2, 3}, {2, 5}});
  auto report = irreducible_length_sets(
      monoid_slice(realize_family(family).presentation, Rational(3)));
  CHECK(report.generators ==
        std::vector<SetOfLengths>{{1}, {2, 3}, {2, 5}});
  CHECK(report.generated);
}

TEST_CASE("monoid_slice completeness bound") {
  auto m = realize_single({2, 3}).presentation;
  auto slice = monoid_slice(m, Rational(3));
  CHECK(slice.complete_up_to == 3);
  CHECK(slice.sets.count({2, 3}) == 1);
  CHECK(slice.sets.count({0}) == 1);
}

TEST_CASE("compare_systems") {
  auto h = monoid_slice(realize_single({2, 3}).presentation, Rational(4));
  auto self = compare_systems(h, h);
  CHECK(self.agree);
  CHECK(self.only_in_a.empty());

  // Both are half-factorial.
  auto c2 = zerosum_slice(GroupSpec::build({2}, {{0}, {1}}), 8);
  auto free = monoid_slice(free_monoid(2), Rational(5));
  auto half = compare_systems(c2, free);
  CHECK(half.agree);
  CHECK(half.compared_up_to == std::min(c2.complete_up_to, free.complete_up_to));

  auto h25 = monoid_slice(realize_single({2, 5}).presentation, Rational(3));
  auto diff = compare_systems(h, h25);
  CHECK_FALSE(diff.agree);
  CHECK(std::find(diff.only_in_a.begin(), diff.only_in_a.end(),
                  SetOfLengths{2, 3}) != diff.only_in_a.end());
  // {2,5} has max 5, beyond the common completeness bound.
  CHECK(diff.compared_up_to == 3);
  CHECK(std::find(diff.only_in_b.begin(), diff.only_in_b.end(),
                  SetOfLengths{2, 5}) == diff.only_in_b.end());
  CHECK_FALSE(diff.trim_rule.empty());
}

TEST_CASE("C_3 with g0={1,2} has the same system as H({2,3})") {
  // Both systems consist of the sets y + [2k, 3k].
  auto zs = zerosum_slice(GroupSpec::build({3}, {{1}, {2}}), 12);
  auto h = monoid_slice(realize_single({2, 3}).presentation, Rational(4));
  auto report = compare_systems(zs, h);
  CHECK(report.agree);
  CHECK(report.compared_up_to == 4);
  auto oracle_sets = oracle::predicted_system({{2, 3}}, 4);
  for (const auto& s : zs.sets)
    if (s.max() <= 4)
      CHECK(oracle_sets.count(std::set<std::uint64_t>(s.begin(), s.end())) == 1);
}
