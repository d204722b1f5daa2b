// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lengthsmith/families.hpp"
#include "lengthsmith/invariants.hpp"
#include "lengthsmith/realization.hpp"
#include "lengthsmith/zerosum.hpp"
#include "oracles.hpp"

using namespace lengthsmith;

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<SetOfLengths> kCorpus{{2},    {2, 3},    {2, 5},
                                        {3, 4}, {2, 3, 4}, {3, 5, 7}};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", t);
  return buf;
}

std::set<std::uint64_t> plain(const SetOfLengths& s) { return {s.begin(), s.end()}; }

std::set<std::set<std::uint64_t>> plain(const std::set<SetOfLengths>& sets) {
  std::set<std::set<std::uint64_t>> out;
  for (const auto& s : sets) out.insert(plain(s));
  return out;
}

// Collects the first few problems of a criterion.
class Notes {
 public:
  void add(const std::string& note) {
    ++count_;
    if (shown_.size() < 3) shown_.push_back(note);
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << count_ << " problem(s)";
    for (const auto& s : shown_) out << "; " << s;
    return out.str();
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> shown_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome{false, ""};
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  if (!outcome.pass) ++failures;
  std::printf("%s  C%-2d %-40s %7.2fs  %s\n", outcome.pass ? "PASS" : "FAIL", id,
              title.c_str(), seconds_since(start), outcome.detail.c_str());
  std::fflush(stdout);
}

bool ideal_divides(const RealizedMonoid& r, const Element& v) {
  return is_element(r.presentation, v - r.ideal_generator());
}

// Atom vectors of row i of a single-set realization.
Element row_sum(const RealizedMonoid& r, std::size_t i) {
  Element sum(r.presentation.dim(), 0);
  for (const auto& [ij, label] : r.single_block().atom_index)
    if (ij.first == i)
      sum = sum + r.presentation.atom(r.presentation.atom_index(label)).vector;
  return sum;
}

Outcome realization_correctness() {
  const auto start = Clock::now();
  Notes notes;
  for (const auto& l : kCorpus) {
    auto r = realize_single(l);
    const auto first = row_sum(r, 1);
    for (std::size_t i = 2; i <= l.size(); ++i)
      if (row_sum(r, i) != first)
        notes.add(l.to_string() + " row " + std::to_string(i));
  }
  const double t = seconds_since(start);
  if (t >= 1.0) notes.add("took " + fmt_seconds(t) + ", limit 1s");
  return {notes.empty(), notes.empty() ? "6 corpus sets, all rows equal"
                                       : notes.summary()};
}

Outcome unique_off_ideal() {
  Notes notes;
  std::size_t checked = 0;
  double slowest = 0;
  for (const auto& l : kCorpus) {
    const auto start = Clock::now();
    auto r = realize_single(l);
    for (const auto& v : enumerate_elements(r.presentation, Rational(3))) {
      if (ideal_divides(r, v)) continue;
      ++checked;
      const auto n = factorizations(r.presentation, v).size();
      if (n != 1)
        notes.add(l.to_string() + ": " + std::to_string(n) + " factorizations");
    }
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    if (t >= 30.0) notes.add(l.to_string() + " took " + fmt_seconds(t));
  }
  return {notes.empty(),
          notes.empty() ? std::to_string(checked) +
                              " elements off the ideal, slowest entry " +
                              fmt_seconds(slowest)
                        : notes.summary()};
}

Outcome length_formula() {
  Notes notes;
  std::size_t checked = 0;
  for (const auto& l : kCorpus) {
    auto r = realize_single(l);
    for (const auto& v : enumerate_elements(r.presentation, Rational(3))) {
      ++checked;
      // Strip ideal copies one at a time, independently of split_off_ideal.
      std::uint64_t n = 0;
      Element rest = v;
      while (ideal_divides(r, rest)) {
        rest = rest - r.ideal_generator();
        ++n;
      }
      const auto split = split_off_ideal(r, v);
      if (split.powers.front() != n || split.rest != rest)
        notes.add(l.to_string() + ": split_off_ideal disagrees");
      auto want = oracle::sumset(oracle::n_fold(plain(l), static_cast<unsigned>(n)),
                                 plain(lengths(r.presentation, rest)));
      if (plain(lengths(r.presentation, v)) != want)
        notes.add(l.to_string() + ": lengths formula");
    }
    for (std::uint64_t n = 0; n <= 3; ++n) {
      const auto count =
          factorizations(r.presentation,
                         static_cast<std::int64_t>(n) * r.ideal_generator())
              .size();
      const auto want = oracle::binomial(n + l.size() - 1, l.size() - 1);
      if (count != want)
        notes.add(l.to_string() + " n=" + std::to_string(n) + ": |Z| " +
                  std::to_string(count) + " vs " + std::to_string(want));
    }
  }
  return {notes.empty(), notes.empty()
                             ? std::to_string(checked) +
                                   " elements, ideal powers n<=3 counted"
                             : notes.summary()};
}

Outcome catenary() {
  Notes notes;
  std::ostringstream seen;
  for (const auto& l : kCorpus) {
    auto r = realize_single(l);
    const auto c = catenary_bounded(r.presentation, Rational(3));
    const Length want = l.size() >= 2 ? l.max() : 0;
    seen << l.to_string() << "->" << c << " ";
    if (c != want)
      notes.add(l.to_string() + ": " + std::to_string(c) + " vs " +
                std::to_string(want));
  }
  return {notes.empty(), notes.empty() ? seen.str() : notes.summary()};
}

Outcome system_shape() {
  Notes notes;
  std::size_t sets = 0;
  for (const auto& l : kCorpus) {
    auto r = realize_single(l);
    auto got = plain(system_of_lengths(r, Rational(3)));
    auto want = oracle::predicted_system({plain(l)}, Rational(3));
    sets += got.size();
    if (got != want) notes.add(l.to_string() + ": system differs from prediction");
  }
  return {notes.empty(), notes.empty()
                             ? std::to_string(sets) + " sets matched set-for-set"
                             : notes.summary()};
}

Outcome family_composition() {
  Notes notes;
  const auto family = FamilyPresentation::validate({{2, 3}, {2, 5}});
  auto r = realize_family(family);
  const Rational bound(2);
  const auto observed = system_of_lengths(r, bound);
  const auto reachable = oracle::predicted_system({{2, 3}, {2, 5}}, bound);

  Length top = 0;
  for (const auto& s : reachable) top = std::max<Length>(top, *s.rbegin());
  std::set<std::set<std::uint64_t>> restricted;
  for (const auto& s : enumerate(family, top))
    if (reachable.count(plain(s))) restricted.insert(plain(s));
  if (plain(observed) != restricted)
    notes.add("system differs from the reachable part of the family");
  for (const auto& s : observed)
    if (!contains(family, s)) notes.add(s.to_string() + " not in the family");

  // Sumset closure on observed sets whose sum is reachable in the slice.
  std::size_t pairs = 0;
  for (const auto& a : observed)
    for (const auto& b : observed) {
      auto s = sumset(a, b);
      if (!reachable.count(plain(s))) continue;
      ++pairs;
      if (!observed.count(s))
        notes.add(a.to_string() + "+" + b.to_string() + " missing");
    }
  return {notes.empty(), notes.empty()
                             ? std::to_string(observed.size()) + " sets, " +
                                   std::to_string(pairs) +
                                   " reachable sumsets, 0 violations"
                             : notes.summary()};
}

Outcome root_closure() {
  const auto start = Clock::now();
  Notes notes;
  std::size_t total = 0;
  const std::vector<std::int64_t> multipliers{2, 3};
  for (const SetOfLengths& l : {SetOfLengths{2, 3}, SetOfLengths{2, 5}}) {
    auto r = realize_single(l);
    std::size_t checked = 0;
    auto bad = root_closure_violations(r.presentation, 2, multipliers, &checked);
    total += checked;
    for (const auto& v : bad) {
      std::ostringstream s;
      s << l.to_string() << " v=";
      for (auto x : v) s << x << ' ';
      notes.add(s.str());
    }
  }
  const double t = seconds_since(start);
  if (t >= 60.0) notes.add("took " + fmt_seconds(t) + ", limit 60s");
  return {notes.empty(), notes.empty() ? std::to_string(total) +
                                             " box points, 0 violations"
                                       : notes.summary()};
}

Outcome zero_sum() {
  Notes notes;
  auto c2 = GroupSpec::build({2}, {{0}, {1}});
  for (const auto& s : zs_system(c2, 8))
    if (!s.is_singleton()) notes.add("C_2 has " + s.to_string());
  auto c3 = GroupSpec::build({3}, {{1}, {2}});
  auto l = zs_lengths(c3, ZeroSumSequence{{3, 3}});
  if (l != SetOfLengths{2, 3}) notes.add("L(1^3 2^3) = " + l.to_string());
  const auto atoms = minimal_atoms(c3);
  if (atoms.size() != 3)
    notes.add(std::to_string(atoms.size()) + " atoms over C_3");
  if (oracle::minimal_zero_sums(c3, c3.atom_length_cap()).size() != atoms.size())
    notes.add("atom count differs from subsequence oracle");
  return {notes.empty(), notes.empty()
                             ? "C_2 half-factorial, L(1^3 2^3)={2,3}, 3 atoms"
                             : notes.summary()};
}

Outcome distance_inequality() {
  Notes notes;
  std::size_t checked = 0;
  for (const auto& l : kCorpus) {
    auto r = realize_single(l);
    for (const auto& v : enumerate_elements(r.presentation, Rational(3))) {
      auto d = delta_set(lengths(r.presentation, v));
      if (d.empty()) continue;
      ++checked;
      const auto c = catenary_element(r.presentation, v);
      if (c < 2 + *d.rbegin())
        notes.add(l.to_string() + ": c=" + std::to_string(c) + " max delta " +
                  std::to_string(*d.rbegin()));
    }
  }
  return {notes.empty(),
          notes.empty() ? std::to_string(checked) +
                              " elements with non-singleton lengths, 0 violations"
                        : notes.summary()};
}

Outcome irreducible_sets() {
  auto r = realize_family(FamilyPresentation::validate({{2, 3}, {2, 5}}));
  auto report = irreducible_length_sets(monoid_slice(r.presentation, Rational(3)));
  const std::vector<SetOfLengths> want{{1}, {2, 3}, {2, 5}};
  std::string got;
  for (const auto& g : report.generators) got += g.to_string() + " ";
  const bool ok = report.generators == want && report.generated;
  return {ok, "generators " + got + (report.generated ? "(generated)"
                                                      : "(not generated)")};
}

Outcome oracle_equivalence() {
  Notes notes;
  std::size_t checked = 0;
  std::vector<RealizedMonoid> monoids;
  for (const auto& l : kCorpus) monoids.push_back(realize_single(l));
  monoids.push_back(realize_family(FamilyPresentation::validate({{2, 3}, {2, 5}})));
  for (const auto& r : monoids) {
    for (const auto& v : enumerate_elements(r.presentation, Rational(2))) {
      ++checked;
      auto fast = factorizations(r.presentation, v);
      auto slow = oracle::mitm_factorizations(r.presentation, v);
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      if (fast != slow) notes.add("disagreement in dim " +
                                  std::to_string(r.presentation.dim()));
    }
  }
  return {notes.empty(), notes.empty()
                             ? std::to_string(checked) + " elements, 100% agreement"
                             : notes.summary()};
}

}  // namespace

int main() {
  run(1, "realization correctness", realization_correctness);
  run(2, "unique factorization off the ideal", unique_off_ideal);
  run(3, "length-set formula", length_formula);
  run(4, "catenary degree", catenary);
  run(5, "system shape", system_shape);
  run(6, "family composition", family_composition);
  run(7, "root closure", root_closure);
  run(8, "zero-sum cross-check", zero_sum);
  run(9, "elementwise distance inequality", distance_inequality);
  run(10, "irreducible length sets", irreducible_sets);
  run(11, "oracle equivalence", oracle_equivalence);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
