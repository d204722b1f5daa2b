#include "lengthsmith/realization.hpp"

#include <algorithm>
#include <random>

#include "lengthsmith/error.hpp"
#include "lengthsmith/parallel.hpp"

namespace lengthsmith {

namespace {

struct BlockSpec {
  SetOfLengths target;
  std::string prefix;
};

std::string atom_label(const std::string& prefix, std::size_t i,
                       std::size_t j) {
  return prefix + "u" + std::to_string(i) + "," + std::to_string(j);
}

std::size_t block_width(const SetOfLengths& target) {
  auto k = target.elems();
  std::size_t width = k[0];
  for (std::size_t i = 1; i < k.size(); ++i) width += k[i] - 1;
  return width;
}

// Lays the blocks out side by side. Targets may contain 1 only as the
// singleton {1}, which is the rank-one free block of an empty family.
RealizedMonoid build_blocks(const std::vector<BlockSpec>& specs) {
  std::size_t dim = 0;
  for (const auto& s : specs) dim += block_width(s.target);

  std::vector<Atom> atoms;
  std::vector<Rational> grading(dim, Rational(0));
  std::vector<RealizedBlock> blocks;
  std::size_t offset = 0;
  for (const auto& s : specs) {
    auto k = s.target.elems();
    const auto k1 = static_cast<std::int64_t>(k[0]);
    RealizedBlock block;
    block.target_set = s.target;
    block.label_prefix = s.prefix;
    block.offset = offset;
    block.width = block_width(s.target);
    block.ideal_generator.assign(dim, 0);
    for (std::size_t j = 0; j < k[0]; ++j) {
      Element v(dim, 0);
      v[offset + j] = 1;
      block.ideal_generator[offset + j] = 1;
      grading[offset + j] = Rational(1);
      auto label = atom_label(s.prefix, 1, j + 1);
      block.atom_index[{1, j + 1}] = label;
      atoms.push_back({label, v});
    }
    std::size_t next = offset + k[0];
    for (std::size_t i = 1; i < k.size(); ++i) {
      const auto ki = static_cast<std::int64_t>(k[i]);
      Element closing = block.ideal_generator;
      for (std::size_t j = 0; j + 1 < k[i]; ++j) {
        Element v(dim, 0);
        v[next + j] = 1;
        closing[next + j] = -1;
        grading[next + j] = Rational(k1 - 1, ki - 1);
        auto label = atom_label(s.prefix, i + 1, j + 1);
        block.atom_index[{i + 1, j + 1}] = label;
        atoms.push_back({label, v});
      }
      auto label = atom_label(s.prefix, i + 1, k[i]);
      block.atom_index[{i + 1, k[i]}] = label;
      atoms.push_back({label, closing});
      next += k[i] - 1;
    }
    offset += block.width;
    blocks.push_back(std::move(block));
  }
  RealizedMonoid out{
      MonoidPresentation::build(dim, std::move(atoms), std::move(grading)),
      std::move(blocks)};
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// All (n_1..n_r) in N^r with sum n, in lexicographic order.
void compositions(std::size_t parts, std::uint32_t total,
                  std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::uint32_t n = 0; n <= total; ++n) {
    cur.push_back(n);
    compositions(parts, total - n, cur, out);
    cur.pop_back();
  }
}

// Factorization with one copy of each u_{i,1..k_i}.
Factorization row_factorization(const RealizedMonoid& realized,
                                const RealizedBlock& block, std::size_t row) {
  Factorization z{std::vector<std::uint32_t>(
      realized.presentation.atom_count(), 0)};
  for (const auto& [ij, label] : block.atom_index)
    if (ij.first == row) ++z.multiplicities[realized.presentation.atom_index(label)];
  return z;
}

// The factorization set predicted from the ideal powers and the unique
// factorization of the rest.
std::vector<Factorization> predicted_factorizations(
    const RealizedMonoid& realized, const IdealDecomposition& split,
    const Factorization& rest) {
  std::vector<Factorization> acc{rest};
  for (std::size_t b = 0; b < realized.blocks.size(); ++b) {
    const auto& block = realized.blocks[b];
    std::vector<Factorization> rows;
    for (std::size_t i = 1; i <= block.rows(); ++i)
      rows.push_back(row_factorization(realized, block, i));
    std::vector<std::vector<std::uint32_t>> tuples;
    std::vector<std::uint32_t> cur;
    compositions(block.rows(), split.powers[b], cur, tuples);
    std::vector<Factorization> next;
    for (const auto& z : acc) {
      for (const auto& t : tuples) {
        Factorization y = z;
        for (std::size_t i = 0; i < t.size(); ++i)
          for (std::size_t a = 0; a < y.multiplicities.size(); ++a)
            y.multiplicities[a] += t[i] * rows[i].multiplicities[a];
        next.push_back(std::move(y));
      }
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

std::string describe(const SetOfLengths& got, const SetOfLengths& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

}  // namespace

const RealizedBlock& RealizedMonoid::single_block() const {
  if (blocks.size() != 1) {
    throw Error(ErrorCode::kInvalidInput,
                "realized monoid has " + std::to_string(blocks.size()) +
                    " blocks, expected one");
  }
  return blocks.front();
}

RealizedMonoid realize_single(const SetOfLengths& target) {
  if (target.min() < 2) {
    throw Error(ErrorCode::kSetNotInNGe2,
                "target " + target.to_string() + " must lie in N>=2");
  }
  return build_blocks({{target, ""}});
}

RealizedMonoid realize_family(const FamilyPresentation& family) {
  const auto& gens = family.generators();
  if (gens.empty()) return build_blocks({{SetOfLengths{1}, ""}});
  std::vector<BlockSpec> specs;
  for (std::size_t b = 0; b < gens.size(); ++b) {
    std::string prefix =
        gens.size() == 1 ? "" : "A" + std::to_string(b + 1) + ".";
    specs.push_back({gens[b], prefix});
  }
  return build_blocks(specs);
}

std::set<SetOfLengths> system_of_lengths(const RealizedMonoid& realized,
                                         const Rational& bound) {
  const auto slice = enumerate_elements(realized.presentation, bound);
  std::vector<SetOfLengths> sets(slice.size());
  parallel_chunks(slice.size(), [&](unsigned, std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      sets[i] = lengths(realized.presentation, slice[i]);
  });
  return {sets.begin(), sets.end()};
}

Rational default_verification_bound(const RealizedMonoid& realized) {
  return realized.presentation.max_atom_degree() * 3;
}

IdealDecomposition split_off_ideal(const RealizedMonoid& realized,
                                   const Element& v) {
  const auto& monoid = realized.presentation;
  if (!is_element(monoid, v)) {
    throw Error(ErrorCode::kNotAnElement, "vector is not a monoid element");
  }
  IdealDecomposition out;
  out.rest = v;
  for (const auto& block : realized.blocks) {
    std::uint32_t n = 0;
    while (is_element(monoid, out.rest - block.ideal_generator)) {
      out.rest = out.rest - block.ideal_generator;
      ++n;
    }
    out.powers.push_back(n);
  }
  return out;
}

bool VerificationReport::passed() const {
  return property_a.passed() && property_b.passed() && property_c.passed() &&
         ideal_powers.passed() && superadditivity.passed() &&
         root_closure.passed();
}

std::optional<Counterexample> VerificationReport::first_failure() const {
  for (const CheckTally* t : {&property_a, &property_b, &property_c,
                              &ideal_powers, &superadditivity})
    if (!t->failures.empty()) return t->failures.front();
  if (!root_closure.violations.empty())
    return Counterexample{"root_closure", root_closure.violations.front(),
                          "a multiple lies in the monoid but the vector does not"};
  return std::nullopt;
}

VerificationReport verify_properties(const RealizedMonoid& realized,
                                     const VerificationOptions& options) {
  const auto& monoid = realized.presentation;
  VerificationReport report;
  report.bound = options.bound.value_or(default_verification_bound(realized));

  // (a) every row of a block sums to that block's ideal generator.
  for (const auto& block : realized.blocks) {
    for (std::size_t i = 1; i <= block.rows(); ++i) {
      const Element row = monoid.evaluate(row_factorization(realized, block, i));
      ++report.property_a.checked;
      if (row != block.ideal_generator) {
        report.property_a.failures.push_back(
            {"property_a", row,
             block.label_prefix + "row " + std::to_string(i) +
                 " does not sum to the ideal generator"});
      }
    }
  }

  // Ideal powers: exact factorization set of n * ideal for small n.
  const std::size_t atoms = monoid.atom_count();
  for (std::size_t b = 0; b < realized.blocks.size(); ++b) {
    const auto& block = realized.blocks[b];
    for (std::uint32_t n = 0; n <= options.max_ideal_power; ++n) {
      const Element v = static_cast<std::int64_t>(n) * block.ideal_generator;
      IdealDecomposition split{std::vector<std::uint32_t>(realized.blocks.size(), 0),
                               Element(monoid.dim(), 0)};
      split.powers[b] = n;
      auto want = predicted_factorizations(
          realized, split, Factorization{std::vector<std::uint32_t>(atoms, 0)});
      auto got = factorizations(monoid, v);
      std::sort(got.begin(), got.end());
      ++report.ideal_powers.checked;
      const auto count = binomial(n + block.rows() - 1, block.rows() - 1);
      if (got != want || got.size() != count) {
        report.ideal_powers.failures.push_back(
            {"ideal_powers", v,
             "|Z| = " + std::to_string(got.size()) + ", expected " +
                 std::to_string(count)});
      }
    }
  }

  // (b), (c) over the slice.
  const auto slice = enumerate_elements(monoid, report.bound);
  report.slice_size = slice.size();
  std::vector<std::optional<Counterexample>> fail_b(slice.size()),
      fail_c(slice.size());
  std::vector<char> off_ideal(slice.size(), 0);
  std::vector<SetOfLengths> slice_lengths(slice.size());
  parallel_chunks(slice.size(), [&](unsigned, std::size_t begin,
                                    std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Element& v = slice[idx];
      auto zs = factorizations(monoid, v);
      std::sort(zs.begin(), zs.end());
      std::vector<Length> ls;
      for (const auto& z : zs) ls.push_back(z.length());
      const auto lv = SetOfLengths::from_unsorted(ls);
      slice_lengths[idx] = lv;

      const auto split = split_off_ideal(realized, v);
      const bool off = std::all_of(split.powers.begin(), split.powers.end(),
                                   [](auto n) { return n == 0; });
      off_ideal[idx] = off;
      if (off && zs.size() != 1) {
        fail_b[idx] = Counterexample{
            "property_b", v,
            std::to_string(zs.size()) + " factorizations off the ideal"};
      }

      const auto rest = factorizations(monoid, split.rest);
      if (rest.size() != 1) {
        fail_c[idx] = Counterexample{
            "property_c", v, "the cofactor has " +
                                 std::to_string(rest.size()) +
                                 " factorizations"};
        continue;
      }
      SetOfLengths want = SetOfLengths::singleton(rest.front().length());
      for (std::size_t b = 0; b < realized.blocks.size(); ++b)
        want = sumset(want, n_fold_sumset(realized.blocks[b].target_set,
                                          split.powers[b]));
      if (lv != want) {
        fail_c[idx] = Counterexample{"property_c", v, describe(lv, want)};
      } else if (predicted_factorizations(realized, split, rest.front()) !=
                 zs) {
        fail_c[idx] = Counterexample{
            "property_c", v,
            "factorization set differs from the ideal-power product"};
      }
    }
  });
  for (std::size_t idx = 0; idx < slice.size(); ++idx) {
    if (off_ideal[idx]) ++report.property_b.checked;
    ++report.property_c.checked;
    if (fail_b[idx]) report.property_b.failures.push_back(*fail_b[idx]);
    if (fail_c[idx]) report.property_c.failures.push_back(*fail_c[idx]);
  }

  // Superadditivity on seeded random pairs whose sum stays in the slice.
  if (!slice.empty()) {
    std::map<Element, std::size_t> position;
    for (std::size_t i = 0; i < slice.size(); ++i) position[slice[i]] = i;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, slice.size() - 1);
    const std::size_t attempts = options.superadditivity_samples * 20;
    for (std::size_t t = 0; t < attempts &&
                            report.superadditivity.checked <
                                options.superadditivity_samples;
         ++t) {
      const auto i = pick(rng), j = pick(rng);
      auto it = position.find(slice[i] + slice[j]);
      if (it == position.end()) continue;
      ++report.superadditivity.checked;
      const auto sum = sumset(slice_lengths[i], slice_lengths[j]);
      if (!sum.is_subset_of(slice_lengths[it->second])) {
        report.superadditivity.failures.push_back(
            {"superadditivity", it->first,
             sum.to_string() + " is not inside " +
                 slice_lengths[it->second].to_string()});
      }
    }
  }

  // A1: root closure on a box around the origin.
  auto& rc = report.root_closure;
  rc.multipliers = options.box_multipliers;
  rc.radius = 0;
  for (std::int64_t r = options.box_radius; r >= 1; --r) {
    double points = 1;
    for (std::size_t j = 0; j < monoid.dim(); ++j) points *= double(2 * r + 1);
    if (points <= double(options.max_box_points)) {
      rc.radius = r;
      break;
    }
  }
  if (rc.radius == 0) {
    rc.skipped = true;
  } else {
    rc.violations = root_closure_violations(monoid, rc.radius, rc.multipliers,
                                            &rc.checked);
  }
  return report;
}

VerificationReport ensure_properties(const RealizedMonoid& realized,
                                     const VerificationOptions& options) {
  auto report = verify_properties(realized, options);
  if (auto bad = report.first_failure()) {
    std::string coords;
    for (auto x : bad->element)
      coords += (coords.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorCode::kVerificationFailure,
                bad->check + " fails at (" + coords + "): " + bad->detail);
  }
  return report;
}

}  // namespace lengthsmith
