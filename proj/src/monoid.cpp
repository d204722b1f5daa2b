#include "lengthsmith/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "lengthsmith/error.hpp"
#include "lengthsmith/parallel.hpp"

namespace lengthsmith {

Element operator+(const Element& a, const Element& b) {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Element operator-(const Element& a, const Element& b) {
  Element out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Element operator*(std::int64_t k, const Element& a) {
  Element out(a);
  for (auto& x : out) x *= k;
  return out;
}

bool is_zero(const Element& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

Length Factorization::length() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(),
                         Length{0});
}

// ---------------------------------------------------------------------------
// Grading

namespace {

using BigRational = boost::multiprecision::cpp_rational;

Rational to_rational(const BigRational& value) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  const cpp_int lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) {
    throw Error(ErrorCode::kOverflow, "grading coefficient exceeds 64 bits");
  }
  return Rational(static_cast<std::int64_t>(num),
                  static_cast<std::int64_t>(den));
}

// Phase-one simplex for { g : a_k . g >= 1 for all k } with g = p - q free.
// Columns: p (dim), q (dim), surplus (m), artificial (m), then rhs.
std::optional<std::vector<Rational>> simplex_grading(
    std::size_t dim, std::span<const Atom> atoms) {
  const std::size_t m = atoms.size();
  const std::size_t cols = 2 * dim + 2 * m;
  std::vector<std::vector<BigRational>> tab(
      m, std::vector<BigRational>(cols + 1, BigRational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < dim; ++j) {
      tab[k][j] = atoms[k].vector[j];
      tab[k][dim + j] = -atoms[k].vector[j];
    }
    tab[k][2 * dim + k] = -1;
    tab[k][2 * dim + m + k] = 1;
    tab[k][cols] = 1;
    basis[k] = 2 * dim + m + k;
  }
  // Reduced costs of "minimise the sum of artificials".
  std::vector<BigRational> cost(cols + 1, BigRational(0));
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t j = 0; j <= cols; ++j)
      if (j < 2 * dim + m || j == cols) cost[j] -= tab[k][j];

  for (;;) {
    // Bland's rule: lowest-index improving column.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = m;
    BigRational best;
    for (std::size_t k = 0; k < m; ++k) {
      if (tab[k][enter] <= 0) continue;
      BigRational ratio = tab[k][cols] / tab[k][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[k] < basis[leave])) {
        leave = k;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded; cannot happen in phase one
    const BigRational pivot = tab[leave][enter];
    for (auto& x : tab[leave]) x /= pivot;
    for (std::size_t k = 0; k < m; ++k) {
      if (k == leave || tab[k][enter] == 0) continue;
      const BigRational f = tab[k][enter];
      for (std::size_t j = 0; j <= cols; ++j) tab[k][j] -= f * tab[leave][j];
    }
    const BigRational f = cost[enter];
    for (std::size_t j = 0; j <= cols; ++j) cost[j] -= f * tab[leave][j];
    basis[leave] = enter;
  }
  if (cost[cols] != 0) return std::nullopt;

  std::vector<BigRational> values(cols, BigRational(0));
  for (std::size_t k = 0; k < m; ++k) values[basis[k]] = tab[k][cols];
  std::vector<Rational> grading(dim);
  for (std::size_t j = 0; j < dim; ++j)
    grading[j] = to_rational(values[j] - values[dim + j]);
  return grading;
}

}  // namespace

std::optional<std::vector<Rational>> find_positive_grading(
    std::size_t dim, std::span<const Atom> atoms) {
  const bool ones_work = std::all_of(atoms.begin(), atoms.end(), [](auto& a) {
    return std::accumulate(a.vector.begin(), a.vector.end(),
                           std::int64_t{0}) >= 1;
  });
  if (ones_work) return std::vector<Rational>(dim, Rational(1));
  return simplex_grading(dim, atoms);
}

// ---------------------------------------------------------------------------
// Presentation

MonoidPresentation MonoidPresentation::build(
    std::size_t dim, std::vector<Atom> atoms,
    std::optional<std::vector<Rational>> grading) {
  if (atoms.empty()) {
    throw Error(ErrorCode::kInvalidInput, "a presentation needs atoms");
  }
  std::set<std::string> labels;
  for (const auto& a : atoms) {
    if (a.vector.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "atom '" + a.label + "' has " +
                      std::to_string(a.vector.size()) + " coordinates, expected " +
                      std::to_string(dim));
    }
    if (is_zero(a.vector)) {
      throw Error(ErrorCode::kZeroAtom, "atom '" + a.label + "' is zero");
    }
    if (!labels.insert(a.label).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "atom label '" + a.label + "' is used twice");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.label < b.label; });

  if (!grading) grading = find_positive_grading(dim, atoms);
  if (!grading) {
    throw Error(ErrorCode::kNoPositiveGrading,
                "no linear functional is positive on every atom");
  }
  if (grading->size() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "grading has the wrong number of coefficients");
  }

  MonoidPresentation p;
  p.dim_ = dim;
  p.atoms_ = std::move(atoms);
  p.grading_ = std::move(*grading);
  std::int64_t scale = 1;
  for (const auto& g : p.grading_) scale = std::lcm(scale, g.denominator());
  p.scale_ = scale;
  p.scaled_grading_.reserve(dim);
  for (const auto& g : p.grading_)
    p.scaled_grading_.push_back(g.numerator() * (scale / g.denominator()));
  for (const auto& a : p.atoms_) {
    const std::int64_t w = p.scaled_degree(a.vector);
    if (w <= 0) {
      throw Error(ErrorCode::kNoPositiveGrading,
                  "grading is not positive on atom '" + a.label + "'");
    }
    p.atom_degree_.push_back(w);
  }

  for (std::size_t i = 0; i < p.atoms_.size(); ++i) {
    // Any representation of atom i by the others may not use atom i itself,
    // so removing it from the generating set and testing membership suffices.
    std::vector<Atom> others;
    for (std::size_t j = 0; j < p.atoms_.size(); ++j)
      if (j != i) others.push_back(p.atoms_[j]);
    if (others.empty()) break;
    MonoidPresentation rest;
    rest.dim_ = dim;
    rest.atoms_ = std::move(others);
    rest.grading_ = p.grading_;
    rest.scaled_grading_ = p.scaled_grading_;
    rest.scale_ = p.scale_;
    for (std::size_t j = 0; j < p.atoms_.size(); ++j)
      if (j != i) rest.atom_degree_.push_back(p.atom_degree_[j]);
    if (is_element(rest, p.atoms_[i].vector)) {
      throw Error(ErrorCode::kNonMinimalGeneratingSet,
                  "atom '" + p.atoms_[i].label +
                      "' is a combination of the other atoms");
    }
  }
  return p;
}

std::size_t MonoidPresentation::atom_index(std::string_view label) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i].label == label) return i;
  throw Error(ErrorCode::kInvalidInput,
              "unknown atom label '" + std::string(label) + "'");
}

void MonoidPresentation::check_dim(std::span<const std::int64_t> v) const {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector has " + std::to_string(v.size()) +
                    " coordinates, expected " + std::to_string(dim_));
  }
}

Rational MonoidPresentation::degree(std::span<const std::int64_t> v) const {
  return Rational(scaled_degree(v), scale_);
}

std::int64_t MonoidPresentation::scaled_degree(
    std::span<const std::int64_t> v) const {
  check_dim(v);
  std::int64_t total = 0;
  for (std::size_t j = 0; j < dim_; ++j) total += scaled_grading_[j] * v[j];
  return total;
}

Rational MonoidPresentation::min_atom_degree() const {
  return Rational(*std::min_element(atom_degree_.begin(), atom_degree_.end()),
                  scale_);
}

Rational MonoidPresentation::max_atom_degree() const {
  return Rational(*std::max_element(atom_degree_.begin(), atom_degree_.end()),
                  scale_);
}

Element MonoidPresentation::evaluate(const Factorization& z) const {
  if (z.multiplicities.size() != atoms_.size()) {
    throw Error(ErrorCode::kAlphabetMismatch,
                "factorization does not match the atom alphabet");
  }
  Element out(dim_, 0);
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out[j] += static_cast<std::int64_t>(z.multiplicities[i]) *
                atoms_[i].vector[j];
  return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct VectorHash {
  std::size_t operator()(const Element& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v)
      h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return h;
  }
};

// A residual r reachable from atoms[i..] with total scaled degree `budget`
// has r_c / budget between the smallest and largest a_c / w(a) over those
// atoms. Ratios are kept as (num, den) with den > 0.
struct RatioBounds {
  std::vector<std::int64_t> max_num, max_den, min_num, min_den;
};

class Searcher {
 public:
  explicit Searcher(const MonoidPresentation& monoid) : monoid_(monoid) {
    const std::size_t m = monoid.atom_count();
    const std::size_t d = monoid.dim();
    suffix_.resize(m);
    for (std::size_t i = m; i-- > 0;) {
      RatioBounds b;
      b.max_num.assign(d, 0);
      b.max_den.assign(d, 1);
      b.min_num.assign(d, 0);
      b.min_den.assign(d, 1);
      const std::int64_t w = monoid.scaled_atom_degree(i);
      const auto& a = monoid.atom(i).vector;
      for (std::size_t c = 0; c < d; ++c) {
        std::int64_t mx = a[c], mxd = w, mn = a[c], mnd = w;
        if (i + 1 < m) {
          const auto& n = suffix_[i + 1];
          if (n.max_num[c] * mxd > mx * n.max_den[c]) {
            mx = n.max_num[c];
            mxd = n.max_den[c];
          }
          if (n.min_num[c] * mnd < mn * n.min_den[c]) {
            mn = n.min_num[c];
            mnd = n.min_den[c];
          }
        }
        b.max_num[c] = mx;
        b.max_den[c] = mxd;
        b.min_num[c] = mn;
        b.min_den[c] = mnd;
      }
      suffix_[i] = std::move(b);
    }
  }

  bool exists(const Element& v) {
    const std::int64_t budget = monoid_.scaled_degree(v);
    Element r = v;
    return exists_from(0, r, budget);
  }

  void collect(const Element& v, std::vector<Factorization>& out) {
    const std::int64_t budget = monoid_.scaled_degree(v);
    Element r = v;
    std::vector<std::uint32_t> x(monoid_.atom_count(), 0);
    collect_from(0, r, budget, x, out);
  }

 private:
  bool feasible(std::size_t i, const Element& r, std::int64_t budget) const {
    if (budget < 0) return false;
    if (budget == 0) return is_zero(r);
    if (i >= monoid_.atom_count()) return false;
    const auto& b = suffix_[i];
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (r[c] * b.max_den[c] > budget * b.max_num[c]) return false;
      if (r[c] * b.min_den[c] < budget * b.min_num[c]) return false;
    }
    return true;
  }

  bool exists_from(std::size_t i, Element& r, std::int64_t budget) {
    if (budget == 0 && is_zero(r)) return true;
    if (!feasible(i, r, budget)) return false;
    Element key = r;
    key.push_back(static_cast<std::int64_t>(i));
    if (failed_.count(key)) return false;

    const auto& a = monoid_.atom(i).vector;
    const std::int64_t w = monoid_.scaled_atom_degree(i);
    const std::int64_t top = budget / w;
    bool found = false;
    std::int64_t taken = 0;
    for (std::int64_t k = 0; k <= top; ++k) {
      if (exists_from(i + 1, r, budget - k * w)) {
        found = true;
        taken = k;
        break;
      }
      for (std::size_t c = 0; c < r.size(); ++c) r[c] -= a[c];
      taken = k + 1;
    }
    for (std::size_t c = 0; c < r.size(); ++c) r[c] += taken * a[c];
    if (!found) failed_.insert(std::move(key));
    return found;
  }

  void collect_from(std::size_t i, Element& r, std::int64_t budget,
                    std::vector<std::uint32_t>& x,
                    std::vector<Factorization>& out) {
    if (budget == 0 && is_zero(r)) {
      out.push_back(Factorization{x});
      return;
    }
    if (!feasible(i, r, budget)) return;
    const auto& a = monoid_.atom(i).vector;
    const std::int64_t w = monoid_.scaled_atom_degree(i);
    const std::int64_t top = budget / w;
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= top * a[c];
    for (std::int64_t k = top; k >= 0; --k) {
      x[i] = static_cast<std::uint32_t>(k);
      collect_from(i + 1, r, budget - k * w, x, out);
      for (std::size_t c = 0; c < r.size(); ++c) r[c] += a[c];
    }
    for (std::size_t c = 0; c < r.size(); ++c) r[c] -= a[c];
    x[i] = 0;
  }

  const MonoidPresentation& monoid_;
  std::vector<RatioBounds> suffix_;
  std::unordered_set<Element, VectorHash> failed_;
};

}  // namespace

bool is_element(const MonoidPresentation& monoid, const Element& v) {
  monoid.check_dim(v);
  return Searcher(monoid).exists(v);
}

std::vector<Factorization> factorizations(const MonoidPresentation& monoid,
                                          const Element& v) {
  monoid.check_dim(v);
  std::vector<Factorization> out;
  Searcher(monoid).collect(v, out);
  if (out.empty()) {
    throw Error(ErrorCode::kNotAnElement, "vector is not a monoid element");
  }
  return out;
}

SetOfLengths lengths(const MonoidPresentation& monoid, const Element& v) {
  std::vector<Length> out;
  for (const auto& z : factorizations(monoid, v)) out.push_back(z.length());
  return SetOfLengths::from_unsorted(std::move(out));
}

std::vector<Element> enumerate_elements(const MonoidPresentation& monoid,
                                        const Rational& bound) {
  // floor(bound * scale) as an integer budget.
  const Rational scaled = bound * monoid.scale();
  if (scaled < 0) return {};
  const std::int64_t budget = scaled.numerator() / scaled.denominator();

  std::unordered_set<Element, VectorHash> seen;
  std::vector<Element> frontier{Element(monoid.dim(), 0)};
  seen.insert(frontier.front());
  std::vector<Element> all = frontier;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& e : frontier) {
      const std::int64_t deg = monoid.scaled_degree(e);
      for (std::size_t i = 0; i < monoid.atom_count(); ++i) {
        if (deg + monoid.scaled_atom_degree(i) > budget) continue;
        Element n = e + monoid.atom(i).vector;
        if (seen.insert(n).second) {
          all.push_back(n);
          next.push_back(std::move(n));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<Element> root_closure_violations(
    const MonoidPresentation& monoid, std::int64_t radius,
    std::span<const std::int64_t> multipliers, std::size_t* checked) {
  const std::size_t d = monoid.dim();
  const std::size_t side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= side;

  auto decode = [&](std::size_t index) {
    Element v(d);
    for (std::size_t j = 0; j < d; ++j) {
      v[j] = static_cast<std::int64_t>(index % side) - radius;
      index /= side;
    }
    return v;
  };

  std::vector<char> bad(total, 0);
  parallel_chunks(total, [&](unsigned, std::size_t begin, std::size_t end) {
    Searcher searcher(monoid);
    for (std::size_t index = begin; index < end; ++index) {
      const Element v = decode(index);
      if (is_zero(v)) continue;
      bool some_power = false;
      for (auto m : multipliers) {
        const Element mv = m * v;
        if (monoid.scaled_degree(mv) > 0 && searcher.exists(mv)) {
          some_power = true;
          break;
        }
      }
      if (some_power && !searcher.exists(v)) bad[index] = 1;
    }
  });
  if (checked) *checked = total;
  std::vector<Element> out;
  for (std::size_t index = 0; index < total; ++index)
    if (bad[index]) out.push_back(decode(index));
  return out;
}

}  // namespace lengthsmith
