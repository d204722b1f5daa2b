#pragma once

// Reduced finitely generated monoids given by integer atom vectors in Z^d.
//
// Every presentation carries a grading: a rational functional that is strictly
// positive on each atom. It bounds the length of any factorization of v by
// grading(v) / min_atom_grading, which is what makes all enumeration below
// terminate even though atoms may have negative coordinates.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lengthsmith/lengthsets.hpp"
#include "lengthsmith/rational.hpp"

namespace lengthsmith {

/// A point of the ambient lattice Z^d; an element of the monoid when some
/// non-negative atom combination reaches it.
using Element = std::vector<std::int64_t>;

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(std::int64_t k, const Element& a);
bool is_zero(const Element& v);

struct Atom {
  std::string label;
  Element vector;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Multiplicity of each atom, indexed like MonoidPresentation::atoms().
struct Factorization {
  std::vector<std::uint32_t> multiplicities;

  Length length() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

class MonoidPresentation {
 public:
  /// Sorts atoms by label, checks them, and computes a grading unless one is
  /// supplied. Throws DimensionMismatch, ZeroAtom, DuplicateLabel,
  /// NoPositiveGrading or NonMinimalGeneratingSet.
  static MonoidPresentation build(
      std::size_t dim, std::vector<Atom> atoms,
      std::optional<std::vector<Rational>> grading = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const Atom& atom(std::size_t index) const { return atoms_.at(index); }
  const std::vector<Rational>& grading() const noexcept { return grading_; }

  /// Throws InvalidInput for unknown labels.
  std::size_t atom_index(std::string_view label) const;

  /// grading(v) exactly.
  Rational degree(std::span<const std::int64_t> v) const;
  /// grading(v) * scale(); an integer, and >= 1 on every atom.
  std::int64_t scaled_degree(std::span<const std::int64_t> v) const;
  std::int64_t scale() const noexcept { return scale_; }
  std::int64_t scaled_atom_degree(std::size_t index) const {
    return atom_degree_.at(index);
  }
  Rational min_atom_degree() const;
  Rational max_atom_degree() const;

  /// The weighted atom sum pi(z).
  Element evaluate(const Factorization& z) const;

  /// Throws DimensionMismatch.
  void check_dim(std::span<const std::int64_t> v) const;

  friend bool operator==(const MonoidPresentation&,
                         const MonoidPresentation&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Atom> atoms_;
  std::vector<Rational> grading_;
  std::vector<std::int64_t> scaled_grading_;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> atom_degree_;
};

/// A rational vector g with g . a >= 1 for every atom a, or nothing when no
/// such functional exists. Tries the all-ones functional first, then an exact
/// phase-one simplex.
std::optional<std::vector<Rational>> find_positive_grading(
    std::size_t dim, std::span<const Atom> atoms);

bool is_element(const MonoidPresentation& monoid, const Element& v);

/// Every x in N^m with A x = v, ordered so that factorizations using more of
/// the earlier-labelled atoms come first. Throws NotAnElement.
std::vector<Factorization> factorizations(const MonoidPresentation& monoid,
                                          const Element& v);

/// Throws NotAnElement.
SetOfLengths lengths(const MonoidPresentation& monoid, const Element& v);

/// All monoid elements of degree <= bound, sorted lexicographically.
std::vector<Element> enumerate_elements(const MonoidPresentation& monoid,
                                        const Rational& bound);

/// Vectors v in the box [-radius, radius]^d with m*v in the monoid for some
/// listed m while v itself is not.
std::vector<Element> root_closure_violations(
    const MonoidPresentation& monoid, std::int64_t radius,
    std::span<const std::int64_t> multipliers, std::size_t* checked = nullptr);

}  // namespace lengthsmith
