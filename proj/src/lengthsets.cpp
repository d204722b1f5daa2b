#include "lengthsmith/lengthsets.hpp"

#include <algorithm>
#include <limits>

#include "lengthsmith/error.hpp"

namespace lengthsmith {

namespace {

// Dense sumsets are used while the result fits in this many slots.
constexpr Length kDenseLimit = Length{1} << 22;

Length checked_add(Length a, Length b) {
  if (a > std::numeric_limits<Length>::max() - b) {
    throw Error(ErrorCode::kOverflow, "length overflow in sumset");
  }
  return a + b;
}

}  // namespace

SetOfLengths::SetOfLengths(std::initializer_list<Length> elems)
    : SetOfLengths(from_unsorted(std::vector<Length>(elems))) {}

SetOfLengths SetOfLengths::from_unsorted(std::vector<Length> elems) {
  if (elems.empty()) {
    throw Error(ErrorCode::kEmptySet, "a set of lengths must be non-empty");
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return from_sorted(std::move(elems));
}

SetOfLengths SetOfLengths::from_sorted(std::vector<Length> elems) {
  SetOfLengths out;
  out.elems_ = std::move(elems);
  return out;
}

bool SetOfLengths::contains(Length value) const {
  return std::binary_search(elems_.begin(), elems_.end(), value);
}

bool SetOfLengths::is_subset_of(const SetOfLengths& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

std::string SetOfLengths::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out + "}";
}

SetOfLengths sumset(const SetOfLengths& a, const SetOfLengths& b) {
  const Length top = checked_add(a.max(), b.max());
  std::vector<Length> out;
  if (top < kDenseLimit) {
    std::vector<char> hit(top + 1, 0);
    for (Length x : a)
      for (Length y : b) hit[x + y] = 1;
    for (Length s = a.min() + b.min(); s <= top; ++s)
      if (hit[s]) out.push_back(s);
    return SetOfLengths::from_unsorted(std::move(out));
  }
  out.reserve(a.size() * b.size());
  for (Length x : a)
    for (Length y : b) out.push_back(x + y);
  return SetOfLengths::from_unsorted(std::move(out));
}

SetOfLengths n_fold_sumset(const SetOfLengths& set, Length n) {
  // Square-and-multiply over the sumset semigroup.
  SetOfLengths result;
  SetOfLengths power = set;
  while (n > 0) {
    if (n & 1) result = sumset(result, power);
    n >>= 1;
    if (n > 0) power = sumset(power, power);
  }
  return result;
}

SetOfLengths dilate(const SetOfLengths& set, Length n) {
  std::vector<Length> out;
  out.reserve(set.size());
  for (Length x : set) {
    if (n != 0 && x > std::numeric_limits<Length>::max() / n) {
      throw Error(ErrorCode::kOverflow, "length overflow in dilation");
    }
    out.push_back(x * n);
  }
  return SetOfLengths::from_unsorted(std::move(out));
}

DistanceSet delta_set(const SetOfLengths& set) {
  DistanceSet out;
  auto elems = set.elems();
  for (std::size_t i = 1; i < elems.size(); ++i)
    out.insert(elems[i] - elems[i - 1]);
  return out;
}

}  // namespace lengthsmith
