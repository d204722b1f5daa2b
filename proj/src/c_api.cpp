#include "lengthsmith/lengthsmith.h"

#include <cstring>
#include <stdexcept>
#include <string>

#include "lengthsmith/error.hpp"
#include "lengthsmith/invariants.hpp"
#include "lengthsmith/json_io.hpp"
#include "lengthsmith/parallel.hpp"

using namespace lengthsmith;

struct ls_family {
  FamilyPresentation family;
};

struct ls_monoid {
  MonoidPresentation presentation;
  std::optional<RealizedMonoid> realized;
  Json meta;
};

struct ls_group {
  GroupSpec spec;
};

namespace {

thread_local std::string g_last_error;

ls_status fail(ls_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Body>
ls_status guarded(Body&& body) {
  try {
    body();
    return LS_OK;
  } catch (const NullArgument& e) {
    return fail(LS_ERR_NULL_ARGUMENT, e.what());
  } catch (const Error& e) {
    return fail(static_cast<ls_status>(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LS_ERR_INVALID_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = copy_string(j.dump()); }

void require(const void* p, const char* what) {
  if (!p) throw NullArgument(std::string(what) + " is null");
}

SetOfLengths parse_set(const char* text) {
  require(text, "set");
  return set_from_json(parse_json(text));
}

Element element(const ls_monoid* m, const int64_t* v, size_t dim) {
  require(v, "vector");
  Element e(v, v + dim);
  m->presentation.check_dim(e);
  return e;
}

Rational parse_bound(const char* text) {
  require(text, "bound");
  auto b = parse_rational(text);
  if (b <= 0) throw Error(ErrorCode::kInvalidInput, "bound must be positive");
  return b;
}

}  // namespace

extern "C" {

const char* ls_version(void) { return "1.0.0"; }

const char* ls_last_error(void) { return g_last_error.c_str(); }

const char* ls_status_name(ls_status status) {
  switch (status) {
    case LS_OK: return "Ok";
    case LS_ERR_NULL_ARGUMENT: return "NullArgument";
    case LS_ERR_INTERNAL: return "Internal";
    default: break;
  }
  static thread_local std::string name;
  name = std::string(error_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

void ls_string_free(char* s) { std::free(s); }

void ls_set_thread_limit(unsigned limit) { set_thread_limit(limit); }

ls_status ls_set_sumset(const char* a, const char* b, char** out) {
  if (!out) return fail(LS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { emit(as_json(sumset(parse_set(a), parse_set(b))), out); });
}

ls_status ls_set_n_fold(const char* set, uint64_t n, char** out) {
  if (!out) return fail(LS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { emit(as_json(n_fold_sumset(parse_set(set), n)), out); });
}

ls_status ls_set_dilate(const char* set, uint64_t n, char** out) {
  if (!out) return fail(LS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { emit(as_json(dilate(parse_set(set), n)), out); });
}

ls_status ls_set_delta(const char* set, char** out) {
  if (!out) return fail(LS_ERR_NULL_ARGUMENT, "out is null");
  return guarded([&] { emit(as_json(delta_set(parse_set(set))), out); });
}

// --- families ---------------------------------------------------------------

ls_status ls_family_create(const char* json, ls_family** out) {
  if (!json || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new ls_family{family_from_json(parse_json(json))};
  });
}

void ls_family_free(ls_family* family) { delete family; }

ls_status ls_family_to_json(const ls_family* family, char** out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { emit(as_json(family->family), out); });
}

ls_status ls_family_enumerate(const ls_family* family, uint64_t bound,
                              char** out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (bound < 1) throw Error(ErrorCode::kInvalidInput, "bound must be >= 1");
    emit(as_json(enumerate(family->family, bound)), out);
  });
}

ls_status ls_family_contains(const ls_family* family, const char* set,
                             char** out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto witness = contains(family->family, parse_set(set));
    emit(witness ? as_json(*witness) : Json(nullptr), out);
  });
}

ls_status ls_family_decompositions(const ls_family* family, const char* set,
                                   char** out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Json pairs = Json::array();
    for (const auto& [a, b] : decompositions(family->family, parse_set(set)))
      pairs.push_back(Json::array({as_json(a), as_json(b)}));
    emit(pairs, out);
  });
}

ls_status ls_family_is_indecomposable(const ls_family* family,
                                      const char* set, int* out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = is_indecomposable(family->family, parse_set(set)) ? 1 : 0;
  });
}

// --- monoids ----------------------------------------------------------------

ls_status ls_monoid_load(const char* json, ls_monoid** out) {
  if (!json || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const Json j = parse_json(json);
    auto realized = realized_from_json(j);
    Json meta = j.contains("meta") ? j.at("meta") : Json::object();
    *out = new ls_monoid{monoid_from_json(j), std::move(realized), meta};
  });
}

ls_status ls_monoid_realize(const uint64_t* set, size_t count,
                            ls_monoid** out) {
  if (!set || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<Length> elems(set, set + count);
    auto realized = realize_single(SetOfLengths::from_unsorted(elems));
    Json meta = as_json(realized).at("meta");
    auto presentation = realized.presentation;
    *out = new ls_monoid{std::move(presentation), std::move(realized), meta};
  });
}

ls_status ls_monoid_realize_family(const ls_family* family, ls_monoid** out) {
  if (!family || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto realized = realize_family(family->family);
    Json meta = as_json(realized).at("meta");
    auto presentation = realized.presentation;
    *out = new ls_monoid{std::move(presentation), std::move(realized), meta};
  });
}

void ls_monoid_free(ls_monoid* monoid) { delete monoid; }

ls_status ls_monoid_to_json(const ls_monoid* monoid, char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { emit(as_json(monoid->presentation, monoid->meta), out); });
}

ls_status ls_monoid_dim(const ls_monoid* monoid, size_t* out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  *out = monoid->presentation.dim();
  return LS_OK;
}

ls_status ls_monoid_is_realized(const ls_monoid* monoid, int* out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  *out = monoid->realized ? 1 : 0;
  return LS_OK;
}

ls_status ls_monoid_element_from_atoms(const ls_monoid* monoid,
                                       const char* const* labels,
                                       const uint64_t* counts, size_t count,
                                       int64_t* out, size_t dim) {
  if (!monoid || !out || (count > 0 && (!labels || !counts)))
    return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& p = monoid->presentation;
    if (dim != p.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "output buffer has wrong size");
    }
    Factorization z{std::vector<std::uint32_t>(p.atom_count(), 0)};
    for (size_t i = 0; i < count; ++i) {
      require(labels[i], "label");
      z.multiplicities[p.atom_index(labels[i])] +=
          static_cast<std::uint32_t>(counts[i]);
    }
    const Element v = p.evaluate(z);
    std::copy(v.begin(), v.end(), out);
  });
}

ls_status ls_monoid_is_element(const ls_monoid* monoid, const int64_t* v,
                               size_t dim, int* out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = is_element(monoid->presentation, element(monoid, v, dim)) ? 1 : 0;
  });
}

ls_status ls_monoid_factorizations(const ls_monoid* monoid, const int64_t* v,
                                   size_t dim, char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Json list = Json::array();
    for (const auto& z :
         factorizations(monoid->presentation, element(monoid, v, dim)))
      list.push_back(as_json(monoid->presentation, z));
    emit(list, out);
  });
}

ls_status ls_monoid_lengths(const ls_monoid* monoid, const int64_t* v,
                            size_t dim, char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(as_json(lengths(monoid->presentation, element(monoid, v, dim))), out);
  });
}

ls_status ls_monoid_catenary_element(const ls_monoid* monoid,
                                     const int64_t* v, size_t dim,
                                     uint64_t* out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = catenary_element(monoid->presentation, element(monoid, v, dim));
  });
}

ls_status ls_monoid_catenary_bounded(const ls_monoid* monoid,
                                     const char* bound, uint64_t* out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = catenary_bounded(monoid->presentation, parse_bound(bound));
  });
}

ls_status ls_monoid_delta_bounded(const ls_monoid* monoid, const char* bound,
                                  char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(as_json(delta_bounded(monoid->presentation, parse_bound(bound))), out);
  });
}

ls_status ls_monoid_elements(const ls_monoid* monoid, const char* bound,
                             char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(Json(enumerate_elements(monoid->presentation, parse_bound(bound))),
         out);
  });
}

ls_status ls_monoid_system(const ls_monoid* monoid, const char* bound,
                           char** out) {
  if (!monoid || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(as_json(monoid_slice(monoid->presentation, parse_bound(bound))), out);
  });
}

ls_status ls_monoid_verify(const ls_monoid* monoid, const char* bound,
                           uint64_t seed, char** report, int* passed) {
  if (!monoid || !report || !passed)
    return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (!monoid->realized) {
      throw Error(ErrorCode::kInvalidInput,
                  "monoid carries no recorded construction to verify");
    }
    VerificationOptions options;
    if (bound) options.bound = parse_bound(bound);
    options.seed = seed;
    const auto r = verify_properties(*monoid->realized, options);
    *passed = r.passed() ? 1 : 0;
    emit(as_json(r), report);
  });
}

// --- zero-sum ---------------------------------------------------------------

ls_status ls_group_create(const char* json, ls_group** out) {
  if (!json || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { *out = new ls_group{group_from_json(parse_json(json))}; });
}

void ls_group_free(ls_group* group) { delete group; }

ls_status ls_group_atoms(const ls_group* group, char** out) {
  if (!group || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    Json list = Json::array();
    for (const auto& a : minimal_atoms(group->spec))
      list.push_back(as_json(group->spec, a));
    emit(list, out);
  });
}

ls_status ls_group_lengths(const ls_group* group, const char* sequence,
                           char** out) {
  if (!group || !sequence || !out)
    return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto s = sequence_from_json(group->spec, parse_json(sequence));
    emit(as_json(zs_lengths(group->spec, s)), out);
  });
}

ls_status ls_group_system(const ls_group* group, uint64_t bound, char** out) {
  if (!group || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    if (bound < 1) throw Error(ErrorCode::kInvalidInput, "bound must be >= 1");
    emit(as_json(zerosum_slice(group->spec, bound)), out);
  });
}

// --- slices -----------------------------------------------------------------

ls_status ls_irreducible_length_sets(const char* slice, char** out) {
  if (!slice || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(as_json(irreducible_length_sets(slice_from_json(parse_json(slice)))),
         out);
  });
}

ls_status ls_compare_systems(const char* a, const char* b, char** out) {
  if (!a || !b || !out) return fail(LS_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    emit(as_json(compare_systems(slice_from_json(parse_json(a)),
                                 slice_from_json(parse_json(b)))),
         out);
  });
}

}  // extern "C"
