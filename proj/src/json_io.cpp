#include "lengthsmith/json_io.hpp"

#include "lengthsmith/error.hpp"

namespace lengthsmith {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    bad(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::int64_t as_int(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

Element element_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  Element v;
  for (const auto& x : j) v.push_back(as_int(x));
  return v;
}

std::string group_key(const GroupElement& g) { return Json(g).dump(); }

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json as_json(const SetOfLengths& set) {
  return Json(std::vector<Length>(set.begin(), set.end()));
}

SetOfLengths set_from_json(const Json& j) {
  if (!j.is_array()) bad("a set of lengths must be an array, got " + j.dump());
  std::vector<Length> elems;
  for (const auto& x : j) {
    const auto v = as_int(x);
    if (v < 0) bad("lengths must be non-negative, got " + x.dump());
    elems.push_back(static_cast<Length>(v));
  }
  return SetOfLengths::from_unsorted(std::move(elems));
}

Json as_json(const std::set<SetOfLengths>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(as_json(s));
  return out;
}

Json as_json(const DistanceSet& set) {
  return Json(std::vector<Length>(set.begin(), set.end()));
}

Json as_json(const FamilyPresentation& family) {
  Json gens = Json::array();
  for (const auto& g : family.generators()) gens.push_back(as_json(g));
  return Json{{"generators", gens}};
}

FamilyPresentation family_from_json(const Json& j) {
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) bad("'generators' must be an array");
  std::vector<SetOfLengths> sets;
  for (const auto& g : gens) sets.push_back(set_from_json(g));
  return FamilyPresentation::validate(sets);
}

Json as_json(const MembershipWitness& witness) {
  return Json{{"offset", witness.offset},
              {"multiplicities", witness.multiplicities}};
}

Json as_json(const MonoidPresentation& monoid, const Json& meta) {
  Json atoms = Json::array();
  for (const auto& a : monoid.atoms())
    atoms.push_back(Json{{"label", a.label}, {"vector", a.vector}});
  Json grading = Json::array();
  for (const auto& g : monoid.grading()) grading.push_back(format_rational(g));
  return Json{{"dim", monoid.dim()},
              {"atoms", atoms},
              {"grading", grading},
              {"meta", meta}};
}

MonoidPresentation monoid_from_json(const Json& j) {
  const auto dim = as_int(field(j, "dim"));
  if (dim < 1) bad("'dim' must be positive");
  const auto& atoms_json = field(j, "atoms");
  if (!atoms_json.is_array()) bad("'atoms' must be an array");
  std::vector<Atom> atoms;
  for (const auto& a : atoms_json) {
    const auto& label = field(a, "label");
    if (!label.is_string()) bad("atom labels must be strings");
    atoms.push_back({label.get<std::string>(), element_from_json(field(a, "vector"))});
  }
  std::optional<std::vector<Rational>> grading;
  if (j.contains("grading") && !j.at("grading").is_null()) {
    grading.emplace();
    for (const auto& g : j.at("grading")) {
      if (g.is_string()) {
        grading->push_back(parse_rational(g.get<std::string>()));
      } else {
        grading->push_back(Rational(as_int(g)));
      }
    }
  }
  return MonoidPresentation::build(static_cast<std::size_t>(dim),
                                   std::move(atoms), std::move(grading));
}

Json as_json(const RealizedMonoid& realized) {
  Json meta;
  const bool single = realized.blocks.size() == 1 &&
                      realized.blocks.front().label_prefix.empty() &&
                      realized.blocks.front().target_set.min() >= 2;
  if (single) {
    meta = Json{{"construction", "prop3.1"},
                {"target_set", as_json(realized.target_set())}};
  } else {
    Json gens = Json::array();
    for (const auto& b : realized.blocks)
      if (b.target_set.min() >= 2) gens.push_back(as_json(b.target_set));
    meta = Json{{"construction", "coproduct"}, {"generators", gens}};
  }
  return as_json(realized.presentation, meta);
}

std::optional<RealizedMonoid> realized_from_json(const Json& j) {
  const auto stored = monoid_from_json(j);
  if (!j.contains("meta") || !j.at("meta").is_object() ||
      !j.at("meta").contains("construction")) {
    return std::nullopt;
  }
  const auto& meta = j.at("meta");
  const auto construction = meta.at("construction").get<std::string>();
  std::optional<RealizedMonoid> rebuilt;
  if (construction == "prop3.1") {
    rebuilt = realize_single(set_from_json(field(meta, "target_set")));
  } else if (construction == "coproduct") {
    rebuilt = realize_family(family_from_json(meta));
  } else {
    bad("unknown construction '" + construction + "'");
  }
  if (!(rebuilt->presentation == stored)) {
    bad("monoid file does not match its recorded construction");
  }
  return rebuilt;
}

Json as_json(const MonoidPresentation& monoid, const Factorization& z) {
  Json out = Json::object();
  for (std::size_t i = 0; i < z.multiplicities.size(); ++i)
    if (z.multiplicities[i] > 0)
      out[monoid.atom(i).label] = z.multiplicities[i];
  return out;
}

Factorization factorization_from_json(const MonoidPresentation& monoid,
                                      const Json& j) {
  if (!j.is_object()) bad("a factorization must be a label -> count object");
  Factorization z{std::vector<std::uint32_t>(monoid.atom_count(), 0)};
  for (const auto& [label, count] : j.items()) {
    const auto n = as_int(count);
    if (n < 0) bad("multiplicities must be non-negative");
    z.multiplicities[monoid.atom_index(label)] += static_cast<std::uint32_t>(n);
  }
  return z;
}

namespace {

Json tally_json(const CheckTally& t) {
  Json failures = Json::array();
  for (const auto& f : t.failures)
    failures.push_back(Json{{"element", f.element}, {"detail", f.detail}});
  return Json{{"checked", t.checked},
              {"failures", failures},
              {"status", t.passed() ? "pass" : "fail"}};
}

}  // namespace

Json as_json(const VerificationReport& report) {
  const auto& rc = report.root_closure;
  Json root{{"radius", rc.radius},
            {"multipliers", rc.multipliers},
            {"checked", rc.checked},
            {"violations", rc.violations},
            {"status", rc.skipped ? "skipped" : (rc.passed() ? "pass" : "fail")}};
  return Json{{"bound", format_rational(report.bound)},
              {"slice_size", report.slice_size},
              {"property_a", report.property_a.passed() ? "pass" : "fail"},
              {"property_a_detail", tally_json(report.property_a)},
              {"property_b", tally_json(report.property_b)},
              {"property_c", tally_json(report.property_c)},
              {"ideal_powers", tally_json(report.ideal_powers)},
              {"superadditivity", tally_json(report.superadditivity)},
              {"root_closure", root},
              {"passed", report.passed()}};
}

Json as_json(const GroupSpec& spec) {
  return Json{{"group", spec.cyclic_orders()}, {"g0", spec.g0()}};
}

GroupSpec group_from_json(const Json& j) {
  const auto& group = field(j, "group");
  const auto& g0 = field(j, "g0");
  if (!group.is_array() || !g0.is_array()) {
    bad("'group' and 'g0' must be arrays");
  }
  std::vector<std::int64_t> orders;
  for (const auto& n : group) orders.push_back(as_int(n));
  std::vector<GroupElement> elems;
  for (const auto& g : g0) elems.push_back(element_from_json(g));
  return GroupSpec::build(std::move(orders), std::move(elems));
}

Json as_json(const GroupSpec& spec, const ZeroSumSequence& s) {
  Json out = Json::object();
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
    if (s.multiplicities[i] > 0)
      out[group_key(spec.g0()[i])] = s.multiplicities[i];
  return out;
}

ZeroSumSequence sequence_from_json(const GroupSpec& spec, const Json& j) {
  if (!j.is_object()) bad("a sequence must be an element -> count object");
  ZeroSumSequence s{std::vector<std::uint32_t>(spec.g0().size(), 0)};
  for (const auto& [key, count] : j.items()) {
    auto g = element_from_json(parse_json(key));
    if (g.size() != spec.cyclic_orders().size()) {
      bad("sequence element " + key + " has the wrong number of components");
    }
    for (std::size_t c = 0; c < g.size(); ++c) {
      const auto n = spec.cyclic_orders()[c];
      g[c] = ((g[c] % n) + n) % n;
    }
    const auto m = as_int(count);
    if (m < 0) bad("multiplicities must be non-negative");
    s.multiplicities[spec.index_of(g)] += static_cast<std::uint32_t>(m);
  }
  return s;
}

Json as_json(const SystemSlice& slice) {
  return Json{{"bound", format_rational(slice.bound)},
              {"complete_up_to", slice.complete_up_to},
              {"sets", as_json(slice.sets)}};
}

SystemSlice slice_from_json(const Json& j) {
  SystemSlice slice;
  const auto& bound = field(j, "bound");
  slice.bound = bound.is_string() ? parse_rational(bound.get<std::string>())
                                  : Rational(as_int(bound));
  const auto upto = as_int(field(j, "complete_up_to"));
  if (upto < 0) bad("'complete_up_to' must be non-negative");
  slice.complete_up_to = static_cast<Length>(upto);
  for (const auto& s : field(j, "sets")) slice.sets.insert(set_from_json(s));
  return slice;
}

Json as_json(const GeneratorReport& report) {
  Json gens = Json::array(), missing = Json::array();
  for (const auto& g : report.generators) gens.push_back(as_json(g));
  for (const auto& g : report.ungenerated) missing.push_back(as_json(g));
  return Json{{"generators", gens},
              {"generated", report.generated},
              {"ungenerated", missing}};
}

Json as_json(const ComparisonReport& report) {
  Json a = Json::array(), b = Json::array();
  for (const auto& s : report.only_in_a) a.push_back(as_json(s));
  for (const auto& s : report.only_in_b) b.push_back(as_json(s));
  return Json{{"agree", report.agree},
              {"compared_up_to", report.compared_up_to},
              {"only_in_a", a},
              {"only_in_b", b},
              {"trim_rule", report.trim_rule}};
}

}  // namespace lengthsmith
