// Command-line front end. Every verb is a thin wrapper over the C API and
// prints one JSON document on standard output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lengthsmith/lengthsmith.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

// Raised for any failure that should end the run with an error object.
struct Failure {
  std::string code;
  std::string message;
};

[[noreturn]] void fail(std::string code, std::string message) {
  throw Failure{std::move(code), std::move(message)};
}

void check(ls_status status) {
  if (status != LS_OK) fail(ls_status_name(status), ls_last_error());
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ls_string_free(s);
  return out;
}

void print(const std::string& json_text) { std::cout << json_text << '\n'; }
void print(const Json& j) { print(j.dump()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("Io", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("Io", "cannot write " + path);
  out << text << '\n';
  if (!out) fail("Io", "cannot write " + path);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    fail("InvalidInput", "bad integer in " + what + ": '" + text + "'");
  }
  if (used != text.size())
    fail("InvalidInput", "bad integer in " + what + ": '" + text + "'");
  return value;
}

// "2,3" -> [2,3]
Json int_list(const std::string& text, const std::string& what) {
  Json out = Json::array();
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p, what));
  return out;
}

// "2,3;2,5" -> [[2,3],[2,5]]
Json int_lists(const std::string& text, const std::string& what) {
  Json out = Json::array();
  for (const auto& p : split(text, ';')) out.push_back(int_list(p, what));
  return out;
}

// RAII owners for library handles.
struct Monoid {
  ls_monoid* handle = nullptr;
  ~Monoid() { ls_monoid_free(handle); }
  std::size_t dim() const {
    std::size_t d = 0;
    check(ls_monoid_dim(handle, &d));
    return d;
  }
};

struct Family {
  ls_family* handle = nullptr;
  ~Family() { ls_family_free(handle); }
};

struct Group {
  ls_group* handle = nullptr;
  ~Group() { ls_group_free(handle); }
};

void load_monoid(const std::string& path, Monoid& m) {
  check(ls_monoid_load(read_file(path).c_str(), &m.handle));
}

void load_family(const std::string& generators, const std::string& path,
                 Family& f) {
  std::string json;
  if (!path.empty()) {
    json = read_file(path);
  } else if (!generators.empty()) {
    json = Json{{"generators", int_lists(generators, "--generators")}}.dump();
  } else {
    fail("Usage", "give --generators or --family");
  }
  check(ls_family_create(json.c_str(), &f.handle));
}

// "u1,1:1,u1,2:1": labels may contain commas, so each ':' ends a label and the
// next comma ends its count.
std::vector<std::int64_t> element_from_atoms(const Monoid& m,
                                             const std::string& spec) {
  auto chunks = split(spec, ':');
  if (chunks.size() < 2) fail("InvalidInput", "--atoms expects label:count,...");
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::string label = chunks.front();
  for (std::size_t i = 1; i < chunks.size(); ++i) {
    const auto& c = chunks[i];
    const bool last = i + 1 == chunks.size();
    const auto comma = last ? std::string::npos : c.find(',');
    if (!last && comma == std::string::npos)
      fail("InvalidInput", "--atoms expects label:count,...");
    const auto n = parse_int(c.substr(0, comma), "--atoms");
    if (n < 0) fail("InvalidInput", "atom counts must be non-negative");
    labels.push_back(label);
    counts.push_back(static_cast<std::uint64_t>(n));
    if (!last) label = c.substr(comma + 1);
  }
  std::vector<const char*> ptrs;
  for (const auto& l : labels) ptrs.push_back(l.c_str());
  std::vector<std::int64_t> v(m.dim());
  check(ls_monoid_element_from_atoms(m.handle, ptrs.data(), counts.data(),
                                     ptrs.size(), v.data(), v.size()));
  return v;
}

std::vector<std::int64_t> element_from_vector(const Monoid& m,
                                              const std::string& text) {
  std::vector<std::int64_t> v;
  for (const auto& p : split(text, ',')) v.push_back(parse_int(p, "--vector"));
  if (v.size() != m.dim())
    fail(ls_status_name(LS_ERR_DIMENSION_MISMATCH),
         "--vector has " + std::to_string(v.size()) + " coordinates, expected " +
             std::to_string(m.dim()));
  int member = 0;
  check(ls_monoid_is_element(m.handle, v.data(), v.size(), &member));
  if (!member)
    fail(ls_status_name(LS_ERR_NOT_AN_ELEMENT), "vector is not in the monoid");
  return v;
}

struct ElementFlags {
  std::string atoms;
  std::string vector;
};

void add_element_flags(CLI::App* cmd, ElementFlags& flags) {
  auto* a = cmd->add_option("--atoms", flags.atoms,
                            "element as atom multiplicities, e.g. u1,1:1,u1,2:1");
  auto* v = cmd->add_option("--vector", flags.vector,
                            "element as a coordinate vector, e.g. 1,1,0,0");
  a->excludes(v);
}

std::optional<std::vector<std::int64_t>> element(const Monoid& m,
                                                 const ElementFlags& flags) {
  if (!flags.atoms.empty()) return element_from_atoms(m, flags.atoms);
  if (!flags.vector.empty()) return element_from_vector(m, flags.vector);
  return std::nullopt;
}

std::vector<std::int64_t> require_element(const Monoid& m,
                                          const ElementFlags& flags) {
  auto v = element(m, flags);
  if (!v) fail("Usage", "give --atoms or --vector");
  return *v;
}

void persist_monoid(const Monoid& m, const std::string& out) {
  char* text = nullptr;
  check(ls_monoid_to_json(m.handle, &text));
  auto json = take(text);
  if (out.empty()) {
    print(json);
    return;
  }
  write_file(out, json);
  auto parsed = Json::parse(json);
  print(Json{{"written", out},
             {"dim", parsed["dim"]},
             {"atom_count", parsed["atoms"].size()}});
}

void apply_thread_env() {
  const char* env = std::getenv("LENGTHSMITH_THREADS");
  if (!env || !*env) return;
  const auto n = parse_int(env, "LENGTHSMITH_THREADS");
  if (n < 0) fail("InvalidInput", "LENGTHSMITH_THREADS must be non-negative");
  ls_set_thread_limit(static_cast<unsigned>(n));
}

int emit_error(const std::string& code, const std::string& message) {
  print(Json{{"error", {{"code", code}, {"message", message}}}});
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realize prescribed systems of sets of lengths and compute "
               "factorization invariants."};
  app.set_version_flag("--version", std::string(ls_version()));
  app.require_subcommand(1);

  std::string set_text, out, monoid_path, bound, generators, family_path;
  std::string op, group_orders, g0_text, spec_path, sequence_text, a_path,
      b_path;
  std::uint64_t seed = 0;
  ElementFlags elem;
  int exit_code = kExitOk;

  auto* realize = app.add_subcommand("realize", "realize a single set of lengths");
  realize->add_option("--set", set_text, "target set, e.g. 2,3")->required();
  realize->add_option("--out", out, "write the monoid file here");

  auto* realize_family =
      app.add_subcommand("realize-family", "realize a family of sets of lengths");
  realize_family->add_option("--generators", generators, "e.g. 2,3;2,5");
  realize_family->add_option("--family", family_path, "family JSON file");
  realize_family->add_option("--out", out, "write the monoid file here");

  auto* lengths_cmd = app.add_subcommand("lengths", "set of lengths of an element");
  auto* factorizations_cmd =
      app.add_subcommand("factorizations", "all factorizations of an element");
  auto* catenary_cmd = app.add_subcommand(
      "catenary", "catenary degree of an element, or the maximum over a slice");
  auto* delta_cmd = app.add_subcommand(
      "delta", "distance set of a set of lengths, or union over a slice");
  auto* system_cmd = app.add_subcommand("system", "bounded slice of the system");
  auto* verify_cmd =
      app.add_subcommand("verify", "check the realization properties");
  for (auto* cmd : {lengths_cmd, factorizations_cmd, catenary_cmd, delta_cmd,
                    system_cmd, verify_cmd})
    cmd->add_option("--monoid", monoid_path, "monoid JSON file");
  for (auto* cmd : {lengths_cmd, factorizations_cmd, catenary_cmd})
    add_element_flags(cmd, elem);
  for (auto* cmd : {catenary_cmd, delta_cmd, system_cmd, verify_cmd})
    cmd->add_option("--bound", bound, "degree bound, integer or p/q");
  for (auto* cmd : {lengths_cmd, factorizations_cmd, system_cmd, verify_cmd})
    cmd->get_option("--monoid")->required();
  delta_cmd->add_option("--set", set_text, "set of lengths, e.g. 2,5,6");
  system_cmd->get_option("--bound")->required();
  system_cmd->add_option("--out", out, "also write the slice here");
  verify_cmd->add_option("--seed", seed, "seed for sampled checks");

  auto* family_cmd = app.add_subcommand("family", "operations on families");
  family_cmd->add_option("--generators", generators, "e.g. 2,3;2,5");
  family_cmd->add_option("--family", family_path, "family JSON file");
  family_cmd
      ->add_option("--op", op,
                   "validate, enumerate, contains, decompositions or "
                   "indecomposable")
      ->required()
      ->check(CLI::IsMember({"validate", "enumerate", "contains",
                             "decompositions", "indecomposable"}));
  family_cmd->add_option("--set", set_text, "set of lengths, e.g. 4,5,7,8");
  family_cmd->add_option("--bound", bound, "largest length to enumerate");

  auto* zerosum_cmd =
      app.add_subcommand("zerosum", "monoids of zero-sum sequences");
  zerosum_cmd->add_option("--group", group_orders, "cyclic orders, e.g. 2,2");
  zerosum_cmd->add_option("--g0", g0_text, "subset, e.g. 0,1;1,0;1,1");
  zerosum_cmd->add_option("--spec", spec_path, "group JSON file");
  zerosum_cmd->add_option("--op", op, "atoms, lengths or system")
      ->required()
      ->check(CLI::IsMember({"atoms", "lengths", "system"}));
  zerosum_cmd->add_option("--sequence", sequence_text,
                          "sequence JSON, e.g. {\"[1]\":3,\"[2]\":3}");
  zerosum_cmd->add_option("--bound", bound, "largest sequence length");
  zerosum_cmd->add_option("--out", out, "also write the slice here");

  auto* compare_cmd = app.add_subcommand(
      "compare", "compare two slices, or list the generators of one");
  compare_cmd->add_option("--a", a_path, "slice JSON file")->required();
  compare_cmd->add_option("--b", b_path, "second slice JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("Usage", e.what());
  }

  try {
    apply_thread_env();

    if (realize->parsed()) {
      auto values = int_list(set_text, "--set");
      std::vector<std::uint64_t> set;
      for (const auto& v : values) {
        if (v.get<std::int64_t>() < 0)
          fail(ls_status_name(LS_ERR_SET_NOT_IN_N_GE_2),
               "lengths must be non-negative");
        set.push_back(v.get<std::uint64_t>());
      }
      Monoid m;
      check(ls_monoid_realize(set.data(), set.size(), &m.handle));
      persist_monoid(m, out);
    } else if (realize_family->parsed()) {
      Family f;
      load_family(generators, family_path, f);
      Monoid m;
      check(ls_monoid_realize_family(f.handle, &m.handle));
      persist_monoid(m, out);
    } else if (lengths_cmd->parsed() || factorizations_cmd->parsed()) {
      Monoid m;
      load_monoid(monoid_path, m);
      auto v = require_element(m, elem);
      char* text = nullptr;
      if (lengths_cmd->parsed())
        check(ls_monoid_lengths(m.handle, v.data(), v.size(), &text));
      else
        check(ls_monoid_factorizations(m.handle, v.data(), v.size(), &text));
      print(take(text));
    } else if (catenary_cmd->parsed()) {
      if (monoid_path.empty()) fail("Usage", "--monoid is required");
      Monoid m;
      load_monoid(monoid_path, m);
      std::uint64_t c = 0;
      if (auto v = element(m, elem)) {
        check(ls_monoid_catenary_element(m.handle, v->data(), v->size(), &c));
        print(Json(c));
      } else if (!bound.empty()) {
        check(ls_monoid_catenary_bounded(m.handle, bound.c_str(), &c));
        print(Json{{"bound", bound}, {"catenary_bounded", c}});
      } else {
        fail("Usage", "give --atoms, --vector or --bound");
      }
    } else if (delta_cmd->parsed()) {
      char* text = nullptr;
      if (!set_text.empty()) {
        check(ls_set_delta(int_list(set_text, "--set").dump().c_str(), &text));
      } else if (!monoid_path.empty() && !bound.empty()) {
        Monoid m;
        load_monoid(monoid_path, m);
        check(ls_monoid_delta_bounded(m.handle, bound.c_str(), &text));
      } else {
        fail("Usage", "give --set, or --monoid with --bound");
      }
      print(take(text));
    } else if (system_cmd->parsed()) {
      Monoid m;
      load_monoid(monoid_path, m);
      char* text = nullptr;
      check(ls_monoid_system(m.handle, bound.c_str(), &text));
      auto slice = take(text);
      if (!out.empty()) write_file(out, slice);
      print(slice);
    } else if (verify_cmd->parsed()) {
      Monoid m;
      load_monoid(monoid_path, m);
      char* text = nullptr;
      int passed = 0;
      check(ls_monoid_verify(m.handle, bound.empty() ? nullptr : bound.c_str(),
                             seed, &text, &passed));
      print(take(text));
      if (!passed) exit_code = kExitVerificationFailed;
    } else if (family_cmd->parsed()) {
      Family f;
      load_family(generators, family_path, f);
      char* text = nullptr;
      auto need_set = [&] {
        if (set_text.empty()) fail("Usage", "--op " + op + " needs --set");
        return int_list(set_text, "--set").dump();
      };
      if (op == "validate") {
        check(ls_family_to_json(f.handle, &text));
        print(take(text));
      } else if (op == "enumerate") {
        if (bound.empty()) fail("Usage", "--op enumerate needs --bound");
        const auto b = parse_int(bound, "--bound");
        if (b < 1) fail("InvalidInput", "--bound must be at least 1");
        check(ls_family_enumerate(f.handle, static_cast<std::uint64_t>(b), &text));
        print(take(text));
      } else if (op == "contains") {
        check(ls_family_contains(f.handle, need_set().c_str(), &text));
        print(take(text));
      } else if (op == "decompositions") {
        check(ls_family_decompositions(f.handle, need_set().c_str(), &text));
        print(take(text));
      } else {
        int ind = 0;
        check(ls_family_is_indecomposable(f.handle, need_set().c_str(), &ind));
        print(Json(ind != 0));
      }
    } else if (zerosum_cmd->parsed()) {
      std::string spec;
      if (!spec_path.empty()) {
        spec = read_file(spec_path);
      } else if (!g0_text.empty()) {
        Json orders = group_orders.empty() ? Json::array()
                                           : int_list(group_orders, "--group");
        spec = Json{{"group", orders}, {"g0", int_lists(g0_text, "--g0")}}.dump();
      } else {
        fail("Usage", "give --spec, or --group with --g0");
      }
      Group g;
      check(ls_group_create(spec.c_str(), &g.handle));
      char* text = nullptr;
      if (op == "atoms") {
        check(ls_group_atoms(g.handle, &text));
        print(take(text));
      } else if (op == "lengths") {
        if (sequence_text.empty()) fail("Usage", "--op lengths needs --sequence");
        check(ls_group_lengths(g.handle, sequence_text.c_str(), &text));
        print(take(text));
      } else {
        if (bound.empty()) fail("Usage", "--op system needs --bound");
        const auto b = parse_int(bound, "--bound");
        if (b < 0) fail("InvalidInput", "--bound must be non-negative");
        check(ls_group_system(g.handle, static_cast<std::uint64_t>(b), &text));
        auto slice = take(text);
        if (!out.empty()) write_file(out, slice);
        print(slice);
      }
    } else if (compare_cmd->parsed()) {
      auto a = read_file(a_path);
      char* text = nullptr;
      if (b_path.empty()) {
        check(ls_irreducible_length_sets(a.c_str(), &text));
      } else {
        auto b = read_file(b_path);
        check(ls_compare_systems(a.c_str(), b.c_str(), &text));
      }
      print(take(text));
    }
  } catch (const Failure& f) {
    return emit_error(f.code, f.message);
  } catch (const Json::exception& e) {
    return emit_error("InvalidInput", e.what());
  }
  return exit_code;
}
