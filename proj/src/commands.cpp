#include "qha/commands.hpp"

#include "qha/builders.hpp"
#include "qha/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace qha::cli {

namespace {

using namespace qha::io;

struct Settings {
  bool pretty = false;
  bool reproducible = false;
};

struct RunReport {
  std::string command;
  OrderedJson inputs = OrderedJson::array();
  CheckReport checks;
  OrderedJson data = OrderedJson::object();
  std::optional<InputError> error;

  void add_input(const Document& d) {
    OrderedJson j;
    j["file"] = d.file;
    j["name"] = d.name;
    j["kind"] = kind_name(d.kind);
    j["hash"] = d.hash;
    inputs.push_back(j);
  }
  int exit_code() const { return error ? UsageError : checks.passed() ? Pass : Fail; }
};

OrderedJson outcome_json(const CheckOutcome& o) {
  OrderedJson j;
  j["id"] = o.id;
  j["passed"] = o.passed;
  if (!o.passed) {
    j["witness"] = o.witness;
    j["detail"] = o.detail;
  }
  return j;
}

OrderedJson report_json(const RunReport& r, const Settings& s, double ms) {
  OrderedJson j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["checks"] = OrderedJson::array();
  j["counterexamples"] = OrderedJson::array();
  for (const auto& o : r.checks.outcomes()) {
    j["checks"].push_back(outcome_json(o));
    if (!o.passed) j["counterexamples"].push_back(outcome_json(o));
  }
  j["result"] = r.error ? "error" : r.checks.passed() ? "pass" : "fail";
  if (r.error) {
    OrderedJson e;
    e["code"] = error_code_name(r.error->code());
    e["pointer"] = r.error->pointer();
    e["message"] = r.error->what();
    j["error"] = e;
  }
  j["data"] = r.data;
  if (!s.reproducible) j["timing"] = {{"wall_ms", ms}};
  return j;
}

std::string report_text(const RunReport& r, const Settings& s, double ms) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& in : r.inputs)
    os << "input:   " << in["file"].get<std::string>() << " (" << in["kind"].get<std::string>() << " '"
       << in["name"].get<std::string>() << "', " << in["hash"].get<std::string>() << ")\n";
  for (const auto& o : r.checks.outcomes()) {
    os << (o.passed ? "  PASS " : "  FAIL ") << o.id;
    if (!o.passed) {
      os << "  witness [";
      for (std::size_t i = 0; i < o.witness.size(); ++i) os << (i ? "," : "") << o.witness[i];
      os << "]";
      if (!o.detail.empty()) os << "  " << o.detail;
    }
    os << "\n";
  }
  if (!r.data.empty())
    for (const auto& [k, v] : r.data.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  if (r.error)
    os << "error:   " << error_code_name(r.error->code()) << " at '" << r.error->pointer() << "': " << r.error->what()
       << "\n";
  os << "result:  " << (r.error ? "error" : r.checks.passed() ? "pass" : "fail") << "\n";
  if (!s.reproducible) os << "time:    " << std::fixed << std::setprecision(3) << ms << " ms\n";
  return os.str();
}

void merge_prefixed(CheckReport& dst, const std::string& prefix, const CheckReport& src) {
  for (auto o : src.outcomes()) {
    o.id = prefix + "/" + o.id;
    dst.add(std::move(o));
  }
}

template <class F>
void with_scalar(const FieldSpec& f, F&& fn) {
  if (f.is_prime_field())
    fn(Zp{});
  else
    fn(Rational{});
}

template <class Ptr>
struct ModuleFor;
template <class S>
struct ModuleFor<AlgebraPtr<S>> {
  using type = HModule<S>;
};
template <class S>
struct ModuleFor<AlgebroidPtr<S>> {
  using type = AlgebroidModule<S>;
};
template <class Ptr>
using ModuleOf = typename ModuleFor<Ptr>::type;

bool is_algebra(const Document& d) { return d.kind == Kind::QuasiHopf || d.kind == Kind::HopfAlgebroid; }

template <class S, class F>
void with_parent(const Document& alg, F&& fn) {
  if (alg.kind == Kind::QuasiHopf)
    fn(parse_quasi_hopf<S>(alg));
  else if (alg.kind == Kind::HopfAlgebroid)
    fn(parse_algebroid<S>(alg));
  else
    throw InputError(ErrorCode::Incompatible, "/kind", alg.file + ": not a quasi_hopf or hopf_algebroid document");
}

struct Inputs {
  Document algebra;
  std::vector<Document> deps;
};

// Either "STRUCTURE DEP..." or "DEP..." with the structure taken from the first dependent's reference.
Inputs resolve(const std::vector<std::string>& paths, std::size_t n_deps, RunReport& report) {
  std::vector<Document> docs;
  for (const auto& p : paths) docs.push_back(load_document(p));
  Inputs in;
  if (!docs.empty() && is_algebra(docs.front()) && docs.size() != n_deps + 1)
    throw InputError(ErrorCode::Usage, "", "expected " + std::to_string(n_deps) + " file(s) after the structure");
  if (docs.size() == n_deps + 1) {
    if (!is_algebra(docs.front()))
      throw InputError(ErrorCode::Usage, "/kind",
                       docs.front().file + ": first argument must be a quasi_hopf or hopf_algebroid document");
    in.algebra = docs.front();
    in.deps.assign(docs.begin() + 1, docs.end());
  } else if (docs.size() == n_deps) {
    if (!has_algebra_reference(docs.front()))
      throw InputError(ErrorCode::Usage, "/algebra", docs.front().file + ": no structure given and no \"algebra\" member");
    in.algebra = referenced_algebra(docs.front());
    in.deps = docs;
  } else {
    throw InputError(ErrorCode::Usage, "", "wrong number of input files");
  }
  report.add_input(in.algebra);
  for (const auto& d : in.deps) {
    if (is_algebra(d))
      throw InputError(ErrorCode::Usage, "/kind", d.file + ": expected a dependent document, got " + kind_name(d.kind));
    if (has_algebra_reference(d) && referenced_algebra(d).hash != in.algebra.hash)
      throw InputError(ErrorCode::Incompatible, "/algebra",
                       d.file + ": refers to a different algebra than " + in.algebra.file);
    report.add_input(d);
  }
  return in;
}

OrderedJson algebra_reference(const Document& dep, const Document& algebra) {
  return has_algebra_reference(dep) ? ordered(dep.json.at("algebra")) : ordered(algebra.json);
}

template <class S>
void check_structure(const Document& d, CheckReport& out) {
  if (d.kind == Kind::QuasiHopf) {
    auto H = parse_quasi_hopf<S>(d);
    merge_prefixed(out, "quasi_bialgebra", check_quasi_bialgebra(*H));
    merge_prefixed(out, "quasi_hopf", check_quasi_hopf(*H));
  } else {
    auto H = parse_algebroid<S>(d);
    merge_prefixed(out, "algebroid", check_algebroid_all(*H));
  }
}

template <class Ptr>
void check_dependent(const Document& d, const Ptr& parent, CheckReport& out) {
  using Mod = ModuleOf<Ptr>;
  switch (d.kind) {
    case Kind::Module: merge_prefixed(out, "module", check_module(parse_module<Mod>(d, parent))); break;
    case Kind::Contramodule: {
      auto C = parse_contramodule<Mod>(d, parent);
      merge_prefixed(out, "module", check_module(C.carrier()));
      merge_prefixed(out, "ayd", check_ayd(C));
      break;
    }
    case Kind::ModuleAlgebra: {
      auto A = parse_module_algebra<Mod>(d, parent);
      merge_prefixed(out, "module", check_module(A.carrier));
      merge_prefixed(out, "algebra_object", check_algebra_object(A));
      break;
    }
    default: break;
  }
}

void cmd_check(const std::string& path, RunReport& report) {
  Document d = load_document(path);
  if (is_algebra(d)) {
    report.add_input(d);
    with_scalar(d.field, [&](auto tag) { check_structure<decltype(tag)>(d, report.checks); });
    return;
  }
  Inputs in = resolve({path}, 1, report);
  with_scalar(in.algebra.field, [&](auto tag) {
    with_parent<decltype(tag)>(in.algebra, [&](const auto& parent) { check_dependent(in.deps[0], parent, report.checks); });
  });
}

void cmd_coefficient(const std::vector<std::string>& paths, bool stability, RunReport& report) {
  Inputs in = resolve(paths, 1, report);
  with_scalar(in.algebra.field, [&](auto tag) {
    with_parent<decltype(tag)>(in.algebra, [&](const auto& parent) {
      using Mod = ModuleOf<std::decay_t<decltype(parent)>>;
      auto C = parse_contramodule<Mod>(in.deps[0], parent);
      report.data["flavor"] = flavor_key(C.flavor());
      if (stability)
        merge_prefixed(report.checks, "stability", check_stability(C));
      else
        merge_prefixed(report.checks, "ayd", check_ayd(C));
    });
  });
}

struct Output {
  std::optional<OrderedJson> document;
  std::string out_path;
};

void cmd_convert(const std::vector<std::string>& paths, const std::string& to, const std::string& out_path,
                 RunReport& report, Output& output) {
  Inputs in = resolve(paths, 1, report);
  if (in.algebra.kind != Kind::QuasiHopf)
    throw InputError(ErrorCode::Incompatible, "/algebra", "convert applies to coefficients over quasi-Hopf algebras");
  const Flavor target = parse_flavor(to);
  with_scalar(in.algebra.field, [&](auto tag) {
    using S = decltype(tag);
    auto H = parse_quasi_hopf<S>(in.algebra);
    auto C = parse_contramodule<HModule<S>>(in.deps[0], H);
    if (C.flavor() != Flavor::QuasiTypeI && C.flavor() != Flavor::QuasiTypeII)
      throw InputError(ErrorCode::Incompatible, "/flavor", "convert needs a typeI or typeII coefficient");
    HopfContramodule<S> R = C;
    if (C.flavor() != target) R = target == Flavor::QuasiTypeII ? convert_I_to_II(C) : convert_II_to_I(C);
    report.data["from"] = flavor_key(C.flavor());
    report.data["to"] = flavor_key(target);
    report.data["output"] = out_path.empty() ? OrderedJson() : OrderedJson(out_path);
    output.document = to_json(R, in.deps[0].name, algebra_reference(in.deps[0], in.algebra));
  });
}

void cmd_cohomology(const std::vector<std::string>& paths, Index degree, const std::string& theory,
                    RunReport& report) {
  Inputs in = resolve(paths, 2, report);
  const Theory t = theory == "hochschild" ? Theory::Hochschild : Theory::Cyclic;
  with_scalar(in.algebra.field, [&](auto tag) {
    with_parent<decltype(tag)>(in.algebra, [&](const auto& parent) {
      using Mod = ModuleOf<std::decay_t<decltype(parent)>>;
      auto A = parse_module_algebra<Mod>(in.deps[0], parent);
      auto C = parse_contramodule<Mod>(in.deps[1], parent);
      merge_prefixed(report.checks, "algebra_object", check_algebra_object(A));
      merge_prefixed(report.checks, "stability", check_stability(C));
      merge_prefixed(report.checks, "ayd", check_ayd(C));
      if (!report.checks.passed()) return;
      try {
        auto cc = build_cocyclic(A, C, degree + 1);
        merge_prefixed(report.checks, "cocyclic", cc.identities);
        auto result = cohomology(cc, t, degree);
        std::vector<Index> cochains;
        for (Index n = 0; n <= degree; ++n) cochains.push_back(cc.dim(n));
        report.data["theory"] = theory_name(t);
        report.data["degree"] = degree;
        report.data["field"] = result.field.name();
        report.data["cochain_dims"] = cochains;
        report.data["dims"] = result.dims;
        report.data["convention"] = result.convention;
      } catch (const CocyclicIdentityFailure& e) {
        report.checks.fail("cocyclic/" + e.relation(), {e.degree()}, e.what());
      } catch (const DimensionError& e) {
        throw InputError(ErrorCode::Limit, "", e.what());
      }
    });
  });
}

struct GenerateOptions {
  std::string field = "Q";
  std::string name;
  Index cyclic = 0;
  bool s3 = false;
  std::string table;
  bool non_cocycle = false;
  Index degree = 2;
  std::string structure;
  std::string flavor;
  bool regular = false;
};

FieldSpec field_from_flag(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  std::string digits = s;
  if (digits.rfind("GF", 0) == 0) digits = digits.substr(2);
  if (!digits.empty() && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw InputError(ErrorCode::Usage, "--field", "--field: expected Q or GF<p>, got '" + s + "'");
  }
  try {
    return FieldSpec::prime_field(p);
  } catch (const FieldError& e) {
    throw InputError(ErrorCode::NonPrime, "--field", e.what());
  }
}

GroupTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(ErrorCode::Io, "", "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(ErrorCode::Syntax, "", path + ": malformed JSON");
  }
  if (j.is_object()) j = io::detail::member(j, "table", "");
  try {
    return j.get<GroupTable>();
  } catch (const Json::exception&) {
    throw InputError(ErrorCode::Schema, "/table", path + ": expected a square array of element indices");
  }
}

template <class S>
OrderedJson generate_structure(const std::string& what, const GenerateOptions& o, const FieldSpec& f) {
  auto named = [&](std::string fallback) { return o.name.empty() ? fallback : o.name; };
  try {
    if (what == "group") {
      GroupTable t;
      std::string fallback;
      if (o.s3) {
        t = symmetric_group_s3_table();
        fallback = "kS3";
      } else if (o.cyclic > 0) {
        t = cyclic_group_table(o.cyclic);
        fallback = "kC" + std::to_string(o.cyclic);
      } else if (!o.table.empty()) {
        t = read_table(o.table);
        fallback = "kG";
      } else {
        throw InputError(ErrorCode::Usage, "", "generate group: one of --cyclic, --s3, --table is required");
      }
      return to_json(group_algebra<S>(t, f, named(fallback))->data());
    }
    if (what == "sweedler") {
      auto d = sweedler_h4<S>(f)->data();
      d.name = named(d.name);
      return to_json(d);
    }
    if (what == "twisted-dual") {
      auto omega = o.non_cocycle ? z2_non_cocycle<S>(f) : z2_cocycle<S>(f);
      return to_json(twisted_dual_group_algebra<S>(cyclic_group_table(2), omega, f, named("k^Z2_omega"))->data());
    }
    if (what == "enveloping") {
      if (o.degree < 1) throw InputError(ErrorCode::Usage, "--degree", "--degree must be positive");
      auto d = enveloping_algebroid<S>(truncated_polynomial_ring<S>(f, o.degree))->data();
      d.name = named("k[x]/(x^" + std::to_string(o.degree) + ")^e");
      return to_json(d);
    }
  } catch (const GroupError& e) {
    throw InputError(ErrorCode::Schema, "/table", e.what());
  }
  throw InputError(ErrorCode::Usage, "", "unknown generator " + what);
}

template <class Ptr>
OrderedJson generate_dependent(const std::string& what, const GenerateOptions& o, const Document& alg,
                               const Ptr& parent, RunReport& report) {
  using Mod = ModuleOf<Ptr>;
  using S = ScalarOf<Mod>;
  constexpr bool algebroid = std::is_same_v<Mod, AlgebroidModule<S>>;
  const OrderedJson ref = ordered(alg.json);
  auto named = [&](std::string fallback) { return o.name.empty() ? fallback : o.name; };
  Mod unit_mod = [&] {
    if constexpr (algebroid)
      return base_module(parent);
    else
      return trivial_module(parent);
  }();
  if (what == "unit-algebra") return to_json(unit_algebra(unit_mod), named("unit algebra"), ref);
  Flavor flavor;
  if (!o.flavor.empty()) {
    try {
      flavor = parse_flavor(o.flavor);
    } catch (const std::invalid_argument& e) {
      throw InputError(ErrorCode::Usage, "--flavor", e.what());
    }
  } else if constexpr (algebroid) {
    flavor = Flavor::AlgebroidMu;
  } else {
    flavor = parent->is_hopf() ? Flavor::HopfMu : Flavor::QuasiTypeI;
  }
  Mod M = o.regular ? regular_module(parent) : unit_mod;
  try {
    if (what == "trivial-coefficient") {
      const Index dm = M.dim(), n = parent->dim();
      Matrix<S> ev = Matrix<S>::Constant(dm, dm * n, parent->scalar(0));
      for (Index a = 0; a < dm; ++a)
        for (Index x = 0; x < n; ++x) ev(a, a * n + x) = parent->unit()(x);
      return to_json(Contramodule<Mod>(M, ev, flavor), named("evaluation at unit"), ref);
    }
    if (what == "candidate") {
      auto c = stable_ayd_candidate(M, flavor);
      if (!c) {
        report.checks.fail("candidate/exists", {}, "no contraaction satisfies the linear conditions");
        return OrderedJson();
      }
      report.checks.pass("candidate/exists");
      return to_json(*c, named("stable aYD candidate"), ref);
    }
  } catch (const FlavorError& e) {
    throw InputError(ErrorCode::Incompatible, "--flavor", e.what());
  }
  throw InputError(ErrorCode::Usage, "", "unknown generator " + what);
}

void cmd_generate(const std::string& what, const GenerateOptions& o, RunReport& report, Output& output) {
  report.data["generator"] = what;
  if (what == "group" || what == "sweedler" || what == "twisted-dual" || what == "enveloping") {
    const FieldSpec f = field_from_flag(o.field);
    with_scalar(f, [&](auto tag) { output.document = generate_structure<decltype(tag)>(what, o, f); });
  } else {
    Document alg = load_document(o.structure);
    if (!is_algebra(alg))
      throw InputError(ErrorCode::Usage, "/kind", alg.file + ": not a quasi_hopf or hopf_algebroid document");
    report.add_input(alg);
    with_scalar(alg.field, [&](auto tag) {
      with_parent<decltype(tag)>(alg, [&](const auto& parent) {
        OrderedJson doc = generate_dependent(what, o, alg, parent, report);
        if (!doc.is_null()) output.document = std::move(doc);
      });
    });
  }
  if (output.document) {
    report.data["kind"] = (*output.document)["kind"];
    report.data["output"] = output.out_path.empty() ? OrderedJson() : OrderedJson(output.out_path);
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-Hopf, Hopf algebroid and Hopf-cyclic computations over Q and GF(p)", "qha"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_flag("--pretty", settings.pretty, "human-readable report instead of JSON");
  app.add_flag("--reproducible", settings.reproducible, "omit timing so identical inputs give identical bytes");

  std::string check_path;
  auto* check = app.add_subcommand("check", "run the axiom checks for any input document");
  check->add_option("file", check_path, "structure, module, contramodule or module_algebra")->required();

  std::vector<std::string> ayd_paths, stab_paths, convert_paths, coh_paths;
  auto* ayd = app.add_subcommand("ayd", "check the anti-Yetter-Drinfeld conditions of a coefficient");
  ayd->add_option("files", ayd_paths, "[structure] coefficient")->required()->expected(1, 2);
  auto* stability = app.add_subcommand("stability", "check stability of a coefficient");
  stability->add_option("files", stab_paths, "[structure] coefficient")->required()->expected(1, 2);

  std::string to, out_path;
  auto* convert = app.add_subcommand("convert", "convert a quasi-Hopf coefficient between type I and type II");
  convert->add_option("files", convert_paths, "[structure] coefficient")->required()->expected(1, 2);
  convert->add_option("--to", to, "target flavor")->required()->check(CLI::IsMember({"typeI", "typeII"}));
  convert->add_option("--out", out_path, "write the converted coefficient here");

  Index degree = 4;
  std::string theory = "cyclic";
  auto* coh = app.add_subcommand("cohomology", "Hochschild or cyclic cohomology dimensions");
  coh->add_option("files", coh_paths, "[structure] module_algebra coefficient")->required()->expected(2, 3);
  coh->add_option("--degree", degree, "top degree N")->check(CLI::Range(0, 64));
  coh->add_option("--theory", theory, "hochschild or cyclic")->check(CLI::IsMember({"hochschild", "cyclic"}));

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "write a structure or coefficient file");
  generate->require_subcommand(1);
  generate->add_option("--field", gen.field, "Q or GF<p>");
  generate->add_option("--out", out_path, "output path (stdout when absent)");
  generate->add_option("--name", gen.name, "name stored in the document");
  generate->fallthrough();
  auto* g_group = generate->add_subcommand("group", "group algebra kG");
  g_group->add_option("--cyclic", gen.cyclic, "cyclic group of this order");
  g_group->add_flag("--s3", gen.s3, "symmetric group S3");
  g_group->add_option("--table", gen.table, "JSON file with a Cayley table of element indices");
  generate->add_subcommand("sweedler", "Sweedler's four-dimensional Hopf algebra");
  auto* g_twist = generate->add_subcommand("twisted-dual", "k^Z2 with the nontrivial 3-cocycle as associator");
  g_twist->add_flag("--non-cocycle", gen.non_cocycle, "use a cochain that is not a cocycle");
  auto* g_env = generate->add_subcommand("enveloping", "enveloping Hopf algebroid of k[x]/(x^m)");
  g_env->add_option("--degree", gen.degree, "m");
  for (auto [name, help] : {std::pair{"unit-algebra", "the unit object as a module algebra"},
                            std::pair{"trivial-coefficient", "unit object with evaluation at 1"},
                            std::pair{"candidate", "stable aYD contraaction found by a linear solve"}}) {
    auto* g = generate->add_subcommand(name, help);
    g->add_option("structure", gen.structure, "quasi_hopf or hopf_algebroid document")->required();
    if (std::string(name) != "unit-algebra") {
      g->add_option("--flavor", gen.flavor, "hopf, typeI, typeII or algebroid");
      g->add_flag("--regular", gen.regular, "use the regular module instead of the unit object");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Pass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return Pass;
  } catch (const CLI::ParseError& e) {
    err << "qha: " << e.what() << "\n";
    return UsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  Output output;
  output.out_path = out_path;
  try {
    if (check->parsed()) {
      report.command = "check";
      cmd_check(check_path, report);
    } else if (ayd->parsed()) {
      report.command = "ayd";
      cmd_coefficient(ayd_paths, false, report);
    } else if (stability->parsed()) {
      report.command = "stability";
      cmd_coefficient(stab_paths, true, report);
    } else if (convert->parsed()) {
      report.command = "convert";
      cmd_convert(convert_paths, to, out_path, report, output);
    } else if (coh->parsed()) {
      report.command = "cohomology";
      cmd_cohomology(coh_paths, degree, theory, report);
    } else {
      report.command = "generate";
      std::string what;
      for (auto* sub : generate->get_subcommands()) what = sub->get_name();
      cmd_generate(what, gen, report, output);
    }
  } catch (const InputError& e) {
    report.error = e;
  } catch (const FlavorError& e) {
    report.error = InputError(ErrorCode::Incompatible, "/flavor", e.what());
  } catch (const ParentMismatch& e) {
    report.error = InputError(ErrorCode::Incompatible, "", e.what());
  } catch (const DimensionError& e) {
    report.error = InputError(ErrorCode::Dimension, "", e.what());
  } catch (const std::exception& e) {
    report.error = InputError(ErrorCode::Usage, "", e.what());
  }

  if (output.document && !report.error) {
    const std::string text = dump(*output.document);
    if (output.out_path.empty()) {
      out << text;
      return report.exit_code();
    }
    try {
      write_text(output.out_path, text);
    } catch (const InputError& e) {
      report.error = e;
    }
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (settings.pretty)
    out << report_text(report, settings, ms);
  else
    out << dump(report_json(report, settings, ms));
  return report.exit_code();
}

}  // namespace qha::cli
