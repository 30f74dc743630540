#include "qha/commands.hpp"
#include "qha/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

using namespace qha;
using namespace qha::io;
using namespace qha::testing;
namespace fs = std::filesystem;

namespace {

Document in_memory(const OrderedJson& j) { return document_from_json(Json::parse(j.dump()), "<memory>", {}); }

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.code();
  }
  FAIL("no InputError raised");
  return ErrorCode::Usage;
}

template <class S>
void quasi_roundtrip(const AlgebraPtr<S>& H) {
  const OrderedJson j = to_json(H->data());
  const auto back = parse_quasi_hopf<S>(in_memory(j));
  CHECK(back->data() == H->data());
  CHECK(back->name() == H->name());
  CHECK(to_json(back->data()).dump() == j.dump());
}

struct Run {
  int code = -1;
  std::string out;
};

std::string binary() {
  const char* b = std::getenv("QHA_BIN");
  REQUIRE_MESSAGE(b, "QHA_BIN must point at the qha executable");
  return b;
}

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + binary() + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json report(const Run& r) { return Json::parse(r.out); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Workdir {
  fs::path dir;
  Workdir() {
    dir = fs::temp_directory_path() / ("qha_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Workdir() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return "'" + (dir / name).string() + "'"; }
  fs::path path(const std::string& name) const { return dir / name; }
};

void edit(const fs::path& p, const std::function<void(Json&)>& f) {
  Json j = Json::parse(slurp(p));
  f(j);
  std::ofstream(p) << j.dump(2);
}

}  // namespace

TEST_CASE("structures survive parse, serialize, parse") {
  quasi_roundtrip(group_algebra<Rational>(cyclic_group_table(2), Q, "kC2"));
  quasi_roundtrip(group_algebra<Zp>(symmetric_group_s3_table(), F5, "kS3"));
  quasi_roundtrip(sweedler_h4<Rational>(Q));
  quasi_roundtrip(twisted_dual_group_algebra<Zp>(cyclic_group_table(2), z2_cocycle<Zp>(F5), F5));

  auto A = enveloping_algebroid<Rational>(truncated_polynomial_ring<Rational>(Q, 2));
  const OrderedJson aj = to_json(A->data());
  const auto A2 = parse_algebroid<Rational>(in_memory(aj));
  CHECK(A2->data() == A->data());
  CHECK(to_json(A2->data()).dump() == aj.dump());
}

TEST_CASE("dependent documents roundtrip against their parent") {
  auto H = sweedler_h4<Zp>(F5);
  const OrderedJson ref = to_json(H->data());
  auto reg = regular_module(H);
  const auto M = parse_module<HModule<Zp>>(in_memory(to_json(reg, "reg", ref)), H);
  REQUIRE(M.dim() == reg.dim());
  for (Index i = 0; i < H->dim(); ++i) CHECK(equal<Zp>(M.action(i), reg.action(i)));

  auto cand = stable_ayd_candidate(regular_module(H), Flavor::HopfMu);
  REQUIRE(cand.has_value());
  const OrderedJson cj = to_json(*cand, "cand", ref);
  const auto C = parse_contramodule<HModule<Zp>>(in_memory(cj), H);
  CHECK(C.flavor() == Flavor::HopfMu);
  CHECK(equal<Zp>(C.mu(), cand->mu()));
  CHECK(to_json(C, "cand", ref).dump() == cj.dump());

  auto E = enveloping_algebroid<Rational>(truncated_polynomial_ring<Rational>(Q, 2));
  auto unit = unit_algebra(base_module(E));
  const OrderedJson uj = to_json(unit, "unit", to_json(E->data()));
  const auto U = parse_module_algebra<AlgebroidModule<Rational>>(in_memory(uj), E);
  CHECK(equal<Rational>(U.mult, unit.mult));
  CHECK(equal<Rational>(U.unit, unit.unit));
  CHECK(check_algebra_object(U).passed());
}

TEST_CASE("parse errors carry distinct codes and locations") {
  auto H = group_algebra<Rational>(cyclic_group_table(2), Q, "kC2");
  const OrderedJson good = to_json(H->data());

  OrderedJson j = good;
  j["field"] = {{"type", "GFp"}, {"p", 4}};
  try {
    in_memory(j);
    FAIL("accepted p = 4");
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
    CHECK(std::string(e.what()).find("non-prime characteristic") != std::string::npos);
  }

  j = good;
  j["mult"][1].erase(1);
  try {
    parse_quasi_hopf<Rational>(in_memory(j));
    FAIL("accepted a short mult tensor");
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::Dimension);
    CHECK(e.pointer() == "/mult/1");
    CHECK(std::string(e.what()).find("mult") != std::string::npos);
  }

  j = good;
  j["counit"][0] = "2/0";
  CHECK(error_of([&] { parse_quasi_hopf<Rational>(in_memory(j)); }) == ErrorCode::ScalarParse);
  j = good;
  j["counit"][0] = 1;
  CHECK(error_of([&] { parse_quasi_hopf<Rational>(in_memory(j)); }) == ErrorCode::Schema);
  j = good;
  j.erase("phi");
  CHECK(error_of([&] { parse_quasi_hopf<Rational>(in_memory(j)); }) == ErrorCode::Schema);
  j = good;
  j["kind"] = "bialgebra";
  CHECK(error_of([&] { in_memory(j); }) == ErrorCode::Schema);

  const auto gf = twisted_dual_group_algebra<Zp>(cyclic_group_table(2), z2_cocycle<Zp>(F5), F5);
  const auto parsed = parse_quasi_hopf<Zp>(in_memory(to_json(gf->data())));
  CHECK(parsed->data().phi(7) == from_int<Zp>(4, F5));

  std::set<std::string> names;
  for (auto c : {ErrorCode::Io, ErrorCode::Syntax, ErrorCode::Schema, ErrorCode::NonPrime, ErrorCode::Dimension,
                 ErrorCode::ScalarParse, ErrorCode::Incompatible, ErrorCode::Usage, ErrorCode::Limit})
    names.insert(error_code_name(c));
  CHECK(names.size() == 9);
}

TEST_CASE("content hash ignores key order and whitespace") {
  const Json a = Json::parse(R"({"b": ["1", "2"], "a": {"y": 1, "x": 2}})");
  const Json b = Json::parse("{\"a\":{\"x\":2,\"y\":1},\n \"b\":[\"1\",\"2\"]}");
  CHECK(content_hash(a) == content_hash(b));
  CHECK(content_hash(a) != content_hash(Json::parse(R"({"b": ["2", "1"], "a": {"y": 1, "x": 2}})")));
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("binary: check, cohomology, convert and exit codes") {
  Workdir w;
  REQUIRE(run("generate group --cyclic 2 --out " + w("kC2.json")).code == 0);
  REQUIRE(run("generate unit-algebra " + w("kC2.json") + " --out " + w("unitA.json")).code == 0);
  REQUIRE(run("generate trivial-coefficient " + w("kC2.json") + " --out " + w("trivialM.json")).code == 0);

  SUBCASE("check passes on kC2") {
    const Run r = run("check " + w("kC2.json"));
    CHECK(r.code == 0);
    const Json j = report(r);
    CHECK(j["result"] == "pass");
    CHECK(j["checks"].size() > 10);
    CHECK(j["inputs"][0]["hash"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  }

  SUBCASE("a mutated multiplication fails with exit 1") {
    edit(w.path("kC2.json"), [](Json& j) { j["mult"][1][1] = std::vector<std::string>{"0", "1"}; });
    const Run r = run("check " + w("kC2.json"));
    CHECK(r.code == 1);
    const Json j = report(r);
    CHECK(j["result"] == "fail");
    CHECK(!j["counterexamples"].empty());
  }

  SUBCASE("cyclic and Hochschild cohomology of the unit") {
    const std::string files = w("kC2.json") + " " + w("unitA.json") + " " + w("trivialM.json");
    Run r = run("cohomology " + files + " --degree 4 --theory cyclic");
    CHECK(r.code == 0);
    CHECK(report(r)["data"]["dims"] == Json::parse("[1,0,1,0,1]"));
    r = run("cohomology " + files + " --degree 3 --theory hochschild");
    CHECK(r.code == 0);
    CHECK(report(r)["data"]["dims"] == Json::parse("[1,0,0,0]"));
    r = run("cohomology " + w("unitA.json") + " " + w("trivialM.json") + " --degree 2 --theory cyclic");
    CHECK(r.code == 0);
    CHECK(report(r)["data"]["dims"] == Json::parse("[1,0,1]"));
  }

  SUBCASE("reproducible reports are byte-identical") {
    const std::string args = "--reproducible cohomology " + w("kC2.json") + " " + w("unitA.json") + " " +
                             w("trivialM.json") + " --degree 3";
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!report(a).contains("timing"));
    CHECK(report(run("check " + w("kC2.json"))).contains("timing"));
  }

  SUBCASE("pretty output is plain text") {
    const Run r = run("check " + w("kC2.json") + " --pretty --reproducible");
    CHECK(r.code == 0);
    CHECK(r.out.find("result:  pass") != std::string::npos);
    CHECK(r.out.find("PASS quasi_bialgebra/") != std::string::npos);
  }

  SUBCASE("non-prime field is an input error") {
    edit(w.path("kC2.json"), [](Json& j) { j["field"] = {{"type", "GFp"}, {"p", 4}}; });
    const Run r = run("check " + w("kC2.json"));
    CHECK(r.code == 2);
    CHECK(report(r)["error"]["code"] == "E_NONPRIME");
  }

  SUBCASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("cohomology " + w("kC2.json") + " " + w("unitA.json")).code == 2);
    CHECK(run("convert " + w("trivialM.json") + " --to typeIII").code == 2);
    CHECK(run("check " + w("missing.json")).code == 2);
  }

}

TEST_CASE("binary: type conversion roundtrip and flavor mismatches") {
  Workdir w;
  REQUIRE(run("generate twisted-dual --field GF5 --out " + w("tw.json")).code == 0);
  REQUIRE(run("generate trivial-coefficient " + w("tw.json") + " --out " + w("coeffI.json")).code == 0);
  Run r = run("convert " + w("coeffI.json") + " --to typeII --out " + w("coeffII.json"));
  CHECK(r.code == 0);
  CHECK(report(r)["data"]["to"] == "typeII");
  REQUIRE(run("convert " + w("coeffII.json") + " --to typeI --out " + w("back.json")).code == 0);
  const Json orig = Json::parse(slurp(w.path("coeffI.json")));
  const Json conv = Json::parse(slurp(w.path("coeffII.json")));
  const Json back = Json::parse(slurp(w.path("back.json")));
  CHECK(conv["flavor"] == "typeII");
  CHECK(orig["mu"].dump() == back["mu"].dump());
  CHECK(slurp(w.path("coeffI.json")) == slurp(w.path("back.json")));
  CHECK(run("ayd " + w("coeffII.json")).code == 0);
  CHECK(run("stability " + w("coeffII.json")).code == 0);

  REQUIRE(run("generate enveloping --degree 2 --field GF5 --out " + w("env.json")).code == 0);
  REQUIRE(run("generate candidate " + w("env.json") + " --out " + w("envC.json")).code == 0);
  r = run("ayd " + w("tw.json") + " " + w("envC.json"));
  CHECK(r.code == 2);
  CHECK(report(r)["error"]["code"] == "E_INCOMPATIBLE");
  r = run("generate trivial-coefficient " + w("env.json") + " --flavor typeI");
  CHECK(r.code == 2);
  r = run("convert " + w("envC.json") + " --to typeII");
  CHECK(r.code == 2);
  CHECK(run("check " + w("env.json")).code == 0);
  CHECK(run("ayd " + w("envC.json")).code == 0);

  REQUIRE(run("generate unit-algebra " + w("env.json") + " --out " + w("envA.json")).code == 0);
  const std::string files = w("envA.json") + " " + w("envC.json") + " --degree 3";
  CHECK(run("cohomology " + files).code == 0);
  r = run("cohomology " + files, "QHA_MAX_DIM=16");
  CHECK(r.code == 2);
  CHECK(report(r)["error"]["code"] == "E_LIMIT");
}

TEST_CASE("binary: scaled contraaction fails stability with a witness") {
  Workdir w;
  REQUIRE(run("generate group --cyclic 2 --out " + w("kC2.json")).code == 0);
  REQUIRE(run("generate trivial-coefficient " + w("kC2.json") + " --out " + w("M.json")).code == 0);
  edit(w.path("M.json"), [](Json& j) {
    for (auto& row : j["mu"])
      for (auto& col : row)
        for (auto& x : col) x = x == "1" ? "2" : x.get<std::string>();
  });
  const Run r = run("stability " + w("M.json"));
  CHECK(r.code == 1);
  const Json j = report(r);
  REQUIRE(!j["counterexamples"].empty());
  CHECK(j["counterexamples"][0]["witness"].size() >= 1);
}
