#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "closure_fixtures.hpp"
#include "doctest.h"
#include "holo/errors.hpp"
#include "holo/json_io.hpp"
#include "holo/primes.hpp"

using namespace holo;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / "holo_cli_test";
  fs::create_directories(p);
  return p;
}

int run(const std::string& args, std::string* out = nullptr) {
  const fs::path log = scratch() / "stdout.txt";
  const std::string cmd = std::string(HOLO_CLI) + " " + args + " > " + log.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(status);
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

}  // namespace

TEST_CASE("operator JSON round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Recurrence r = fixtures::random_recurrence(rng, 3, 3);
    const Operator back = operator_from_json(Json::parse(to_json(r).dump()));
    REQUIRE(std::holds_alternative<Recurrence>(back));
    CHECK(std::get<Recurrence>(back) == r);
    CHECK(std::get<Recurrence>(back).initial_terms() == r.initial_terms());
    const DiffOp ode = rec_to_ode(r);
    const Operator back2 = operator_from_json(Json::parse(to_json(ode).dump()));
    CHECK(std::get<DiffOp>(back2) == ode);
  }
  const Json j = to_json(Recurrence({Poly{Rational(1), Rational(1, 2)}, Poly(-3)}));
  CHECK(j["kind"] == "recurrence");
  CHECK(j["order"] == 1);
  // Stored with the joint content removed.
  CHECK(j["coefficients"][0] == Json::array({"2", "1"}));
  CHECK(j["coefficients"][1] == Json::array({"-6"}));
}

TEST_CASE("malformed operator JSON") {
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"kind":"ode"})")), MalformedInput);
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"kind":"mystery","coefficients":[["1"]]})")), MalformedInput);
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"kind":"ode","order":3,"coefficients":[["1"],["2"]]})")),
                  MalformedInput);
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"kind":"ode","coefficients":[["1/0"]]})")), MalformedInput);
  CHECK_THROWS_AS(operator_from_json(Json::parse(R"({"kind":"recurrence","coefficients":[["x"]]})")), MalformedInput);
  CHECK(parse_rational_arg("0.25") == Rational(1, 4));
  CHECK(parse_rational_arg("010") == 10);
  CHECK_THROWS_AS(parse_rational_arg("0x10"), MalformedInput);
  CHECK(parse_rational_arg("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational_arg("1.2.3"), MalformedInput);
}

TEST_CASE("cli witness log writes a schema-conforming report") {
  const fs::path out = scratch() / "r.json";
  fs::remove(out);
  CHECK(run("witness log --nmax 2000 --out " + out.string()) == 0);
  std::ifstream in(out);
  const Json j = Json::parse(in);
  for (const char* key : {"experiment", "params", "samples", "verdicts", "precision_bits", "runtime_ms"})
    CHECK(j.contains(key));
  CHECK(j["experiment"] == "log");
  for (const auto& s : j["samples"])
    for (const char* key : {"x", "value", "reference", "deviation"}) CHECK(s[key].is_number());
  for (const auto& [name, v] : j["verdicts"].items()) CHECK(v["value"].is_boolean());
  CHECK(j["verdicts"]["bounded"]["value"] == true);
}

TEST_CASE("cli guess on primes") {
  std::ostringstream b;
  b << "# primes\n";
  for (std::uint64_t n = 1; n <= 300; ++n) b << n << " " << primes::nth_prime(n) << "\n";
  write(scratch() / "primes.bfile", b.str());
  std::string out;
  CHECK(run("--json guess --input " + (scratch() / "primes.bfile").string() + " --max-order 4 --max-degree 4", &out) == 0);
  CHECK(Json::parse(out)["found"] == false);
  write(scratch() / "gap.bfile", "1 2\n2 3\n4 7\n");
  CHECK(run("guess --input " + (scratch() / "gap.bfile").string()) == 3);
}

TEST_CASE("cli classify") {
  write(scratch() / "ode.json", R"({"kind":"ode","order":2,"coefficients":[["1","-1"],["-1"],[]]})");
  std::string out;
  CHECK(run("--json classify --ode " + (scratch() / "ode.json").string() + " --point 1", &out) == 0);
  const Json j = Json::parse(out);
  CHECK(j["kind"] == "regular_singular");
  CHECK(j["indicial_exponents"][0]["root"] == "0");
  CHECK(j["indicial_exponents"][0]["multiplicity"] == 2);
  CHECK(run("classify --ode " + (scratch() / "ode.json").string() + " --point pi") == 2);
  write(scratch() / "bad.json", "{not json");
  CHECK(run("classify --ode " + (scratch() / "bad.json").string() + " --point 1") == 3);
}

TEST_CASE("cli exit codes") {
  CHECK(run("") == 2);
  CHECK(run("nonsense") == 2);
  CHECK(run("guess") == 2);
  CHECK(run("transfer --alpha -1") == 2);
  CHECK(run("--help") == 0);
  std::string out;
  CHECK(run("primes nth 100", &out) == 0);
  CHECK(out == "541\n");
  CHECK(run("primes pi 3000000000") == 4);
  const int status = std::system(("HOLO_PRECISION_CAP=256 " + std::string(HOLO_CLI) + " witness log --nmax 400 >/dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(status) == 4);
}
