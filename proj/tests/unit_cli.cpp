#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hilbkit/cli.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/picard.hpp"
#include "hilbkit/verify.hpp"
#include "json.hpp"

using namespace hilbkit;

namespace {

const std::string data = HILBKIT_TEST_DATA;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("hilbkit_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("ideal files") {
  Ideal ideal = parse_ideal_text("ring n=3 param=0\n# comment\n\nx0*x2\nx1*x3\n");
  CHECK(ideal.ring().num_vars() == 4);
  CHECK(ideal.generators().size() == 2);
  CHECK(parse_ideal_text(ideal_text(ideal)) == ideal);
  CHECK_THROWS_AS(parse_ideal_text("x0\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text("ring n=3 param=0\nx9\n"), ParseError);
  CHECK_THROWS_AS(parse_ideal_text(""), ParseError);
}

TEST_CASE("hilbert prints the reference polynomial") {
  Run r = run({"hilbert", data + "/type_I_n3.ideal"});
  CHECK(r.code == 0);
  CHECK(r.out == "2*m + 2\n");
  Run j = run({"--format", "json", "hilbert", data + "/type_I_n3.ideal"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["polynomial"] == "2*m + 2");
  CHECK(doc["degree"] == "2");
}

TEST_CASE("gb, nf and hf") {
  Run g = run({"--order", "lex", "gb", data + "/twisted_cubic.ideal"});
  CHECK(g.code == 0);
  CHECK(g.out.find("x1^2") != std::string::npos);
  Run n = run({"nf", data + "/type_I_n3.ideal", "--poly", "x0*x2 + x3^2"});
  CHECK(n.out == "x3^2\n");
  Run h = run({"hf", data + "/type_IV_n4.ideal", "--degree", "2"});
  CHECK(h.out == "11\n");
}

TEST_CASE("ideal operations") {
  std::string a = temp_file("a.ideal", "ring n=3 param=0\nx0\nx1\n");
  std::string b = temp_file("b.ideal", "ring n=3 param=0\nx2\nx3\n");
  Run i = run({"intersect", a, b});
  CHECK(i.code == 0);
  CHECK(i.out == "x1*x3\nx0*x3\nx1*x2\nx0*x2\n");
  std::string x0 = temp_file("x0.ideal", "ring n=3 param=0\nx0\n");
  CHECK(run({"quotient", data + "/type_I_n3.ideal", x0}).out == "x3\nx2\n");
  Run s = run({"saturate", data + "/type_I_n3.ideal"});
  CHECK(s.code == 0);
}

TEST_CASE("limit and classify") {
  Run l = run({"limit", data + "/family_type_III_n3.ideal"});
  CHECK(l.code == 0);
  CHECK(l.out.find("flat true") != std::string::npos);
  Run c = run({"--seed", "3", "classify", data + "/type_IV_n4.ideal"});
  CHECK(c.code == 0);
  CHECK(c.out == "IV\n");
  Run bad = run({"classify", data + "/twisted_cubic.ideal"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("Hilbert polynomial") != std::string::npos);
}

TEST_CASE("tangent") {
  Run t = run({"--format", "json", "tangent", data + "/type_IV_n4.ideal"});
  CHECK(t.code == 0);
  auto doc = nlohmann::json::parse(t.out);
  CHECK(doc["dimension"] == 20);
  CHECK(doc["basis"].size() == 20);
}

TEST_CASE("cone") {
  Run c = run({"cone", "--space", "hn", "--n", "5", "--divisor", "0,6"});
  CHECK(c.code == 0);
  CHECK(c.out.find("fano false") != std::string::npos);
  CHECK(c.out.find("model Theta_n") != std::string::npos);
  Run j = run({"--format", "json", "cone", "--space", "wn", "--n", "4", "--divisor", "1,1,1"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["model"] == "W_n");
  CHECK(doc["fano"] == true);
  CHECK(run({"cone", "--space", "hn", "--n", "4", "--divisor", "0,0"}).code == 1);
  CHECK(run({"cone", "--space", "hn", "--n", "4", "--divisor", "a,b"}).code == 2);
}

TEST_CASE("usage and IO errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"hilbert"}).code == 2);
  CHECK(run({"--format", "xml", "hilbert", data + "/type_I_n3.ideal"}).code == 2);
  CHECK(run({"hilbert", data + "/missing.ideal"}).code == 2);
  std::string garbage = temp_file("garbage.ideal", "ring n=3 param=0\nx0 +* x1\n");
  CHECK(run({"hilbert", garbage}).code == 2);
  CHECK(run({"verify", "--n-min", "5", "--n-max", "4"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify is deterministic and honours fault injection") {
  Run a = run({"--format", "json", "verify", "--n-min", "3", "--n-max", "3", "--seed", "7"});
  Run b = run({"--format", "json", "verify", "--n-min", "3", "--n-max", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(doc["summary"]["total"].get<int>() >= 25);
  CHECK_FALSE(doc["checks"][0].contains("runtime_ms"));

  PairingTable bad = default_pairing_table(Space::H);
  bad.curves[2].entries["E"].value = 4;
  std::string path = temp_file("pairing.json", to_json(bad).dump());
  Run f = run({"verify", "--n-min", "3", "--n-max", "3", "--pairing", path});
  CHECK(f.code == 1);
  CHECK(f.out.find("fail  relations.hn.classes") != std::string::npos);

  std::string junk = temp_file("junk.json", "{not json");
  CHECK(run({"verify", "--n-max", "3", "--pairing", junk}).code == 2);
}

TEST_CASE("pairing tables round trip through JSON") {
  for (Space s : {Space::H, Space::W}) {
    PairingTable t = pairing_table_from_json(to_json(default_pairing_table(s)));
    CHECK(to_json(t) == to_json(default_pairing_table(s)));
    CHECK(solve_relations(t).classes == solve_relations(default_pairing_table(s)).classes);
  }
}
