#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "antireg/cli.hpp"
#include "antireg/serialize.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = antireg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const json& content) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/antireg_test_" + name + ".json";
  std::ofstream(path) << content.dump();
  return path;
}

}  // namespace

TEST_CASE("cli gen and build") {
  auto r = run({"gen", "--n", "5", "--k", "3", "--connected"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["string"] == "00101");
  r = run({"gen", "--n", "2", "--k", "3", "--connected"});
  CHECK(r.code == 2);
  r = run({"build", "--string", "00101", "--k", "3"});
  CHECK(r.code == 0);
  const auto h = antireg::hypergraph_from_json(json::parse(r.out));
  CHECK(h.edge_count() == 7);
  CHECK(run({"build", "--string", "01", "--k", "3"}).code == 2);
  CHECK(run({"build", "--string", "00101"}).code == 2);
}

TEST_CASE("cli ipoly") {
  auto r = run({"ipoly", "--string", "00101", "--k", "3", "--method", "all"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["agree"] == true);
  const json expected = {"1", "5", "10", "3"};
  for (const char* m : {"brute", "trinks", "recurrence", "semiclosed", "closed"}) {
    CAPTURE(m);
    CHECK(j["methods"][m] == expected);
  }

  r = run({"ipoly", "--file", temp_file("h2", antireg::to_json(fixtures::h2()))});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["methods"]["trinks"] == json{"1", "5", "10", "6", "1"});
  CHECK(json::parse(r.out)["skipped"].size() == 3);

  // closed forms need k = 3; asking for them explicitly on k = 4 is a usage error
  CHECK(run({"ipoly", "--string", "00001", "--k", "4", "--method", "closed"}).code == 2);
  CHECK(run({"ipoly", "--string", "00101", "--k", "3", "--method", "bogus"}).code == 2);
  CHECK(run({"ipoly", "--string", "0000000000000000000000000", "--k", "3", "--method", "brute"}).code == 3);
  r = run({"ipoly", "--string", "0000000000000000000000000", "--k", "3", "--method", "brute",
           "--unsafe-no-guard"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning") != std::string::npos);

  r = run({"ipoly", "--string", "00101", "--k", "3", "--method", "recurrence", "--format", "text"});
  CHECK(r.out == "recurrence: 1 + 5x + 10x^2 + 3x^3\nagree: yes\n");
}

TEST_CASE("cli label") {
  auto r = run({"label", "--string", "0010100011101", "--k", "3"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["tau"] == "223");
  CHECK(j["c"] == json{"64", "64", "96", "48", "112", "8", "12", "14", "204", "204", "204", "-185", "401"});
  r = run({"label", "--string", "0010101010101", "--k", "3"});
  j = json::parse(r.out);
  CHECK(j["c"] == json{"64", "64", "96", "48", "112", "8", "168", "-60", "276", "-222", "506", "-559", "1005"});
  r = run({"label", "--string", "000", "--k", "3", "--format", "text"});
  CHECK(r.out == "c: 0 0 0\ntau: 3\n");
}

TEST_CASE("cli verify-t2 / verify-t3 / feasible-t2 / recognize / degrees") {
  const auto h1 = temp_file("h1", antireg::to_json(fixtures::h1()));
  const auto h2 = temp_file("h2", antireg::to_json(fixtures::h2()));
  const auto labels = temp_file("l1", {{"c", {"-2", "-1", "0", "1", "2"}}, {"tau", "0"}});

  CHECK(run({"verify-t2", "--string", "0010100011101", "--k", "3", "--labels", "auto"}).code == 0);
  CHECK(run({"verify-t2", "--file", h1, "--labels", labels}).code == 0);
  auto r = run({"verify-t2", "--file", h2, "--labels", labels});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["witness"].is_array());
  r = run({"verify-t2", "--file", h2, "--labels", "auto"});
  CHECK(r.code == 2);
  CHECK(r.err.find("building string") != std::string::npos);
  CHECK(run({"verify-t2", "--file", h2}).code == 2);

  CHECK(run({"verify-t3", "--file", h1}).code == 0);
  CHECK(run({"verify-t3", "--file", h2}).code == 1);

  CHECK(run({"feasible-t2", "--file", h1}).code == 0);
  r = run({"feasible-t2", "--file", h2});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["feasible"] == false);
  CHECK_FALSE(json::parse(r.out)["certificate"].empty());

  r = run({"recognize", "--file", temp_file("ar", antireg::to_json(antireg::build_hypergraph(
                                                        antireg::BuildingString(3, "001101"))))});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["string"] == "001101");
  CHECK(run({"recognize", "--file", h2}).code == 1);

  r = run({"degrees", "--string", "000010", "--k", "4"});
  CHECK(json::parse(r.out)["degrees"] == json{3, 3, 3, 3, 4, 0});
  r = run({"degrees", "--file", h1, "--format", "text"});
  CHECK(r.out == "degrees: 1 2 2 3 4\nmultiplicities: 1x1 2x2 3x1 4x1\n");
}

TEST_CASE("cli input errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify-t3", "--file", "/nonexistent/h.json"}).code == 2);
  const auto junk = temp_file("junk", {{"n", 3}, {"edges", {{1, 7}}}});
  CHECK(run({"verify-t3", "--file", junk}).code == 2);
  CHECK(run({"degrees", "--file", junk, "--string", "001", "--k", "3"}).code == 2);
  CHECK(run({"logconcave", "--k", "3"}).code == 2);
  CHECK(run({"sweep", "--k-max", "3", "--n-max", "30"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli logconcave and sweep") {
  auto r = run({"logconcave", "--k", "4", "--max-n", "20"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["instances"].size() == 37);
  r = run({"logconcave", "--string", "00101", "--k", "3"});
  CHECK(r.code == 0);

  setenv("NUM_WORKERS", "1", 1);
  const auto one = run({"sweep", "--k-max", "4", "--n-max", "9"});
  setenv("NUM_WORKERS", "3", 1);
  const auto three = run({"sweep", "--k-max", "4", "--n-max", "9"});
  unsetenv("NUM_WORKERS");
  CHECK(one.code == 0);
  CHECK(one.out == three.out);
  const auto j = json::parse(one.out);
  CHECK(j["ok"] == true);
  CHECK(j["disagreements"].empty());
}
