#include "cli.hpp"

#include "charlab/render.hpp"
#include "charlab/report.hpp"

#include "doctest.h"

#include <sstream>

using namespace charlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "charlab");
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("eval output and exit codes") {
  const auto r = run({"eval", "--family", "gl", "--shape", "2,2", "--vars", "4", "--principal"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["value"] == "20");
  CHECK(run({"eval", "--family", "o-even", "--shape", "0,0", "--vars", "2", "--principal"}).code == 2);
  CHECK(run({"eval", "--family", "sp", "--shape", "1", "--vars", "1", "--at", "1"}).code == 3);
  CHECK(run({"eval", "--family", "gl", "--shape", "1", "--vars", "1", "--at", "2", "--principal"}).code == 2);
  CHECK(run({"eval", "--family", "gl", "--shape", "1", "--vars", "1", "--at", "2", "--negate"}).code == 2);
  CHECK(run({"eval", "--family", "gl", "--shape", "1", "--vars", "1", "--at", "2,3"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("verification reports serialize every number as a string") {
  const auto r = run({"verify", "--identity", "thm3", "--m", "1", "--n", "2", "--mode", "random", "--trials", "4", "--seed", "9"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["trials"] == "4");
  CHECK(j["seed"] == "9");
  CHECK(j["params"]["m"] == "1");
  CHECK(j["verdict"] == "equal");
  VerificationReport bad;
  bad.identity = "x";
  bad.counterexample = Counterexample{{Rational(1, 2)}, "1", "2"};
  const auto jb = to_json(bad);
  CHECK(jb["verdict"] == "counterexample");
  CHECK(jb["counterexample"]["point"][0] == "1/2");
}

TEST_CASE("identical invocations are byte identical") {
  const std::vector<const char*> args{"lemma", "--which", "3", "--N", "2", "--mode", "random", "--trials", "5", "--seed", "3"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("count reports") {
  const auto r = run({"count", "--family", "spp", "--m", "1", "--n", "2"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["methods"]["bruteforce"] == "10");
  CHECK(j["methods"]["product"] == "10");
  CHECK(j["consistent"] == true);
  CHECK(run({"count", "--family", "tcpp", "--m", "1", "--n", "2", "--b", "3"}).code == 2);
}

TEST_CASE("svg rendering") {
  const auto empty = render_svg(*nth_pp(2, 2, 2, 0));
  CHECK(occurrences(empty, "class=\"top\"") == 4);
  CHECK(occurrences(empty, "<polygon") == 12);
  const auto full = render_svg(*nth_pp(2, 2, 2, 19));
  CHECK(occurrences(full, "class=\"xwall\"") == 4);
  CHECK(full != empty);
  CHECK(render_svg(*nth_pp(0, 1, 1, 0)).find("<polygon") != std::string::npos);
  CHECK(empty.find("-0.0000") == std::string::npos);
}
