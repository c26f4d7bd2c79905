#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hangwire/cli.hpp"
#include "hangwire/construct.hpp"
#include "hangwire/render.hpp"

using namespace hangwire;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0, at = 0;
  while ((at = text.find(needle, at)) != std::string::npos) {
    ++count;
    at += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("check exit codes") {
  Run ok = cli({"check", "--word", "1+2-1-2", "--puzzle", "1-of-2"});
  CHECK(ok.status == 0);
  CHECK(ok.out == "ok (full)\n");

  Run bad = cli({"check", "--word", "1+2", "--puzzle", "1-of-2"});
  CHECK(bad.status == 1);
  CHECK(bad.out.find("counterexample: remove {1}") != std::string::npos);

  Run usage = cli({"check", "--word", "1+0", "--puzzle", "1-of-2"});
  CHECK(usage.status == 2);
  CHECK(usage.err.find("usage error") != std::string::npos);

  Run flag = cli({"check", "--word", "1", "--nope"});
  CHECK(flag.status == 2);

  Run none = cli({});
  CHECK(none.status == 2);
}

TEST_CASE("construct") {
  Run w = cli({"construct", "--puzzle", "2-of-4", "--method", "wastlund"});
  CHECK(w.status == 0);
  CHECK(w.out.find("reduced: 24") != std::string::npos);
  CHECK(w.out.find("verdict: ok") != std::string::npos);

  Run split = cli({"construct", "--puzzle", "2-of-4"});
  CHECK(split.status == 0);
  CHECK(split.out.find("unreduced: 32") != std::string::npos);

  // Convention flag translates before dispatch; suffix wins over flag.
  Run conv = cli({"construct", "--puzzle", "3-of-4", "--convention",
                  "wastlund", "--method", "extension"});
  CHECK(conv.status == 0);
  CHECK(conv.out.find("puzzle: 2-of-4") != std::string::npos);
  Run suffix = cli({"construct", "--puzzle", "3-of-4@wastlund", "--method",
                    "extension"});
  CHECK(suffix.out == conv.out);

  Run mismatch =
      cli({"construct", "--puzzle", "2-of-4", "--method", "chain"});
  CHECK(mismatch.status == 2);

  Run unknown =
      cli({"construct", "--puzzle", "2-of-4", "--method", "sorcery"});
  CHECK(unknown.status == 2);

  Run skip = cli({"construct", "--puzzle", "2-of-4", "--no-verify"});
  CHECK(skip.status == 0);
  CHECK(skip.out.find("verdict: skipped") != std::string::npos);
}

TEST_CASE("construct json round-trips through check") {
  struct Case {
    std::string puzzle, method;
  };
  std::vector<Case> cases = {
      {"1-of-4", "balanced"},   {"4-of-4", "chain"},
      {"3-of-4", "chain-updown"}, {"2-of-4", "wastlund"},
      {"6-of-8", "wastlund"},   {"2-of-5", "extension"},
      {"3-of-5", "extension"},  {"2-of-4", "split"},
      {"3-of-6", "split"},      {"2-of-8", "split"},
      {"4-of-7", "split"},
  };
  for (const auto& c : cases) {
    Run made = cli({"construct", "--puzzle", c.puzzle, "--method", c.method,
                    "--json"});
    REQUIRE(made.status == 0);
    auto record = nlohmann::json::parse(made.out);
    CHECK(record["verdict"]["ok"] == true);
    Run checked = cli({"check", "--word", record["word"].get<std::string>(),
                       "--puzzle", c.puzzle, "--mode", "essential"});
    CHECK(checked.status == 0);
  }
}

TEST_CASE("canon") {
  Run r = cli({"canon", "--word", "2+3+1-2-3-1"});
  CHECK(r.status == 0);
  CHECK(r.out == "1+2+3-1-2-3\n");

  Run j = cli({"canon", "--word", "2+3+1-2-3-1", "--json"});
  auto record = nlohmann::json::parse(j.out);
  CHECK(record["canonical"] == "1+2+3-1-2-3");
  CHECK(record["nails"] == 3);

  CHECK(cli({"canon", "--word", ""}).status == 2);  // zero word
}

TEST_CASE("search") {
  Run r = cli({"search", "--puzzle", "2-of-3", "--exact-len", "6", "--json"});
  CHECK(r.status == 0);
  auto record = nlohmann::json::parse(r.out);
  CHECK(record["solutions"] ==
        nlohmann::json::array({"1+2+3-1-2-3"}));
  CHECK(record["sharding"]["shards"] == 1);

  Run m = cli({"search", "--puzzle", "1-of-3", "--max-len", "10", "--json"});
  auto minimum = nlohmann::json::parse(m.out);
  CHECK(minimum["min_length"] == 10);

  Run both = cli({"search", "--puzzle", "2-of-3", "--exact-len", "6",
                  "--max-len", "8"});
  CHECK(both.status == 2);

  Run neither = cli({"search", "--puzzle", "2-of-3"});
  CHECK(neither.status == 2);

  Run gated = cli({"search", "--puzzle", "2-of-4", "--exact-len", "14"});
  CHECK(gated.status == 2);
  CHECK(gated.err.find("--long") != std::string::npos);
}

TEST_CASE("table") {
  Run r = cli({"table", "--k", "2", "--max-i", "4"});
  CHECK(r.status == 0);
  CHECK(r.out.find("32") != std::string::npos);
  CHECK(r.out.find("320") != std::string::npos);
  CHECK(r.out.find("2432") != std::string::npos);

  Run j = cli({"table", "--k", "1", "--max-i", "3", "--json"});
  auto record = nlohmann::json::parse(j.out);
  CHECK(record["rows"].back()["length"] == 64);
}

TEST_CASE("catalog") {
  Run list = cli({"catalog"});
  CHECK(list.status == 0);
  CHECK(list.out.find("demaine80: unreduced 80, reduced 68, verdict ok") !=
        std::string::npos);
  CHECK(count_occurrences(list.out, "verdict ok") == catalog_names().size());

  Run one = cli({"catalog", "optimal16-w1", "--json"});
  auto record = nlohmann::json::parse(one.out);
  CHECK(record["word"] == "1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4");
  CHECK(record["reduced"] == 16);

  CHECK(cli({"catalog", "nope"}).status == 2);
}

TEST_CASE("render structure") {
  Run r = cli({"render", "--word", "1+2-1-2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("<svg xmlns=\"http://www.w3.org/2000/svg\" "
                   "version=\"1.1\"") != std::string::npos);
  CHECK(count_occurrences(r.out, "<circle") == 2);
  CHECK(count_occurrences(r.out, "<path") == 1);
  CHECK(count_occurrences(r.out, " A ") == 4);  // one hook per letter

  Run w1 = cli({"render", "--word", "1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4"});
  CHECK(count_occurrences(w1.out, "<circle") == 4);
  CHECK(count_occurrences(w1.out, " A ") == 16);

  // Byte-deterministic.
  CHECK(cli({"render", "--word", "1+2-1-2"}).out == r.out);

  CHECK(cli({"render", "--word", ""}).status == 2);

  // Total over the catalog.
  for (const auto& name : catalog_names()) {
    auto entry = catalog_entry(name);
    CHECK(!render_svg(entry.word).empty());
  }
}

TEST_CASE("render to file") {
  std::string path = "render_test_out.svg";
  Run r = cli({"render", "--word", "1+2-1-2", "--out", path});
  CHECK(r.status == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == cli({"render", "--word", "1+2-1-2"}).out);
  std::remove(path.c_str());
}

TEST_CASE("construct and catalog outputs are byte-deterministic") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"construct", "--puzzle", "3-of-6", "--json"},
           {"catalog", "demaine80", "--json"},
           {"table", "--k", "3", "--max-i", "6", "--json"},
           {"canon", "--word", "2+1-2-1"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}
