#include <doctest.h>

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli_impl.hpp"
#include "quiverpath/partitions.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args,
              const std::string& stdin_text = "") {
  std::vector<std::string> words;
  words.push_back("quiverpath");
  words.insert(words.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& w : words) argv.push_back(w.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = quiverpath::cli::run_cli(static_cast<int>(argv.size()), argv.data(),
                                    in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

std::vector<std::string> columns_of(const std::string& line) {
  std::vector<std::string> cols;
  std::string current;
  for (char c : line) {
    if (c == '\t') {
      cols.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  cols.push_back(current);
  return cols;
}

}  // namespace

TEST_CASE("enumerate with no flags prints the vacuum row") {
  const CliResult r = run({"enumerate"});
  CHECK(r.code == 0);
  CHECK(r.out == "[{\"parts\":[],\"charge\":0}]\t1,0;0\t0\n");
  CHECK(r.err.empty());
}

TEST_CASE("enumerate row count matches a direct partition census") {
  const CliResult r =
      run({"enumerate", "--n", "1", "--charges", "0", "--max-energy", "3"});
  CHECK(r.code == 0);
  // Energy equals the residue zero box count, which caps the diagram size,
  // so scanning partitions up to thirteen boxes is exhaustive.
  long long expected = 0;
  for (const auto& y : quiverpath::partitions_up_to(13)) {
    if (!y.is_n_reduced(1)) continue;
    if (quiverpath::energy_level1(y, 1) <= 3) ++expected;
  }
  CHECK(static_cast<long long>(lines_of(r.out).size()) == expected);
}

TEST_CASE("the gl listing contains every reduced row") {
  for (const std::string n : {"1", "2"}) {
    const std::vector<std::string> base = {"enumerate", "--n",          n,
                                           "--charges", "0,1",          "--max-energy",
                                           "2"};
    std::vector<std::string> gl = base;
    gl.push_back("--gl");
    const CliResult reduced = run(base);
    const CliResult full = run(gl);
    REQUIRE(reduced.code == 0);
    REQUIRE(full.code == 0);
    const auto reduced_lines = lines_of(reduced.out);
    const auto full_lines = lines_of(full.out);
    const std::set<std::string> full_set(full_lines.begin(), full_lines.end());
    CHECK(full_lines.size() >= reduced_lines.size());
    for (const std::string& row : reduced_lines)
      CHECK(full_set.count(row) == 1);
  }
}

TEST_CASE("repeated invocations are byte identical") {
  const std::vector<std::string> tsv_args = {
      "enumerate", "--n", "2", "--charges", "0,1", "--max-energy", "3"};
  CHECK(run(tsv_args).out == run(tsv_args).out);

  const std::vector<std::string> json_args = {
      "character", "--n", "1", "--charges", "0,0", "--max-energy",
      "3",         "--format", "json"};
  CHECK(run(json_args).out == run(json_args).out);
}

TEST_CASE("enumerate emits the same data as tsv and as json") {
  const std::vector<std::string> base = {"enumerate",    "--n", "1",
                                         "--charges",    "0,1", "--max-energy",
                                         "2"};
  const CliResult tsv = run(base);
  std::vector<std::string> json_args = base;
  json_args.push_back("--format");
  json_args.push_back("json");
  const CliResult js = run(json_args);
  REQUIRE(tsv.code == 0);
  REQUIRE(js.code == 0);

  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(js.out);
  std::string rebuilt;
  for (const auto& row : parsed) {
    const auto& h = row["weight"]["h"];
    std::string weight;
    for (const auto& u : h) {
      if (!weight.empty()) weight += ",";
      weight += u.dump();
    }
    weight += ";" + row["weight"]["deg"].dump();
    rebuilt += row["tuple"].dump() + "\t" + weight + "\t" +
               row["energy"].dump() + "\n";
  }
  CHECK(rebuilt == tsv.out);
}

TEST_CASE("character table pins the highest weight and partitions the basis") {
  const CliResult character =
      run({"character", "--n", "1", "--charges", "0", "--max-energy", "3"});
  REQUIRE(character.code == 0);
  std::map<std::string, long long> degree_sums;
  bool highest_seen = false;
  for (const std::string& line : lines_of(character.out)) {
    const auto cols = columns_of(line);
    REQUIRE(cols.size() == 2);
    if (cols[0] == "1,0;0") {
      highest_seen = true;
      CHECK(cols[1] == "1");
    }
    degree_sums[cols[0].substr(cols[0].find(';') + 1)] +=
        std::stoll(cols[1]);
  }
  CHECK(highest_seen);

  const CliResult enumerated =
      run({"enumerate", "--n", "1", "--charges", "0", "--max-energy", "3"});
  REQUIRE(enumerated.code == 0);
  std::map<std::string, long long> energy_counts;
  for (const std::string& line : lines_of(enumerated.out)) {
    const auto cols = columns_of(line);
    REQUIRE(cols.size() == 3);
    ++energy_counts[cols[2] == "0" ? "0" : "-" + cols[2]];
  }
  CHECK(degree_sums == energy_counts);
}

TEST_CASE("character emits the same data as tsv and as json") {
  const std::vector<std::string> base = {"character",    "--n", "1",
                                         "--charges",    "0,1", "--max-energy",
                                         "2"};
  const CliResult tsv = run(base);
  std::vector<std::string> json_args = base;
  json_args.push_back("--format");
  json_args.push_back("json");
  const CliResult js = run(json_args);
  REQUIRE(tsv.code == 0);
  REQUIRE(js.code == 0);
  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(js.out);
  std::string rebuilt;
  for (const auto& row : parsed) {
    std::string weight;
    for (const auto& u : row["weight"]["h"]) {
      if (!weight.empty()) weight += ",";
      weight += u.dump();
    }
    weight += ";" + row["weight"]["deg"].dump();
    rebuilt += weight + "\t" + row["multiplicity"].dump() + "\n";
  }
  CHECK(rebuilt == tsv.out);
}

TEST_CASE("fock words apply rightmost first") {
  CHECK(run({"fock", "F0"}).out == "[1]\t1\n");
  CHECK(run({"fock", "E0", "F0"}).out == "[]\t1\n");
  // Adding contents 0, 1, -1 in order grows the hook with two rows.
  CHECK(run({"fock", "F-1", "F1", "F0"}).out == "[2,1]\t1\n");
  // The vacuum weight vanishes away from residue zero.
  const CliResult zero = run({"fock", "H1"});
  CHECK(zero.code == 0);
  CHECK(zero.out.empty());
  CHECK(run({"fock", "H0", "F0"}).out == "[1]\t-1\n");
}

TEST_CASE("fock reads a start vector from stdin") {
  const CliResult r = run({"fock", "F1", "--start", "-"},
                          R"({"terms":[{"parts":[1],"coeff":"2"}]})");
  CHECK(r.code == 0);
  CHECK(r.out == "[2]\t2\n");
}

TEST_CASE("lift and reduce round stdin JSON") {
  const CliResult lifted =
      run({"lift"}, R"({"n":1,"charges":[0,0],"prefix":[[1,1]]})");
  CHECK(lifted.code == 0);
  CHECK(lifted.out ==
        "[{\"parts\":[1],\"charge\":0},{\"parts\":[1],\"charge\":0}]\n");

  const CliResult reduced =
      run({"reduce", "--n", "1"},
          R"([{"parts":[2,2],"charge":0},{"parts":[2,2],"charge":1}])");
  CHECK(reduced.code == 0);
  CHECK(reduced.out ==
        "[{\"parts\":[],\"charge\":0},{\"parts\":[],\"charge\":1}]\n");
}

TEST_CASE("quiver-check reports seeded stability verdicts") {
  const std::string decomposable =
      R"({"mode":"cyclic","n":1,"segments":[{"lo":0,"hi":1,"mult":1}]})";
  const CliResult good = run({"quiver-check", "--charges", "0"}, decomposable);
  CHECK(good.code == 0);
  auto lines = lines_of(good.out);
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "sample\t1\tstable");
  CHECK(lines[20] == "summary\tdecomposes\tyes");
  CHECK(lines[21] == "summary\tstable_majority\tyes");

  const std::string orphan =
      R"({"mode":"cyclic","n":1,"segments":[{"lo":0,"hi":0,"mult":2}]})";
  const CliResult bad = run({"quiver-check", "--charges", "0"}, orphan);
  CHECK(bad.code == 0);
  lines = lines_of(bad.out);
  REQUIRE(lines.size() == 22);
  CHECK(lines[20] == "summary\tdecomposes\tno");
  CHECK(lines[21] == "summary\tstable_majority\tno");

  const CliResult js = run(
      {"quiver-check", "--charges", "0", "--seed", "7", "--format", "json"},
      decomposable);
  CHECK(js.code == 0);
  const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(js.out);
  CHECK(parsed["decomposes"] == true);
  CHECK(parsed["stable_seeds"] == 20);
  CHECK(parsed["seeds"].size() == 20);
  CHECK(parsed["seeds"][0]["seed"] == 121);
  CHECK(parsed["sample"].contains("down"));
  CHECK(parsed["sample"].contains("up"));
}

TEST_CASE("usage problems exit with code two") {
  CHECK(run({"enumerate", "--charges", "1,0"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"enumerate", "--format", "xml"}).code == 2);
  CHECK(run({"enumerate", "--inf", "--charges", "0"}).code == 2);
  CHECK(run({"enumerate", "--inf", "--max-size", "2", "--gl"}).code == 2);
  CHECK(run({"enumerate", "--max-size", "3"}).code == 2);
  CHECK(run({"reduce"}, "[]").code == 2);
  CHECK(run({"fock"}).code == 2);
  CHECK(run({"fock", "X1"}).code == 2);
  const CliResult bad_json = run({"lift"}, "not json");
  CHECK(bad_json.code == 2);
  CHECK(bad_json.err.find("error:") == 0);
  // Paths beyond level one are only graded at rank one; the character table
  // must refuse the unsupported shape instead of searching forever.
  const CliResult wide = run(
      {"character", "--n", "2", "--charges", "0,1", "--max-energy", "2"});
  CHECK(wide.code == 2);
  CHECK(wide.err.find("error:") == 0);
  CHECK(wide.err.find("level one") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"enumerate", "--help"}).code == 0);
}

TEST_CASE("a corrupted diagonal fails verification by name") {
  const CliResult r = run({"verify", "--corrupt", "--jobs", "4"});
  CHECK(r.code == 1);
  bool named = false;
  long long pass_count = 0;
  for (const std::string& line : lines_of(r.out)) {
    const auto cols = columns_of(line);
    REQUIRE(cols.size() >= 3);
    if (cols[0] == "diagonal-matches-cartan-pairing") {
      CHECK(cols[1] == "fail");
      REQUIRE(cols.size() == 4);
      CHECK(cols[3].find("Y=[]") != std::string::npos);
      named = true;
    } else if (cols[1] == "pass") {
      ++pass_count;
    }
  }
  CHECK(named);
  // The injected fault is confined to the one property.
  CHECK(pass_count == 8);
}
