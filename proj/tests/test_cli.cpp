#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "toep/cli.hpp"
#include "toep/rational.hpp"

using namespace toep;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kFH11 = R"({"builtin": "pure_fh", "gamma": 1, "delta": 1})";
const char* kTridiag = R"({"builtin": "tridiagonal", "x": "1/2", "y": "1/3"})";

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  TempFile(const std::string& name, const std::string& content) : path(name) {
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("determinant values and json format") {
  RunResult r = run({"det", "--symbol", kFH11, "--N", "2"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "3\n");
  CHECK_EQ(r.err, "");

  CHECK_EQ(run({"det", "--symbol", kFH11, "--N", "3"}).out, "4\n");
  CHECK_EQ(run({"det", "--N", "0"}).out, "1\n");

  RunResult j = run({"--format", "json", "det", "--symbol", kFH11, "--N", "2"});
  CHECK_EQ(j.code, 0);
  CHECK_EQ(j.out, "{\"value\":\"3\"}\n");
}

TEST_CASE("minor and inverse") {
  RunResult r = run({"minor", "--symbol", kFH11, "--N", "2", "--mu", "[1]"});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "2\n");

  RunResult inv = run({"inverse", "--symbol", kTridiag, "--N", "2"});
  CHECK_EQ(inv.code, 0);
  CHECK_EQ(inv.out, "42/43 -12/43\n-18/43 42/43\n");

  RunResult invj = run({"--format", "json", "inverse", "--symbol", kFH11, "--N", "2"});
  CHECK_EQ(invj.out, "{\"matrix\":[[\"2/3\",\"-1/3\"],[\"-1/3\",\"2/3\"]]}\n");
}

TEST_CASE("exit codes name the offending field") {
  RunResult bad_json = run({"det", "--symbol", "{nope", "--N", "2"});
  CHECK_EQ(bad_json.code, 2);
  CHECK(contains(bad_json.err, "schema error"));
  CHECK(contains(bad_json.err, "symbol"));

  RunResult missing = run({"det", "--symbol", kFH11});
  CHECK_EQ(missing.code, 2);
  CHECK(contains(missing.err, "N: required"));

  RunResult domain = run(
      {"det", "--symbol", R"({"builtin": "theta_gd", "gamma": 0, "delta": 1, "q": "1/2"})",
       "--N", "2"});
  CHECK_EQ(domain.code, 3);
  CHECK(contains(domain.err, "input error"));

  RunResult over_cap = run({"oracle", "heine", "--symbol", kFH11, "--N", "10"});
  CHECK_EQ(over_cap.code, 3);

  RunResult unknown = run({"closedform", "nosuch"});
  CHECK_EQ(unknown.code, 2);
  CHECK(contains(unknown.err, "formula"));

  RunResult increasing = run({"minor", "--symbol", kFH11, "--N", "2", "--mu", "[1, 2]"});
  CHECK_EQ(increasing.code, 2);

  RunResult bad_format = run({"--format", "xml", "det", "--symbol", kFH11, "--N", "2"});
  CHECK_EQ(bad_format.code, 2);

  RunResult no_sub = run({});
  CHECK_EQ(no_sub.code, 2);
  CHECK(contains(no_sub.err, "subcommand"));
}

TEST_CASE("help prints the command surface") {
  RunResult r = run({"--help"});
  CHECK_EQ(r.code, 0);
  CHECK(contains(r.out, "det"));
  CHECK(contains(r.out, "verify"));
}

TEST_CASE("skew schur evaluations") {
  RunResult twovar = run({"skewschur", "--outer", "[2, 1]", "--spec",
                          R"({"kind": "finite", "values": ["1", "1"]})"});
  CHECK_EQ(twovar.code, 0);
  CHECK_EQ(twovar.out, "2\n");

  RunResult principal = run({"skewschur", "--outer", "[1]", "--spec",
                             R"({"kind": "principal", "q": "1/2", "count": 2})"});
  CHECK_EQ(principal.out, "3/2\n");

  RunResult dual = run({"skewschur", "--outer", "[1, 1]", "--spec",
                        R"({"kind": "finite", "values": ["1", "1"]})", "--basis", "E"});
  CHECK_EQ(dual.out, "3\n");

  RunResult bad_basis = run({"skewschur", "--outer", "[1]", "--spec",
                             R"({"kind": "finite", "values": ["1"]})", "--basis", "Q"});
  CHECK_EQ(bad_basis.code, 2);
}

TEST_CASE("closed formula evaluation and verification") {
  CHECK_EQ(run({"closedform", "fh_determinant", "--params",
                R"({"gamma": 1, "delta": 1, "N": 2})"})
               .out,
           "3\n");
  RunResult verified = run({"closedform", "fh_determinant", "--params",
                            R"({"gamma": 1, "delta": 1, "N": 2})", "--verify"});
  CHECK_EQ(verified.code, 0);
  CHECK_EQ(verified.out, "3\nverified\n");

  CHECK_EQ(run({"closedform", "tridiag_det", "--params",
                R"({"x": "1/2", "y": "1/3", "N": 2})", "--verify"})
               .out,
           "43/36\nverified\n");

  CHECK_EQ(run({"closedform", "q_theta_determinant", "--params",
                R"({"gamma": 1, "delta": 1, "N": 1, "q": "1/2"})", "--verify"})
               .out,
           "3/2\nverified\n");

  RunResult dr = run({"closedform", "duduchava_roch", "--params",
                      R"({"gamma": 1, "delta": 1, "N": 2})"});
  CHECK_EQ(dr.code, 0);
  CHECK_EQ(dr.out, "ok\n");

  RunResult asym = run({"closedform", "asymptotic", "--params",
                        R"({"kind": "tridiag", "j": 1, "k": 1, "x": "1/2", "y": "1/3"})"});
  CHECK_EQ(asym.code, 0);
  auto asym_lines = lines_of(asym.out);
  REQUIRE_EQ(asym_lines.size(), 6);
  CHECK_EQ(asym_lines[0], "factor: 7/6");
  CHECK_EQ(asym_lines[1], "constant: 1");
  CHECK_EQ(asym_lines[2], "n_power: 0");

  RunResult missing_param = run({"closedform", "fh_determinant", "--params",
                                 R"({"gamma": 1, "delta": 1})"});
  CHECK_EQ(missing_param.code, 2);
  CHECK(contains(missing_param.err, "params.N"));

  RunResult asym_verify = run({"closedform", "asymptotic", "--params",
                               R"({"kind": "tridiag", "j": 0, "k": 0, "x": "1", "y": "1"})",
                               "--verify"});
  CHECK_EQ(asym_verify.code, 3);
}

TEST_CASE("biorthogonal pairs and kernels") {
  RunResult pair = run({"biorth", "pair", "--symbol", kFH11, "--j", "1"});
  CHECK_EQ(pair.code, 0);
  CHECK_EQ(pair.out, "p[0]: -1/2\np[1]: 1\nq[0]: -1/2\nq[1]: 1\nnorm2: 3/2\n");

  const char* theta = R"({"builtin": "theta_gd", "gamma": 1, "delta": 1, "q": "1/2"})";
  RunResult bordered = run({"biorth", "pair", "--symbol", theta, "--j", "1"});
  RunResult closed = run({"biorth", "pair", "--symbol", theta, "--j", "1", "--closed"});
  CHECK_EQ(bordered.code, 0);
  CHECK_EQ(closed.code, 0);
  CHECK_EQ(closed.out, bordered.out);

  RunResult kernel =
      run({"biorth", "kernel", "--symbol", kFH11, "--N", "2", "--verify-inverse"});
  CHECK_EQ(kernel.code, 0);
  CHECK_EQ(kernel.out, "2/3 -1/3\n-1/3 2/3\ninverse check: ok\n");

  RunResult closed_refused = run({"biorth", "pair", "--symbol", kFH11, "--j", "1", "--closed"});
  CHECK_EQ(closed_refused.code, 3);
}

TEST_CASE("oracle evaluations agree with the minors") {
  RunResult heine = run({"oracle", "heine", "--symbol", kFH11, "--mu", "[1]", "--N", "2",
                         "--compare"});
  CHECK_EQ(heine.code, 0);
  CHECK_EQ(heine.out, "2\nagreement: ok\n");

  RunResult morris = run({"oracle", "morris", "--gamma", "1", "--delta", "1", "--N", "2",
                          "--compare"});
  CHECK_EQ(morris.code, 0);
  CHECK_EQ(morris.out, "3\nagreement: ok\n");
}

TEST_CASE("table of limits for the eight shapes") {
  const char* profile = R"({"plus": ["1", "0", "0", "0"], "minus": ["0", "0"]})";
  RunResult r = run({"table1", "--profile", profile});
  CHECK_EQ(r.code, 0);
  auto rows = lines_of(r.out);
  REQUIRE_EQ(rows.size(), 10);  // header, rule, eight shapes
  CHECK_EQ(rows[0], "| lambda | mu | character_sum | skew_sum | equal |");
  CHECK_EQ(rows[2], "| () | (1) | 1 | 1 | true |");
  CHECK_EQ(rows[3], "| () | (2) | 1/2 | 1/2 | true |");
  CHECK_EQ(rows[7], "| () | (2,2) | 1/12 | 1/12 | true |");
  CHECK_EQ(rows[8], "| (1,1) | (1,1) | 1 | 1 | true |");
  CHECK_EQ(rows[9], "| (1) | (3) | 1/2 | 1/2 | true |");

  const char* zero = R"({"plus": ["0", "0", "0", "0"], "minus": ["0", "0"]})";
  RunResult z = run({"--format", "csv", "table1", "--profile", zero});
  auto zlines = lines_of(z.out);
  REQUIRE_EQ(zlines.size(), 9);
  auto cells = csv_split(zlines[7]);
  REQUIRE_EQ(cells.size(), 5);
  CHECK_EQ(cells[0], "(1,1)");
  CHECK_EQ(cells[2], "1");
  CHECK(contains(zlines[7], "\"(1,1)\""));
  CHECK_EQ(csv_split(zlines[1])[2], "0");

  RunResult short_profile =
      run({"table1", "--profile", R"({"plus": ["1"], "minus": ["0", "0"]})"});
  CHECK_EQ(short_profile.code, 2);
  CHECK(contains(short_profile.err, "profile.plus"));
}

TEST_CASE("convergence trajectory toward the limit") {
  RunResult r = run({"converge", "--symbol", kFH11, "--mu", "[1]", "--N-max", "6"});
  CHECK_EQ(r.code, 0);
  auto rows = lines_of(r.out);
  REQUIRE_EQ(rows.size(), 6);  // header and N = 2..6
  CHECK_EQ(csv_split(rows[0])[0], "N");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto cells = csv_split(rows[i]);
    REQUIRE_EQ(cells.size(), 8);
    long N = std::stol(cells[0]);
    CHECK_EQ(parse_rational(cells[3]), Rational(N, N + 1));
    CHECK_EQ(cells[4], "1");
    CHECK_EQ(parse_rational(cells[5]), Rational(1, N + 1));
  }
  CHECK_EQ(csv_split(rows[1])[6], "0.666666666667");
}

TEST_CASE("verify suites run their grids") {
  RunResult dr = run({"verify", "dr"});
  CHECK_EQ(dr.code, 0);
  CHECK_EQ(dr.out, "duduchava_roch: 9/9 grids OK\n");

  RunResult jobs = run({"--jobs", "4", "verify", "dr"});
  CHECK_EQ(jobs.code, 0);
  CHECK_EQ(jobs.out, dr.out);

  RunResult oracle = run({"verify", "oracle", "--N", "2"});
  CHECK_EQ(oracle.code, 0);
  CHECK(contains(oracle.out, "heine_vs_minor: 4/4 grids OK"));
  CHECK(contains(oracle.out, "morris_vs_minor: 4/4 grids OK"));

  CHECK_EQ(run({"verify", "gessel", "--quick"}).code, 0);
  CHECK_EQ(run({"verify", "baxter", "--quick"}).code, 0);
  CHECK_EQ(run({"verify", "biorth", "--quick"}).code, 0);
  CHECK_EQ(run({"verify", "closedforms", "--quick"}).code, 0);

  RunResult unknown = run({"verify", "nosuch"});
  CHECK_EQ(unknown.code, 2);
  CHECK(contains(unknown.err, "suite"));
}

TEST_CASE("request files feed the same handlers") {
  TempFile top("cli_req_top.json",
               R"({"subcommand": "det", "symbol": {"builtin": "pure_fh", "gamma": 1, "delta": 1}, "N": 2})");
  RunResult r = run({"--request", top.path});
  CHECK_EQ(r.code, 0);
  CHECK_EQ(r.out, "3\n");

  TempFile sub("cli_req_sub.json",
               R"({"symbol": {"builtin": "pure_fh", "gamma": 1, "delta": 1}, "N": 2})");
  RunResult file_only = run({"det", "--request", sub.path});
  CHECK_EQ(file_only.out, "3\n");
  RunResult overridden = run({"det", "--request", sub.path, "--N", "3"});
  CHECK_EQ(overridden.out, "4\n");

  RunResult missing_file = run({"--request", "cli_req_absent.json"});
  CHECK_EQ(missing_file.code, 2);
  CHECK(contains(missing_file.err, "request"));
}

TEST_CASE("identical invocations produce identical bytes") {
  std::vector<std::string> args = {"--format", "json", "verify", "oracle", "--N", "2"};
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK_EQ(a.code, 0);
  CHECK_EQ(a.out, b.out);
}

}  // TEST_SUITE
