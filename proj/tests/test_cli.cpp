#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/network_io.hpp"
#include "cli/render.hpp"
#include "support/oracles.hpp"

using namespace cdc;
using namespace cdc::cli;
namespace fs = std::filesystem;

namespace {

const std::string kExample = std::string(CDC_TEST_DATA_DIR) + "/running_example.cdc";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cdc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("cdc_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string write_file(const fs::path& dir, const std::string& name, const std::string& text) {
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_network(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("network parse errors name the line") {
  CHECK(error_of("cdc 2\n1 2 000000000\n2 1 010010010\n").find("line 2") == 0);
  CHECK(error_of("cdc 2\n1 1 010010010\n").find("diagonal") != std::string::npos);
  CHECK(error_of("cdc 2\n1 3 010010010\n").find("line 2") == 0);
  CHECK(error_of("cdc 2\n1 2 010010010\n1 2 010010010\n").find("line 3") == 0);
  CHECK(error_of("cdc 2\n1 2 101000000\n").find("line 2") == 0);
  CHECK(error_of("rcc 2\n").find("line 1") == 0);
  CHECK(error_of("cdc 2\n1 2 01001001\n").find("line 2") == 0);
  CHECK(error_of("").size() > 0);

  // Disconnected matrices are fine once the model allows them.
  CHECK_NOTHROW(parse_network("cdc-d 2\n1 2 101000000\n"));
  CHECK_NOTHROW(parse_network("cdc 2\n1 2 101000000\n", Model::CdcD));
}

TEST_CASE("basic conversion needs every pair exactly once") {
  const auto partial = parse_network("cdc 2\n1 2 000/000/010\n");
  CHECK_THROWS_AS(to_basic(partial), InputError);
  const auto multi = parse_network("cdc 2\n1 2 000/000/010|000/000/011\n2 1 010/000/000\n");
  CHECK_THROWS_AS(to_basic(multi), InputError);
  const auto d = to_disjunctive(partial);
  CHECK(d.get(1, 0).size() == 218);
  CHECK(d.get(0, 1).size() == 1);
}

TEST_CASE("network text round trip") {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    auto inst = oracle::random_instance(2 + t % 4, 6, 5, rng, t % 2 == 0);
    const Model model = t % 2 == 0 ? Model::Cdc : Model::CdcD;
    const std::string text = format_network(inst.net, model);
    const auto parsed = parse_network(text);
    CHECK(parsed.model == model);
    CHECK(to_basic(parsed) == inst.net);
  }
  CdcDisjunctiveNetwork d(2);
  d.set(0, 1, {DirectionMatrix::parse("000/000/010"), DirectionMatrix::parse("000/000/110")});
  d.set(1, 0, {DirectionMatrix::parse("010/000/000")});
  CHECK(to_disjunctive(parse_network(format_network(d, Model::Cdc))) == d);
}

TEST_CASE("pbm round trip") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const Frame f{3 + t % 5, 2 + t % 7};
    const auto r = oracle::random_region(f, 1 + t % 6, rng, false);
    const auto back = parse_pbm(to_pbm(r));
    CHECK(back.frame() == f);
    CHECK(back == r);
  }
  const auto r = parse_pbm("P1\n# two by two\n2 2\n10\n01\n");
  CHECK(r.contains(0, 1));
  CHECK(r.contains(1, 0));
  CHECK_FALSE(r.contains(0, 0));
  CHECK_THROWS_AS(parse_pbm("P2\n1 1\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pbm("P1\n2 2\n1\n"), std::invalid_argument);
}

TEST_CASE("ascii rendering marks overlap") {
  const Frame f{3, 2};
  PixelRegion a(f);
  PixelRegion b(f);
  a.set(0, 1);
  a.set(1, 1);
  b.set(1, 1);
  b.set(2, 0);
  CHECK(render_ascii({a, b}) == "A#.\n..B\n");
}

TEST_CASE("check writes the maximal solution") {
  const auto dir = scratch_dir("check");
  const auto r = run_cli({"check", kExample, "--out", dir.string(), "--format", "pbm"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("consistent") == 0);
  CHECK(r.out.find("frame 5x5") != std::string::npos);
  for (int i = 1; i <= 3; ++i) {
    const fs::path p = dir / ("region_" + std::to_string(i) + ".pbm");
    REQUIRE(fs::exists(p));
    CHECK(parse_pbm(slurp(p)).frame() == Frame{5, 5});
  }
  const auto first = parse_pbm(slurp(dir / "region_1.pbm"));
  CHECK(first.count() == 5);
}

TEST_CASE("check reports inconsistency with exit code 1") {
  const auto dir = scratch_dir("inconsistent");
  const std::string path = write_file(dir, "bad.cdc",
                                      "cdc 3\n"
                                      "1 2 110/100/110\n2 1 001/011/001\n"
                                      "2 3 000/100/110\n3 2 011/001/000\n"
                                      "1 3 110/010/110\n3 1 000/011/000\n");
  const auto r = run_cli({"check", path});
  CHECK(r.code == kInconsistent);
  CHECK(r.out.find("inconsistent: ") == 0);
}

TEST_CASE("input errors exit with code 2") {
  const auto dir = scratch_dir("errors");
  CHECK(run_cli({"check", (dir / "missing.cdc").string()}).code == kInputError);
  const auto zero = write_file(dir, "zero.cdc", "cdc 2\n1 2 000000000\n2 1 010010010\n");
  const auto r = run_cli({"check", zero});
  CHECK(r.code == kInputError);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto partial = write_file(dir, "partial.cdc", "cdc 2\n1 2 000/000/010\n");
  CHECK(run_cli({"check", partial}).code == kInputError);
  CHECK(run_cli({"frobnicate"}).code == kInputError);
  CHECK(run_cli({"check", kExample, "--model", "rcc8"}).code == kInputError);
}

TEST_CASE("simplify refines the frame") {
  const auto r = run_cli({"simplify", kExample});
  CHECK(r.code == kOk);
  CHECK(r.out.find("frame 25x25") != std::string::npos);
  CHECK(run_cli({"simplify", kExample, "--model", "cdc-d"}).code == kInputError);
}

TEST_CASE("solve picks a satisfiable refinement") {
  const auto dir = scratch_dir("solve");
  const auto sat = write_file(dir, "sat.cdc",
                              "cdc 2\n1 2 100/100/100|001/001/001\n2 1 000/001/000\n");
  const auto r = run_cli({"solve", sat});
  CHECK(r.code == kOk);
  CHECK(r.out.find("satisfiable") == 0);
  CHECK(r.out.find("1 2 100/100/100") != std::string::npos);

  const auto unsat = write_file(dir, "unsat.cdc",
                                "cdc 2\n1 2 000/000/010|000/000/001\n2 1 000/000/010\n");
  const auto u = run_cli({"solve", unsat});
  CHECK(u.code == kInconsistent);
  CHECK(u.out.find("unsatisfiable") == 0);
}

TEST_CASE("tables") {
  const auto dir = scratch_dir("tables");
  const auto csv = (dir / "conv.csv").string();
  const auto r = run_cli({"tables", "--which", "converses", "--out", csv});
  CHECK(r.code == kOk);
  CHECK(r.out.find("pairs=757") != std::string::npos);
  std::ifstream in(csv);
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 758);

  const auto c = run_cli({"tables", "--which", "compose", "000/100/100", "001/001/000"});
  CHECK(c.code == kOk);
  CHECK(c.out.find("101/101/111") != std::string::npos);
  CHECK(run_cli({"tables", "--which", "compose", "000/000/000", "001/001/000"}).code == kInputError);

  CHECK(run_cli({"tables", "--which", "compose", "000/100/100"}).code == kInputError);
  CHECK(run_cli({"tables", "--which", "converses", "000/100/100"}).code == kInputError);
  CHECK(run_cli({"tables", "--which", "inverse"}).code == kInputError);

  // Every row of a single-tile composition stays inside the lower two rows.
  const auto low = run_cli({"tables", "--which", "compose", "000/000/100", "001/001/000"});
  CHECK(low.code == kOk);
  std::istringstream listing(low.out);
  int gammas = 0;
  for (std::string line; std::getline(listing, line);) {
    if (line.rfind("gammas=", 0) == 0) continue;
    ++gammas;
    CHECK(DirectionMatrix::parse(line).subset_of(DirectionMatrix::parse("000/111/111")));
  }
  CHECK(gammas > 0);
}

TEST_CASE("solve on singleton candidates matches check") {
  const auto c = run_cli({"check", kExample});
  const auto s = run_cli({"solve", kExample});
  CHECK(s.code == kOk);
  REQUIRE(c.out.rfind("consistent\n", 0) == 0);
  CHECK(s.out.find(c.out.substr(11)) != std::string::npos);
}

TEST_CASE("west or east in both directions is satisfiable") {
  const auto dir = scratch_dir("west_east");
  const auto path = write_file(dir, "we.cdc",
                               "cdc 2\n1 2 000/100/000|000/001/000\n2 1 000/100/000|000/001/000\n");
  const auto r = run_cli({"solve", path});
  CHECK(r.code == kOk);
  CHECK(r.out.find("satisfiable") == 0);
}

