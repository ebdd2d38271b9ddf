#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sumdiv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "sumdiv_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << content;
  return p.string();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("verify emits the frozen JSON report") {
  const auto f = write_file("a124.txt", "# fixture\n1\n2\n4\n");
  const auto r = run({"verify", f});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["passes_theorem"] == true);
  CHECK(j["k"] == 4);
  CHECK(j["m_k"] == 2);
  CHECK(j["tail_mass"] == 5);
  CHECK(j["sumset_size"] == 6);
  CHECK(j["ratioset_size"] == 5);
  CHECK(j["lhs"] == "180");
  CHECK(j["rhs_times4"] == "81");
  CHECK(j["report_ratios"]["sixth_power_ratio"]["report_only"] == true);
  // Pass/fail fields are booleans, never numbers.
  for (const char* key : {"passes_est1", "passes_est2", "passes_est3", "passes_theorem",
                          "chain_implies_theorem", "passes_corollary"})
    CHECK(j[key].is_boolean());
}

TEST_CASE("table and farey") {
  const auto t = run({"table", "--n", "4"});
  REQUIRE(t.code == 0);
  const auto tl = lines(t.out);
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == "n,M,density,log_density,beta_estimate");
  CHECK(tl[1].rfind("4,9,0.5625,", 0) == 0);

  const auto sweep = run({"table", "--n", "16..4096", "--geometric-steps"});
  REQUIRE(sweep.code == 0);
  CHECK(lines(sweep.out).size() == 10);

  const auto fr = run({"farey", "--n", "5", "--stats"});
  REQUIRE(fr.code == 0);
  const auto fj = nlohmann::json::parse(fr.out);
  CHECK(fj["farey_size"] == 10);
  CHECK(fj["statistics"]["sumset_size"] == 43);
  CHECK(fj["statistics"]["difference_set_size"] == 45);

  const auto range = lines(run({"farey", "--n", "1..5"}).out);
  REQUIRE(range.size() == 6);
  CHECK(range[0] == "n,farey_size,asymptotic,relative_error");
  CHECK(range[5].rfind("5,10,", 0) == 0);
  CHECK(run({"farey", "--n", "60", "--stats", "--pair-cap", "100"}).code == 2);
}

TEST_CASE("exit codes") {
  const auto empty = write_file("empty.txt", "# only a comment\n");
  const auto r = run({"stats", empty});
  CHECK(r.code == 1);
  CHECK(r.err.find("no elements") != std::string::npos);

  CHECK(run({"verify", "/nonexistent/file.txt"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"verify", "--family", "interval:n=200", "--pair-cap", "1000"}).code == 2);
  CHECK(run({"search", "--size", "10", "--universe", "60", "--budget", "10"}).code == 2);
  CHECK(run({"certificate", "--family", "interval:n=3", "--from", "99"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("batch verify keeps going past bad rows") {
  const auto good = write_file("good.txt", "1\n2\n4\n");
  const auto bad = write_file("bad.txt", "1\nnot-a-number\n");
  const auto r = run({"verify", good, bad});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].rfind("input,cardinality,sumset_size,ratioset_size,k,m_k,tail_mass", 0) == 0);
  CHECK(ls[1].find(",true,6,true,") != std::string::npos);
  CHECK(ls[1].back() == ',');
  CHECK(ls[2].find("malformed rational") != std::string::npos);

  const auto many =
      run({"verify", "--family", "random:n=12,bound=40", "--count", "100", "--seed", "5"});
  CHECK(many.code == 0);
  const auto ml = lines(many.out);
  REQUIRE(ml.size() == 101);
  for (std::size_t i = 1; i < ml.size(); ++i)
    CHECK(ml[i].find(",true,true,true,true,") != std::string::npos);
  CHECK(ml[1].rfind("random:n=12,bound=40,seed=5,", 0) == std::string::npos);
  CHECK(ml[1].rfind("\"random:n=12,bound=40,seed=5\",", 0) == 0);
}

TEST_CASE("output is byte deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"stats", "--family", "random:n=20,bound=30,seed=3"},
        std::vector<std::string>{"search", "--mode", "local", "--size", "4", "--seed", "9",
                                 "--iterations", "100"},
        std::vector<std::string>{"spectrum", "--family", "farey:n=6"},
        std::vector<std::string>{"family", "random:n=5,bound=9", "--seed", "2"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("search and certificate JSON") {
  const auto s = run({"search", "--objective", "J", "--size", "3", "--universe", "12"});
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["best_value"] == "175/81");
  CHECK(j["best_set"] == nlohmann::json::array({"1", "2", "3"}));
  CHECK(j["evaluations"] == 220);

  const auto c = run({"certificate", "--family", "interval:n=2", "--from", "1"});
  REQUIRE(c.code == 0);
  const auto cj = nlohmann::json::parse(c.out);
  CHECK(cj["pair_bound"] == 4);
  CHECK(cj["direct_grid_size"] == 9);
  CHECK(cj["distinctness_verified"] == true);

  const auto f = run({"family", "farey:n=3"});
  CHECK(f.out == "# farey:n=3\n1/3\n1/2\n2/3\n1\n");
}

TEST_CASE("pair cap from the environment") {
  setenv("SUMDIV_PAIR_CAP", "10", 1);
  const auto r = run({"verify", "--family", "interval:n=5"});
  unsetenv("SUMDIV_PAIR_CAP");
  CHECK(r.code == 2);
  CHECK(run({"verify", "--family", "interval:n=5"}).code == 0);
}
