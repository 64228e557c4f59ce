#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

const fs::path& work_root() {
  static fs::path root = [] {
    fs::path p = fs::temp_directory_path() / "emdenlab_cli_tests";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args) {
  static int serial = 0;
  const fs::path out = work_root() / ("stdout." + std::to_string(serial));
  const fs::path err = work_root() / ("stderr." + std::to_string(serial));
  ++serial;
  const std::string cmd = std::string(EMDENLAB_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string cache_arg() { return " --cache-dir " + (work_root() / "cache").string(); }

json first_record(const fs::path& jsonl) { return json::parse(slurp(jsonl).substr(0, slurp(jsonl).find('\n'))); }

json strip_timestamps(const std::string& text) {
  json lines = json::array();
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line);
    rec.erase("timestamp");
    lines.push_back(rec);
  }
  return lines;
}

}  // namespace

TEST_CASE("exponent table anchors and the domain gate") {
  RunResult r = run("exponents --n 6 --p 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("1.73205080757") != std::string::npos);
  CHECK(r.out.find("mode1_ok") != std::string::npos);

  r = run("exponents --n 6 --p 1.5");
  CHECK(r.code == 2);
  CHECK(r.err.find("p >") != std::string::npos);

  r = run("exponents --n 11 --p 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("4.33333333333") != std::string::npos);
  CHECK(r.out.find("above_joseph_lundgren") != std::string::npos);
}

TEST_CASE("ground state writes its profile and reuses the cache byte for byte") {
  const fs::path out = work_root() / "gs";
  RunResult r = run("ground-state --n 6 --p 3 --out " + out.string() + cache_arg());
  CHECK(r.code == 0);
  CHECK(r.out.find("L_measured") != std::string::npos);
  const std::string cold = slurp(out / "ground_state.csv");
  CHECK(cold.rfind("# head=", 0) == 0);

  r = run("ground-state --n 6 --p 3 --out " + out.string() + cache_arg());
  CHECK(r.code == 0);
  CHECK(slurp(out / "ground_state.csv") == cold);
}

TEST_CASE("the reference solve converges and reports within its gates") {
  const fs::path out = work_root() / "solve";
  RunResult r = run("solve --n 6 --p 3 --mu 4 --r1 20 --lambda 0.05 --out " + out.string() +
                    cache_arg());
  REQUIRE(r.code == 0);
  const json rec = first_record(out / "solve.jsonl");
  CHECK(rec.at("status") == "converged");
  CHECK(rec.at("iterations").get<int>() <= 50);
  CHECK(rec.at("pde_residual_starstar").get<double>() <= 1e-6);
  CHECK(rec.at("positivity_ok").get<bool>());
  CHECK(rec.at("phi_star_norm").get<double>() <= 0.1);
  for (const auto& ratio : rec.at("contraction_ratios")) CHECK(ratio.get<double>() < 1.0);

  const std::string csv = slurp(out / "solution.csv");
  CHECK(csv.rfind("s,r,u,phi\n", 0) == 0);
}

TEST_CASE("identical runs produce identical artifacts modulo the timestamp") {
  const fs::path a = work_root() / "det_a";
  const fs::path b = work_root() / "det_b";
  const std::string flags = "solve --n 6 --p 3 --mu 4 --r1 20 --lambda 0.05" + cache_arg();
  REQUIRE(run(flags + " --out " + a.string()).code == 0);
  REQUIRE(run(flags + " --out " + b.string()).code == 0);
  CHECK(slurp(a / "solution.csv") == slurp(b / "solution.csv"));
  CHECK(strip_timestamps(slurp(a / "solve.jsonl")) == strip_timestamps(slurp(b / "solve.jsonl")));
}

TEST_CASE("solve failure modes map to their exit codes") {
  const fs::path out = work_root() / "fail";
  const std::string base = "solve --n 6 --p 3 --mu 4 --r1 20 --lambda 0.05" + cache_arg() +
                           " --out " + out.string();
  CHECK(run(base + " --rho 1e-6").code == 5);
  CHECK(run(base + " --tol 1e-30 --max-iter 2").code == 4);
  // partial artifacts still land with the failure reason recorded
  CHECK(first_record(out / "solve.jsonl").at("status") == "max_iterations");
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("sweep --n 6 --p 3" + cache_arg()).code == 2);
  CHECK(run("solve --source bogus" + cache_arg()).code == 2);
  CHECK(run("").code == 2);
  CHECK(run("solve --no-such-flag").code == 2);
  CHECK(run("solve --n 6 --p 2.2 --source 1:4:0.1" + cache_arg()).code == 2);
}

TEST_CASE("sweep reports the family trend and a plot table") {
  const fs::path out = work_root() / "sweep";
  RunResult r = run("sweep --n 6 --p 3 --mu 4 --r1 20 --lambdas 0.1,0.05,0.025 --out " +
                    out.string() + cache_arg());
  REQUIRE(r.code == 0);

  const std::string jsonl = slurp(out / "sweep.jsonl");
  std::istringstream in(jsonl);
  std::string line;
  double prev = 0;
  int rows = 0;
  json summary;
  while (std::getline(in, line)) {
    const json rec = json::parse(line);
    if (rec.contains("record")) {
      summary = rec;
      continue;
    }
    const double sup = rec.at("u_sup_on_annulus").get<double>();
    CHECK(rec.at("status") == "converged");
    if (rows > 0) CHECK(sup < prev);
    prev = sup;
    ++rows;
  }
  CHECK(rows == 3);
  CHECK(summary.at("trend_strictly_decreasing").get<bool>());
  CHECK(summary.at("all_converged").get<bool>());
  CHECK(summary.at("measured_rate").get<double>() == doctest::Approx(1.0).epsilon(0.05));

  const std::string csv = slurp(out / "sweep.csv");
  CHECK(csv.rfind("lambda,u_sup_on_annulus\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("verify recomputes the stored solution's report") {
  const fs::path solved = work_root() / "solve";
  const fs::path out = work_root() / "verify";
  RunResult r = run("verify --n 6 --p 3 --mu 4 --r1 20 --lambda 0.05 --in " +
                    (solved / "solution.csv").string() + " --out " + out.string() + cache_arg());
  REQUIRE(r.code == 0);
  const json rec = first_record(out / "verify.jsonl");
  CHECK(rec.at("u_matches_profile").get<bool>());
  CHECK(rec.at("pde_residual_starstar").get<double>() <= 1e-6);
  CHECK(rec.at("positivity_ok").get<bool>());
}

TEST_CASE("config files feed the same pipeline and reject unknown keys") {
  const fs::path out = work_root() / "cfg";
  const fs::path conf = work_root() / "run.conf";
  {
    std::ofstream f(conf);
    f << "n=6\np=3\nmu=4\nr1=20\nlambda=0.05\nout=" << out.string()
      << "\ncache-dir=" << (work_root() / "cache").string() << "\n";
  }
  REQUIRE(run("solve --config " + conf.string()).code == 0);
  const json rec = first_record(out / "solve.jsonl");
  CHECK(rec.at("lambda").get<double>() == 0.05);
  // flags override the file
  REQUIRE(run("solve --config " + conf.string() + " --lambda 0.1").code == 0);
  CHECK(first_record(out / "solve.jsonl").at("lambda").get<double>() == 0.1);

  const fs::path bad = work_root() / "bad.conf";
  {
    std::ofstream f(bad);
    f << "banana=1\n";
  }
  CHECK(run("solve --config " + bad.string()).code == 2);
}

TEST_CASE("the symmetric regime solves with the mode-1 branch skipped") {
  const fs::path out = work_root() / "sym";
  RunResult r = run("solve --n 6 --p 2.2 --mu 6 --r1 20 --lambda 0.05 --symmetric --out " +
                    out.string() + cache_arg());
  REQUIRE(r.code == 0);
  const json rec = first_record(out / "solve.jsonl");
  CHECK(rec.at("mode1_skipped").get<bool>());
  CHECK(rec.at("status") == "converged");
  CHECK(rec.at("pde_residual_starstar").get<double>() <= 1e-6);
}

TEST_CASE("linsolve emits per-mode profiles and inverse records") {
  const fs::path out = work_root() / "lin";
  RunResult r = run("linsolve --n 6 --p 3 --r1 5 --source 0:4:1 --source 2:4.5:0.7 --out " +
                    out.string() + cache_arg());
  REQUIRE(r.code == 0);
  CHECK(fs::exists(out / "mode_0.csv"));
  CHECK(fs::exists(out / "mode_2.csv"));
  std::istringstream in(slurp(out / "linsolve.jsonl"));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const json rec = json::parse(line);
    CHECK(rec.at("residual").get<double>() < 1e-6);
    CHECK(rec.at("C_k").get<double>() < 1.0);
    ++rows;
  }
  CHECK(rows == 2);
}
