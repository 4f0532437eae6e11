// End-to-end checks of the command-line tool: spawns the real binary (path
// in argv[1]), inspects exit codes and output files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

int g_failures = 0;

#define CHECK_MSG(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) {                                                             \
      std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << (msg)    \
                << "\n";                                                       \
      ++g_failures;                                                            \
    }                                                                          \
  } while (0)

std::string g_cli;
std::filesystem::path g_dir;

int run(const std::string& args) {
  const std::string cmd = "\"" + g_cli + "\" " + args + " > " +
                          (g_dir / "stdout.txt").string() + " 2> " +
                          (g_dir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string last_stdout() { return slurp(g_dir / "stdout.txt"); }

std::vector<std::string> csv_column(const std::string& text, std::size_t col) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string field;
    for (std::size_t i = 0; i <= col; ++i) {
      if (!std::getline(fields, field, ',')) field.clear();
    }
    out.push_back(field);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-manhattan-binary>\n";
    return 2;
  }
  g_cli = argv[1];
  g_dir = std::filesystem::temp_directory_path() / "manhattan_cli_test";
  std::filesystem::create_directories(g_dir);

  // formula: d=2 msd column is 0,1,3,5,7,9 (floats).
  {
    CHECK_MSG(run("formula --d 2 --n-max 5") == 0, "formula exits 0");
    const auto msd_float = csv_column(last_stdout(), 4);
    const std::vector<std::string> expected = {"0", "1", "3", "5", "7", "9"};
    CHECK_MSG(msd_float.size() == 7, "header + 6 rows");
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK_MSG(msd_float[i + 1] == expected[i], "msd value at n=" + std::to_string(i));
    }
    const auto msd_exact = csv_column(last_stdout(), 3);
    CHECK_MSG(msd_exact[2] == "1/1", "exact fraction at n=1");
  }

  // formula json
  {
    CHECK_MSG(run("formula --d 3 --n-max 2 --format json") == 0, "formula json");
    const std::string out = last_stdout();
    CHECK_MSG(out.find("\"num\": \"8\"") != std::string::npos &&
                  out.find("\"den\": \"3\"") != std::string::npos,
              "8/3 appears in json");
  }

  // compare oracle-only: exact equality everywhere, exit 0.
  {
    CHECK_MSG(run("compare --d 3 --n-max 6 --chains 0") == 0, "compare exits 0");
    const std::string out = last_stdout();
    CHECK_MSG(out.find("FAIL") == std::string::npos, "no FAIL rows");
  }

  // census: d=5 has 16 environments, verdict PASS.
  {
    CHECK_MSG(run("census --d 5") == 0, "census exits 0");
    const std::string out = last_stdout();
    CHECK_MSG(out.find("count=16") != std::string::npos, "16 environments");
    CHECK_MSG(out.find("verdict=PASS") != std::string::npos, "verdict PASS");
  }

  // census on the iid rule has no expected count.
  {
    CHECK_MSG(run("census --d 3 --rule iid:9") == 0, "iid census exits 0");
    CHECK_MSG(last_stdout().find("verdict=N/A") != std::string::npos, "N/A verdict");
  }

  // coupling: fine at d=2, usage error at d=3.
  {
    CHECK_MSG(run("coupling --d 2 --n-max 3") == 0, "coupling d=2 exits 0");
    CHECK_MSG(run("coupling --d 3 --n-max 3") == 2, "coupling d=3 is a usage error");
    CHECK_MSG(slurp(g_dir / "stderr.txt").find("two dimensions") != std::string::npos,
              "reason mentions two dimensions");
  }

  // exact: values and budget behaviour.
  {
    CHECK_MSG(run("exact --d 2 --n-max 4") == 0, "exact exits 0");
    const auto msd_col = csv_column(last_stdout(), 1);
    CHECK_MSG(msd_col.size() == 6 && msd_col[5] == "7/1", "exact msd(2,4) = 7");
    const auto ret = csv_column(last_stdout(), 5);
    CHECK_MSG(ret[5] == "1/8", "return probability 1/8 at n=4");

    CHECK_MSG(run("exact --d 4 --n-max 500 --max-sites 10000") == 3,
              "budget exceeded exits 3");
    CHECK_MSG(slurp(g_dir / "stderr.txt").find("budget") != std::string::npos,
              "budget error is explained");
  }

  // simulate: determinism across worker counts, byte-identical files.
  {
    const auto f1 = (g_dir / "sim1.csv").string();
    const auto f8 = (g_dir / "sim8.csv").string();
    const std::string common =
        "simulate --d 3 --n 50 --chains 20000 --seed 42 --stride 10 ";
    CHECK_MSG(run(common + "--workers 1 --out " + f1) == 0, "simulate w1");
    CHECK_MSG(run(common + "--workers 8 --out " + f8) == 0, "simulate w8");
    const std::string c1 = slurp(f1), c8 = slurp(f8);
    CHECK_MSG(!c1.empty() && c1 == c8, "worker count does not change bytes");
    CHECK_MSG(c1.find("# manhattan simulate v1\n") == 0, "versioned header");
  }

  // environment variable overrides, flags win.
  {
    const std::string env_run =
        "env MANHATTAN_N_MAX=4 \"" + g_cli + "\" formula --d 2 > " +
        (g_dir / "stdout.txt").string() + " 2> " + (g_dir / "stderr.txt").string();
    CHECK_MSG(WEXITSTATUS(std::system(env_run.c_str())) == 0, "env var accepted");
    CHECK_MSG(csv_column(last_stdout(), 0).size() == 6, "n-max from env (5 rows+hdr)");

    const std::string both =
        "env MANHATTAN_N_MAX=4 \"" + g_cli + "\" formula --d 2 --n-max 1 > " +
        (g_dir / "stdout.txt").string() + " 2>/dev/null";
    CHECK_MSG(WEXITSTATUS(std::system(both.c_str())) == 0, "flag+env accepted");
    CHECK_MSG(csv_column(last_stdout(), 0).size() == 3, "flag beats env");
  }

  // usage errors exit 2.
  {
    CHECK_MSG(run("formula --d 1 --n-max 3") == 2, "d=1 rejected");
    CHECK_MSG(run("nonsense") == 2, "unknown subcommand");
    CHECK_MSG(run("simulate --d 2 --rule iid") == 2, "malformed rule");
    CHECK_MSG(run("formula --d 2 --format svg") == 2, "svg invalid for formula");
    CHECK_MSG(run("") == 2, "missing subcommand");
  }

  // report: svg artifact.
  {
    const auto svg_path = (g_dir / "plot.svg").string();
    CHECK_MSG(run("report --d 2 --n-max 30 --chains 2000 --seed 1 --out " + svg_path) ==
                  0,
              "report exits 0");
    const std::string svg = slurp(svg_path);
    CHECK_MSG(svg.find("<svg") == 0, "svg written");
    CHECK_MSG(svg.find("diffusive asymptote") != std::string::npos, "legend present");
  }

  if (g_failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cerr << g_failures << " cli check(s) failed\n";
  return 1;
}
