#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

const std::string kCli = METRIQ_CLI_PATH;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "metriq_cli_tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string cmd = kCli + " " + args + " >" + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("eval prints the point pair value") {
  const RunResult r = run(
      "eval --domain ball:n=2 --metric pp --x 0.3333333333333333,0 "
      "--y -0.3333333333333333,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.4472135954999579") != std::string::npos);
}

TEST_CASE("eval s on the half-plane") {
  const RunResult r =
      run("eval --domain halfspace:n=2 --metric s --x 0,1 --y 0,2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.3333333333333333") != std::string::npos);
  CHECK(r.output.find("\"method\": \"closed\"") != std::string::npos);
}

TEST_CASE("eval csv format") {
  const RunResult r = run(
      "eval --domain ball:n=2 --metric pp,jstar --x 0.5,0 --y -0.5,0 "
      "--format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("domain,metric,x,y,value,method\n", 0) == 0);
  CHECK(r.output.find("0.707106781") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("eval --domain ball:n=2 --metric s --x a,b --y 0,0.5").exit_code == 2);
  CHECK(run("eval --domain ball:n=9x --metric s --x 0,0 --y 0,0.5").exit_code == 2);
  CHECK(run("eval --domain ball:n=2 --metric bogus --x 0,0 --y 0,0.5").exit_code == 2);
  CHECK(run("verify --domain ball:n=2 --chain nope --n 10").exit_code == 2);
  CHECK(run("search --target nope --n 10").exit_code == 2);
  CHECK(run("bogus-subcommand").exit_code == 2);
  // metric/domain mismatch: w needs a convex domain
  CHECK(run("eval --domain 'punctured:(0,0);(1,0)' --metric w --x 0.5,0.5 "
            "--y 0.25,0.5").exit_code == 2);
  // strategy override only exists for s
  CHECK(run("eval --domain ball:n=2 --metric pp --strategy oracle --x 0.5,0 "
            "--y -0.5,0").exit_code == 2);
}

TEST_CASE("verify exit codes reflect the report") {
  CHECK(run("verify --domain sector:theta=1.5707963 --chain p-metric "
            "--n 20000 --seed 0").exit_code == 1);
  CHECK(run("verify --domain sector:theta=3.1415926535 --chain p-metric "
            "--n 20000 --seed 0").exit_code == 0);
  CHECK(run("verify --domain ball:n=2 --chain C48 --n 20000 --seed 7 "
            "--tol 1e-7").exit_code == 0);
}

TEST_CASE("search reports the special-case constants") {
  const RunResult r = run("search --target sw-special");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"argmax_h\": 0.48236") != std::string::npos);
  CHECK(r.output.find("1.0731321") != std::string::npos);
}

TEST_CASE("figure emits the requested grid") {
  const fs::path out = scratch_dir() / "fig16.csv";
  CHECK(run("figure --x 0.6 --resolution 16 --out " + out.string()).exit_code == 0);
  const std::string content = slurp(out);
  CHECK(content.rfind("re_y,im_y,quotient\n", 0) == 0);
  int lines = 0;
  for (char c : content)
    if (c == '\n') ++lines;
  CHECK(lines == 16 * 16 + 1);

  CHECK(run("figure --x 1.5 --resolution 16").exit_code == 2);
  CHECK(run("figure --x 0.6 --resolution 4").exit_code == 2);
  CHECK(run("figure --x 0.6 --resolution 16 --out /nonexistent-dir/f.csv")
            .exit_code == 3);
}

TEST_CASE("identical config and seed produce byte-identical reports") {
  const fs::path a = scratch_dir() / "a.json";
  const fs::path b = scratch_dir() / "b.json";
  const std::string cmd =
      "verify --domain ball:n=2 --chain L23a --n 20000 --seed 7 --out ";
  CHECK(run(cmd + a.string()).exit_code == 0);
  CHECK(run(cmd + b.string()).exit_code == 0);
  const std::string ca = slurp(a), cb = slurp(b);
  CHECK(!ca.empty());
  CHECK(ca == cb);

  const std::string search_cmd =
      "search --target p-quasi --domain ball:n=2 --n 20000 --seed 3 --out ";
  CHECK(run(search_cmd + a.string()).exit_code == 0);
  CHECK(run(search_cmd + b.string()).exit_code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(!slurp(a).empty());
}
