// End-to-end checks of the command-line tool, driven through a shell.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* env = std::getenv("QUARTET_CLI");
  REQUIRE_MESSAGE(env != nullptr, "QUARTET_CLI must point at the quartet binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const fs::path out_file = fs::temp_directory_path() / "quartet_cli_out.txt";
  const std::string cmd = cli_path() + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WEXITSTATUS(status), buf.str()};
}

fs::path sandbox() {
  const fs::path dir = fs::temp_directory_path() / "quartet_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("generate, search and verify a reconstruction") {
  const fs::path dir = sandbox() / "roundtrip";
  const auto gen = run("gen random-tree --n 12 --seed 11 --out " + (dir / "g").string());
  REQUIRE(gen.exit_code == 0);

  const auto make = run("maketree " + (dir / "g" / "matrix.txt").string() + " --seed 2 -o " +
                        (dir / "tree.nwk").string());
  REQUIRE(make.exit_code == 0);
  CHECK(make.out.find("S(T) = 1.000000") != std::string::npos);

  std::ifstream generated(dir / "g" / "tree.nwk"), found(dir / "tree.nwk");
  std::string a, b;
  std::getline(generated, a);
  std::getline(found, b);
  CHECK(a == b);  // canonical emission makes equality textual
}

TEST_CASE("repeated runs are byte-identical") {
  const fs::path dir = sandbox() / "determinism";
  REQUIRE(run("gen random-tree --n 10 --seed 3 --out " + (dir / "g").string()).exit_code == 0);
  const std::string matrix = (dir / "g" / "matrix.txt").string();

  const std::string invocation = "maketree " + matrix + " --seed 77 --termination agreement:2";
  const auto first = run(invocation + " -o " + (dir / "t1.nwk").string() + " --stats " +
                         (dir / "s1.txt").string());
  const auto second = run(invocation + " -o " + (dir / "t2.nwk").string() + " --stats " +
                          (dir / "s2.txt").string());
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(slurp(dir / "t1.nwk") == slurp(dir / "t2.nwk"));
  CHECK(slurp(dir / "s1.txt") == slurp(dir / "s2.txt"));
  CHECK(!slurp(dir / "s1.txt").empty());
}

TEST_CASE("input errors exit with code 2 and name the line") {
  const fs::path dir = sandbox() / "errors";
  fs::create_directories(dir);
  {
    std::ofstream bad(dir / "bad.txt");
    bad << "4\na 0 0.1 0.2 0.3\nb 0.1 0\nc 0 0 0 0\nd 0 0 0 0\n";
  }
  const auto res = run("maketree " + (dir / "bad.txt").string());
  CHECK(res.exit_code == 2);
  CHECK(res.out.find("line 3") != std::string::npos);

  const auto missing = run("maketree " + (dir / "absent.txt").string());
  CHECK(missing.exit_code == 2);
}

TEST_CASE("degenerate tables exit with code 3") {
  const fs::path dir = sandbox() / "degenerate";
  fs::create_directories(dir);
  {
    std::ofstream m(dir / "flat.txt");
    m << "4\n";
    for (const char* l : {"a", "b", "c", "d"}) {
      m << l;
      for (int j = 0; j < 4; ++j) m << " 0.5";
      m << "\n";
    }
  }
  const auto res = run("maketree " + (dir / "flat.txt").string());
  CHECK(res.exit_code == 3);
}

TEST_CASE("agreement timeout exits with code 4") {
  const fs::path dir = sandbox() / "timeout";
  REQUIRE(run("gen random-tree --n 12 --seed 5 --out " + (dir / "g").string()).exit_code == 0);
  const auto res = run("maketree " + (dir / "g" / "matrix.txt").string() + " --seed 1 --cap 3");
  CHECK(res.exit_code == 4);
  CHECK(res.out.find("run 0") != std::string::npos);
}

TEST_CASE("enumeration cap exits with code 5") {
  const fs::path dir = sandbox() / "cap";
  REQUIRE(run("gen random-tree --n 12 --seed 6 --out " + (dir / "g").string()).exit_code == 0);
  const auto res = run("exact " + (dir / "g" / "matrix.txt").string() + " --cap 10");
  CHECK(res.exit_code == 5);
}

TEST_CASE("exact solves weights files and reports optima counts") {
  const fs::path dir = sandbox() / "weights";
  fs::create_directories(dir);
  {
    std::ofstream w(dir / "gap.txt");
    w << "quartets 5\nlabels u v w x y\n";
    w << "0 1 2 3 0.1\n0 2 1 3 1\n0 3 1 2 1\n";
    w << "0 1 2 4 1\n0 1 3 4 1\n0 4 2 3 1\n1 4 2 3 1\n";
  }
  const auto res = run("exact " + (dir / "gap.txt").string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("S(T) = 0.816327") != std::string::npos);
  CHECK(res.out.find("optimal trees: 1") != std::string::npos);
  // the optimum groups (u,v) and (w,x) around y; this is its canonical form
  CHECK(res.out.find("(u,v,((w,x)k2,y)k1)k0;") != std::string::npos);
}

TEST_CASE("ncd pipeline clusters identical files as degenerate") {
  const fs::path dir = sandbox() / "ncd";
  fs::create_directories(dir / "files");
  for (const char* name : {"p", "q", "r", "s"}) {
    std::ofstream f(dir / "files" / name, std::ios::binary);
    for (int i = 0; i < 2048; ++i) f.put(static_cast<char>(i % 251));
  }
  const auto ncd = run("ncd " + (dir / "files").string() + " -o " + (dir / "m.txt").string());
  REQUIRE(ncd.exit_code == 0);
  const auto make = run("maketree " + (dir / "m.txt").string());
  CHECK(make.exit_code == 3);
}

TEST_CASE("gen tags writes the corpus") {
  const fs::path dir = sandbox() / "tags";
  const auto res = run("gen tags --seed 4 --ci-scale --out " + (dir / "t").string());
  REQUIRE(res.exit_code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir / "t"))
    if (entry.is_regular_file()) ++files;
  CHECK(files == 22);
  CHECK(fs::file_size(dir / "t" / "abcd") == 8 * 1024);
}

TEST_SUITE_END();
