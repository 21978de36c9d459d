#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_cli;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path export_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "mtclab_cli_corpus";
    fs::remove_all(d);
    const auto r = run("examples-export --out " + d.string());
    REQUIRE(r.status == 0);
    return d;
  }();
  return dir;
}

}  // namespace

TEST_CASE("classify 13 writes the golden trace") {
  const auto trace = fs::temp_directory_path() / "mtclab_cli_13.trace";
  const auto r = run("classify --rank 13 --trace " + trace.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("pointed") != std::string::npos);
  CHECK(slurp(trace) == slurp(fs::path(MTCLAB_GOLDEN_DIR) / "rank13.trace"));
}

TEST_CASE("non-pointed verdicts exit 1") {
  CHECK(run("classify --rank 19").status == 1);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("classify --rank 14").status == 2);
  CHECK(run("validate /nonexistent/file.ring").status == 2);
  CHECK(run("oracle-dims --rank 13 --bound 100").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("classify --rank 13 --format yaml").status == 2);
  const auto bad = fs::temp_directory_path() / "mtclab_bad.ring";
  std::ofstream(bad) << "{\"rank\": 2, \"dual\": [0, 1], \"coeffs\": [[0,0,0,1],[0,1,7,1]]}";
  CHECK(run("validate " + bad.string()).status == 2);
}

TEST_CASE("oracle-dims at rank 15 finds nothing") {
  const auto r = run("oracle-dims --rank 15 --bound 99 --format machine");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool zero = false;
  for (const auto& sec : j["sections"])
    for (const auto& item : sec["items"])
      if (item[0] == "solutions" && item[1] == "0") zero = true;
  CHECK(zero);
}

TEST_CASE("validate on the exported Z3 ring") {
  const auto r = run("validate " + (export_dir() / "z3.ring").string());
  CHECK(r.status == 0);
}

TEST_CASE("every exported file passes its checks") {
  int rings = 0;
  int modular = 0;
  for (const auto& e : fs::directory_iterator(export_dir())) {
    const auto path = e.path().string();
    CAPTURE(path);
    if (e.path().extension() == ".ring") {
      ++rings;
      CHECK(run("validate " + path).status == 0);
      CHECK(run("analyze " + path).status == 0);
    } else if (e.path().extension() == ".modular") {
      ++modular;
      const int expect = e.path().stem() == "z3_degenerate" ? 1 : 0;
      CHECK(run("modular-verify " + path).status == expect);
    }
  }
  CHECK(rings >= 10);
  CHECK(modular >= 9);
}

TEST_CASE("machine output is byte-identical across runs") {
  std::vector<std::string> cmds;
  for (const auto& e : fs::directory_iterator(export_dir())) {
    const auto path = e.path().string();
    if (e.path().extension() == ".ring") {
      cmds.push_back("validate " + path);
      cmds.push_back("analyze " + path);
    } else {
      cmds.push_back("modular-verify " + path);
    }
  }
  cmds.push_back("classify --rank 17");
  cmds.push_back("oracle-dims --rank 25 --bound 15");
  for (const auto& c : cmds) {
    CAPTURE(c);
    const auto a = run(c + " --format machine");
    const auto b = run(c + " --format machine");
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
    CHECK(nlohmann::json::accept(a.out));
  }
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path to mtclab> [doctest options]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
