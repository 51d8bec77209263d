#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cil(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" CIL_PATH "\" " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("bound") {
  auto r = cil("bound --n 10 --k 5,3,2");
  CHECK(r.code == 0);
  CHECK(has(r, "max{205, 171} = 205"));
  r = cil("bound --n 10 --k 5,3,2 --theorem t16 --istar 3");
  CHECK(r.code == 0);
  CHECK(has(r, "max{46, 171} = 171"));
  CHECK(cil("bound --n 3 --k 2,2").code == 2);
  CHECK(cil("bound --n 10 --k 5,3,2 --theorem t16").code == 2);
  CHECK(cil("bound --n 10").code == 2);
  CHECK(cil("frobnicate").code == 2);
  r = cil("bound --n 10 --k 5,3,2 --format json");
  CHECK(r.code == 0);
  CHECK(has(r, "\"205\""));
}

TEST_CASE("search and extremal") {
  auto r = cil("search --n 10 --k 5,3,2");
  CHECK(r.code == 0);
  CHECK(has(r, "optimum: 205"));
  CHECK(has(r, "agreement: true"));
  r = cil("search --n 4 --k 2,2");
  CHECK(has(r, "optimum: 6"));
  CHECK(has(r, "optimal size vectors (5)"));
  r = cil("search --n 5 --k 3,2 --engine full");
  CHECK(r.code == 0);
  CHECK(has(r, "optimum: 10"));
  r = cil("search --n 10 --k 5,3,2 --theorem t16 --istar 3");
  CHECK(has(r, "optimum: 171"));
  r = cil("extremal --n 5 --k 3,2");
  CHECK(r.code == 0);
  CHECK(has(r, "agreement"));
  CHECK(cil("search --n 10 --k 5,3,2 --engine full").code == 2);
}

TEST_CASE("verify") {
  auto r = cil("verify");
  CHECK(r.code == 0);
  CHECK(has(r, "failed=0"));
  CHECK(has(r, "checked=166 agreed=166"));
}

TEST_CASE("shadow") {
  auto r = cil("shadow --l 2 \"n=6 k=2 {1.2, 1.3, 1.4, 1.5, 1.6}\"");
  CHECK(r.code == 0);
  CHECK(has(r, "equality"));
  CHECK(has(r, "size: 10"));
  r = cil("shadow --l 3 \"n=5 k=3 {1.2.3}\"");
  CHECK(r.code == 0);
  CHECK(has(r, "no threshold"));
  r = cil("shadow --l 2 \"n=4 k=2 {1.2}\"");
  CHECK(r.code == 0);
  CHECK(has(r, "3.4"));
  CHECK(cil("shadow --l 2 \"n=4 k=2 {1.2.3}\"").code == 2);
}

TEST_CASE("auxgraph") {
  auto r = cil("auxgraph --n 7 --k 3,3 --istar 1 --s 1");
  CHECK(r.code == 0);
  CHECK(has(r, "10"));
  CHECK(cil("auxgraph --n 6 --k 3,2 --istar 1 --s 2").code == 2);
}

TEST_CASE("ground cap from the environment") {
  CHECK(cil("search --n 10 --k 5,3,2", "CIL_MAX_N=8").code == 2);
  CHECK(cil("bound --n 10 --k 5,3,2", "CIL_MAX_N=8").code == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = cil("verify --format json");
  const auto b = cil("verify --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
