#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <random>
#include <string>

#include "doctest.h"
#include "maxconv/io.hpp"
#include "maxconv/max_conv.hpp"
#include "maxconv/random_measures.hpp"
#include "spawn_support.hpp"
#include "test_support.hpp"

using maxconv::testing::run_cli;
using maxconv::testing::write_file;

namespace {

std::string fixture(const char* name, const std::string& text) {
  std::string path = std::string("/tmp/maxconv_cli_fix_") + name;
  write_file(path, text);
  return path;
}

}  // namespace

TEST_CASE("conv computes the classical maximum of two diracs") {
  auto a = fixture("d1.json", R"({"atoms":[{"x":1,"w":1.0}]})");
  auto b = fixture("d2.json", R"({"atoms":[{"x":2,"w":1.0}]})");
  auto r = run_cli("conv --kind classical --a " + a + " --b " + b);
  CHECK(r.code == 0);
  CHECK(maxconv::measure_from_json(r.out) ==
        maxconv::DiscreteMeasure::dirac(2.0));
}

TEST_CASE("conv kinds give their closed forms on the bernoulli pair") {
  auto h = fixture("half.json",
                   R"({"atoms":[{"x":0,"w":0.5},{"x":1,"w":0.5}]})");
  auto classical = run_cli("conv --kind classical --a " + h + " --b " + h);
  CHECK(maxconv::measure_from_json(classical.out) ==
        maxconv::testing::measure({{0.0, 0.25}, {1.0, 0.75}}));

  auto free = run_cli("conv --kind free --a " + h + " --b " + h);
  CHECK(maxconv::measure_from_json(free.out) ==
        maxconv::DiscreteMeasure::dirac(1.0));

  auto monotone = run_cli("conv --kind monotone --a " + h + " --b " + h);
  CHECK(maxconv::measure_from_json(monotone.out) ==
        maxconv::measure_from_json(classical.out));

  auto boolean = run_cli("conv --kind boolean --a " + h + " --b " + h);
  auto bm = maxconv::measure_from_json(boolean.out);
  CHECK(bm.cdf(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("boolean conv refuses negative support with exit 3") {
  auto neg = fixture("neg.json",
                     R"({"atoms":[{"x":-1,"w":0.5},{"x":1,"w":0.5}]})");
  auto h = fixture("half2.json",
                   R"({"atoms":[{"x":0,"w":0.5},{"x":1,"w":0.5}]})");
  auto r = run_cli("conv --kind boolean --a " + neg + " --b " + h);
  CHECK(r.code == 3);
  CHECK(r.err.find("-1") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("conv --kind classical").code == 2);
  CHECK(run_cli("conv --kind nonsense --a x --b y").code == 2);
  CHECK(run_cli("verify --trials -4").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("malformed measures exit 3 naming the problem") {
  auto bad = fixture("bad.json",
                     R"({"atoms":[{"x":0,"w":0.6},{"x":1,"w":0.6}]})");
  auto h = fixture("half3.json",
                   R"({"atoms":[{"x":0,"w":0.5},{"x":1,"w":0.5}]})");
  auto r = run_cli("conv --kind classical --a " + bad + " --b " + h);
  CHECK(r.code == 3);
  CHECK(r.err.find("weights sum 1.2") != std::string::npos);

  auto gone = run_cli("emit-cdf --a /nonexistent/nope.json");
  CHECK(gone.code == 3);

  auto garbage = fixture("garbage.json", "not json at all");
  CHECK(run_cli("emit-cdf --a " + garbage).code == 3);
}

TEST_CASE("power applies the free max power and rejects t below one") {
  auto q = fixture("q.json", R"({"atoms":[{"x":0,"w":0.75},{"x":1,"w":0.25}]})");
  auto r = run_cli("power --t 2 --a " + q);
  CHECK(r.code == 0);
  CHECK(maxconv::measure_from_json(r.out) ==
        maxconv::testing::measure({{0.0, 0.5}, {1.0, 0.5}}));
  CHECK(run_cli("power --t 0.5 --a " + q).code == 3);
}

TEST_CASE("subordinate writes the subordinated factor") {
  auto q = fixture("q2.json",
                   R"({"atoms":[{"x":0,"w":0.75},{"x":1,"w":0.25}]})");
  auto r = run_cli("subordinate --sigma " + q + " --mu " + q);
  CHECK(r.code == 0);
  auto m = maxconv::measure_from_json(r.out);
  CHECK(m.cdf(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(m.cdf(1.0) == 1.0);
}

TEST_CASE("emit-cdf prints the documented CSV") {
  auto h = fixture("half4.json",
                   R"({"atoms":[{"x":0,"w":0.5},{"x":1,"w":0.5}]})");
  auto r = run_cli("emit-cdf --a " + h);
  CHECK(r.code == 0);
  CHECK(r.out == "x,F\n-1,0\n0,0.5\n1,1\n");
}

TEST_CASE("conv --out writes a loadable file that round trips") {
  std::mt19937_64 rng(21);
  auto m = maxconv::random_measure(rng);
  auto path = std::string("/tmp/maxconv_cli_rt.json");
  maxconv::save_measure(m, path);
  // Classical max with a dirac below the support is the identity.
  auto below = fixture("below.json",
                       R"({"atoms":[{"x":-1e6,"w":1.0}]})");
  auto out = std::string("/tmp/maxconv_cli_rt_out.json");
  auto r = run_cli("conv --kind classical --a " + path + " --b " + below +
                   " --out " + out);
  CHECK(r.code == 0);
  CHECK(maxconv::load_measure(out) == m);
  std::remove(path.c_str());
  std::remove(out.c_str());
}

TEST_CASE("sample is deterministic per seed and prints n draws") {
  auto h = fixture("half5.json",
                   R"({"atoms":[{"x":0,"w":0.5},{"x":1,"w":0.5}]})");
  auto a = run_cli("sample --a " + h + " --n 25 --seed 9");
  auto b = run_cli("sample --a " + h + " --n 25 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  int lines = 0;
  for (char c : a.out) lines += (c == '\n');
  CHECK(lines == 25);
  // Seedless runs announce the default seed they used.
  auto c = run_cli("sample --a " + h + " --n 2");
  CHECK(c.err.find("seed") != std::string::npos);
  CHECK(c.err.find("default") != std::string::npos);
}

TEST_CASE("verify emits a report and the right exit code") {
  auto r = run_cli("verify --suite decomposition --trials 40 --seed 11");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"suite\": \"decomposition\"") != std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
  CHECK(r.out.find("\"max_error\"") != std::string::npos);

  CHECK(run_cli("verify --suite bogus --trials 5").code == 2);

  auto all = run_cli("verify --suite all --trials 25 --seed 2");
  CHECK(all.code == 0);
  CHECK(all.out.find("theorem1") != std::string::npos);
  CHECK(all.out.find("prop-projections") != std::string::npos);
}

TEST_CASE("operator-demo prints matching CDF columns") {
  auto r = run_cli("operator-demo --dims 3,2 --seed 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("F_operator") != std::string::npos);
  CHECK(r.out.find("ks_distance") != std::string::npos);
  CHECK(run_cli("operator-demo --dims 1,9").code == 2);
}
