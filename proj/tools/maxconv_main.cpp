// maxconv: compute max-convolutions of discrete measures, run the library's
// verification suites, sample, and dump CDF curves.
//
// Exit codes: 0 success, 1 verification failure, 2 bad usage, 3 bad input.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "maxconv/io.hpp"
#include "maxconv/max_conv.hpp"
#include "maxconv/measure.hpp"
#include "maxconv/operator_model.hpp"
#include "maxconv/subordination.hpp"
#include "maxconv/verify_suites.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 20270423;

void emit_measure(const maxconv::DiscreteMeasure& m, const std::string& out) {
  if (out.empty())
    std::cout << maxconv::measure_to_json(m);
  else
    maxconv::save_measure(m, out);
}

nlohmann::ordered_json suite_json(const maxconv::SuiteReport& r) {
  return {{"suite", maxconv::suite_name(r.suite)}, {"trials", r.trials},
          {"seed", r.seed},                        {"tolerance", r.tolerance},
          {"max_error", r.max_error},              {"witness_x", r.witness_x},
          {"pass", r.pass}};
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed) {
  std::vector<maxconv::SuiteReport> reports;
  if (suite == "all")
    reports = maxconv::run_all_suites(trials, seed);
  else
    reports.push_back(maxconv::run_suite(maxconv::parse_suite(suite), trials, seed));

  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    out.push_back(suite_json(r));
    all_pass = all_pass && r.pass;
  }
  std::cout << (reports.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
  if (!all_pass) {
    for (const auto& r : reports)
      if (!r.pass)
        std::cerr << "FAIL " << maxconv::suite_name(r.suite) << ": max_error "
                  << r.max_error << " at x = " << r.witness_x
                  << " (tolerance " << r.tolerance << ")\n";
    return 1;
  }
  return 0;
}

// Random coupled pair; prints the spectral-maximum CDF next to the product
// of the marginal CDFs on the same grid.
int run_operator_demo(int d1, int d2, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto spectrum = [&rng](int dim) {
    std::vector<int> ticks(33);
    std::iota(ticks.begin(), ticks.end(), 0);
    std::shuffle(ticks.begin(), ticks.end(), rng);
    std::vector<double> spec(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      spec[static_cast<std::size_t>(i)] =
          ticks[static_cast<std::size_t>(i)] / 8.0;
    return spec;
  };
  auto x = maxconv::hermitian_with_spectrum(rng, spectrum(d1));
  auto y = maxconv::hermitian_with_spectrum(rng, spectrum(d2));
  auto s1 = maxconv::random_state(rng, d1);
  auto s2 = maxconv::random_state(rng, d2);
  auto pair = maxconv::monotone_pair(x, s1, y, s2);

  auto mu = maxconv::spectral_distribution(pair.x, pair.state);
  auto nu = maxconv::spectral_distribution(pair.y, pair.state);
  auto op = maxconv::spectral_maximum_distribution(pair.x, pair.y, pair.state);
  auto formula = maxconv::classical_max(mu, nu);

  std::cout << "           x   F_operator    F_formula\n"
            << std::fixed << std::setprecision(9);
  for (double g : maxconv::merged_atom_grid(op, formula)) {
    double probe = g + maxconv::kEigenvalueTol;
    std::cout << std::setw(12) << g << " " << std::setw(12) << op.cdf(probe)
              << " " << std::setw(12) << formula.cdf(probe) << "\n";
  }
  std::cout.unsetf(std::ios_base::floatfield);
  double ks = maxconv::ks_distance(op, formula, maxconv::kEigenvalueTol);
  std::cout << "ks_distance " << ks << "\n";
  return ks <= maxconv::kOperatorTol ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"max-convolutions of discrete probability measures"};
  app.require_subcommand(1);

  std::string kind, file_a, file_b, file_sigma, file_mu, file_out, suite = "all";
  double t = 1.0;
  int trials = 500, nsamples = 10;
  int dims_d1 = 3, dims_d2 = 3;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;

  auto* conv = app.add_subcommand("conv", "max-convolution of two measures");
  conv->add_option("--kind", kind, "classical|free|boolean|monotone")
      ->required()
      ->check(CLI::IsMember({"classical", "free", "boolean", "monotone"}));
  conv->add_option("--a", file_a, "first measure (JSON)")->required();
  conv->add_option("--b", file_b, "second measure (JSON)")->required();
  conv->add_option("--out", file_out, "output path (default: stdout)");

  auto* power = app.add_subcommand("power", "free max-convolution power");
  power->add_option("--t", t, "exponent, t >= 1")->required();
  power->add_option("--a", file_a, "measure (JSON)")->required();
  power->add_option("--out", file_out, "output path (default: stdout)");

  auto* sub = app.add_subcommand("subordinate", "max-subordination of mu by sigma");
  sub->add_option("--sigma", file_sigma, "subordinating measure (JSON)")->required();
  sub->add_option("--mu", file_mu, "subordinated measure (JSON)")->required();
  sub->add_option("--out", file_out, "output path (default: stdout)");

  auto* verify = app.add_subcommand("verify", "run property suites");
  verify->add_option("--suite", suite,
                     "decomposition|composition|distributivity|power|boolean|"
                     "theorem1|prop-projections|all")
      ->check(CLI::IsMember({"decomposition", "composition", "distributivity",
                             "power", "boolean", "theorem1",
                             "prop-projections", "all"}));
  verify->add_option("--trials", trials, "trials per suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");

  auto* sample = app.add_subcommand("sample", "draw samples from a measure");
  sample->add_option("--a", file_a, "measure (JSON)")->required();
  sample->add_option("--n", nsamples, "sample count")->check(CLI::PositiveNumber);
  auto* sample_seed = sample->add_option("--seed", seed, "RNG seed");

  auto* emit = app.add_subcommand("emit-cdf", "write the CDF as CSV");
  emit->add_option("--a", file_a, "measure (JSON)")->required();
  emit->add_option("--out", file_out, "CSV path (default: stdout)");

  auto* demo = app.add_subcommand("operator-demo",
                                  "coupled-pair maximum vs product formula");
  demo->add_option("--dims", [&dims_d1, &dims_d2](const std::vector<std::string>& vals) {
        int a = 0, b = 0;
        char comma = 0;
        std::istringstream in(vals.back());
        if (!(in >> a >> comma >> b) || comma != ',' || a < 2 || b < 2 ||
            a > 16 || b > 16)
          return false;
        dims_d1 = a;
        dims_d2 = b;
        return true;
      },
      "component dimensions as D1,D2 (2..16)");
  auto* demo_seed = demo->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  seed_given = (sample_seed->count() > 0) || (demo_seed->count() > 0) ||
               (verify->count("--seed") > 0);

  try {
    if (conv->parsed()) {
      auto a = maxconv::load_measure(file_a);
      auto b = maxconv::load_measure(file_b);
      maxconv::DiscreteMeasure r = maxconv::DiscreteMeasure::dirac(0.0);
      if (kind == "classical") r = maxconv::classical_max(a, b);
      else if (kind == "free") r = maxconv::free_max(a, b);
      else if (kind == "boolean") r = maxconv::boolean_max(a, b);
      else r = maxconv::monotone_max(a, b);
      emit_measure(r, file_out);
      return 0;
    }
    if (power->parsed()) {
      emit_measure(maxconv::free_max_power(maxconv::load_measure(file_a), t),
                   file_out);
      return 0;
    }
    if (sub->parsed()) {
      emit_measure(maxconv::subordinate(maxconv::load_measure(file_sigma),
                                        maxconv::load_measure(file_mu)),
                   file_out);
      return 0;
    }
    if (verify->parsed()) {
      if (!seed_given) std::cerr << "seed " << seed << " (default)\n";
      return run_verify(suite, trials, seed);
    }
    if (sample->parsed()) {
      if (!seed_given) std::cerr << "seed " << seed << " (default)\n";
      auto draws = maxconv::sample(maxconv::load_measure(file_a),
                                   static_cast<std::size_t>(nsamples), seed);
      std::cout.precision(17);
      for (double d : draws) std::cout << d << "\n";
      return 0;
    }
    if (emit->parsed()) {
      auto m = maxconv::load_measure(file_a);
      if (file_out.empty())
        std::cout << maxconv::cdf_to_csv(m);
      else
        maxconv::save_cdf_csv(m, file_out);
      return 0;
    }
    if (demo->parsed()) {
      if (!seed_given) std::cerr << "seed " << seed << " (default)\n";
      return run_operator_demo(dims_d1, dims_d2, seed);
    }
  } catch (const maxconv::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const maxconv::ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
