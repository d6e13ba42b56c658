#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hcwalk_cli/commands.hpp"

int main(int argc, char** argv) {
  using hcwalk::cli::RunConfig;
  CLI::App app{"Grover-coin quantum walk on the hypercube: simulation and bound checks"};
  app.require_subcommand(1);

  RunConfig config;
  std::string out_path;
  const std::map<std::string, hcwalk::Parity> parities{
      {"all", hcwalk::Parity::all}, {"even", hcwalk::Parity::even}, {"odd", hcwalk::Parity::odd}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "Output CSV path (default stdout)");
    sub->add_option("--parity", config.parity, "Restrict steps to all|even|odd")
        ->transform(CLI::CheckedTransformer(parities, CLI::ignore_case));
  };
  auto n_opts = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Hypercube dimension");
    sub->add_option("--n-min", config.n_min, "First dimension of a range");
    sub->add_option("--n-max", config.n_max, "Last dimension of a range");
  };

  auto* simulate = app.add_subcommand("simulate", "Per-step return and maximum vertex probabilities");
  n_opts(simulate);
  simulate->add_option("--t-max", config.t_max, "Last step (default 2n)");
  common(simulate);

  auto* figure1 = app.add_subcommand("figure1", "t_min and the probability there, per dimension");
  n_opts(figure1);
  common(figure1);

  auto* p0 = app.add_subcommand("p0", "Return amplitude by simulation, Chebyshev sum and Bessel integral");
  n_opts(p0);
  p0->add_option("--t", config.t, "Single step");
  p0->add_option("--t-max", config.t_max, "Last step when --t is absent (default n)");
  p0->add_option("--method", config.method, "chebyshev|bessel|simulate|all")
      ->check(CLI::IsMember({"chebyshev", "bessel", "simulate", "all"}));
  p0->add_option("--k-max", config.k_max, "Segments kept in the Bessel integral (default max(n,40))");
  common(p0);

  auto* verify = app.add_subcommand("verify", "Check the integral, amplification and rate bounds");
  n_opts(verify);
  verify->add_option("--suite", config.suite, "theorem2|lemma1|theorem1|appendix")
      ->required()
      ->check(CLI::IsMember({"theorem2", "lemma1", "theorem1", "appendix"}));
  verify->add_option("--t", config.t, "Bessel order for theorem2 (default floor(0.8663 n))");
  verify->add_option("--t-max", config.t_max, "Last step for lemma1 (default 20)");
  common(verify);

  auto* cross = app.add_subcommand("cross-validate", "Symmetric simulator against the dense full-state walk");
  n_opts(cross);
  cross->add_option("--t-max", config.t_max, "Last step (default 30)");
  common(cross);

  auto* equilibrium = app.add_subcommand("equilibrium", "Balance point of the two rate estimates");
  common(equilibrium);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hcwalk::cli::kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();

  if (out_path.empty()) return hcwalk::cli::dispatch(config, std::cout, std::cerr);
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return hcwalk::cli::kExitUsage;
  }
  const int code = hcwalk::cli::dispatch(config, file, std::cerr);
  file.close();
  if (!file) {
    std::cerr << "error: failed writing " << out_path << '\n';
    return hcwalk::cli::kExitUsage;
  }
  return code;
}
