#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hcwalk/walk.hpp"

namespace hcwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSimulateMaxN = 60;
inline constexpr int kCrossValidateMaxN = 12;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::optional<int> t_max;
  std::optional<int> t;
  std::string method = "all";  // chebyshev | bessel | simulate | all
  std::string suite;           // theorem2 | lemma1 | theorem1 | appendix
  Parity parity = Parity::all;
  int k_max = 0;               // 0: max(n, 40)
};

/// Each command writes CSV to `out` and diagnostics to `err`, and returns an
/// exit code. Invalid arguments throw usage_error.
int run_simulate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_figure1(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_p0(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cross_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_equilibrium(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs config.command; usage errors are reported on `err` and map to kExitUsage.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hcwalk::cli
