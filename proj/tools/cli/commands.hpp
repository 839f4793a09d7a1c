#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropdegen/exponent.hpp"

namespace tropdegen::cli {

enum class ExperimentKind { Trop, Amoeba, ConvergeA, FamilyB, Polycircle, Moment };

/// Which absolute value the input's coefficients are tropicalized with.
/// Auto picks t-adic for families and trivial otherwise.
enum class ValuationMode { Auto, Trivial, TAdic };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitCriterion = 3;

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Trop;
  std::filesystem::path poly_path;
  std::filesystem::path polytope_path;
  std::filesystem::path out_dir = ".";
  std::optional<std::pair<double, double>> window;  // square [lo, hi]^2
  std::vector<double> rhos;
  std::vector<Complex> as;
  std::vector<double> alpha;
  std::optional<int> degree;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int phase_samples = 64;
  int grid = 512;
  ValuationMode valuation = ValuationMode::Auto;

  /// Throws std::invalid_argument when lists are not strictly decreasing in
  /// magnitude, contain zeros, or numeric fields are out of range.
  void validate() const;
};

ExperimentKind parse_kind(std::string_view name);
std::string_view kind_name(ExperimentKind kind);
ValuationMode parse_valuation(std::string_view name);

/// "r1,r2,..." with plain decimals.
std::vector<double> parse_real_list(std::string_view text);
/// "a1,a2,..." where each entry is x, yi, x+yi or x-yi.
std::vector<Complex> parse_complex_list(std::string_view text);
/// "lo,hi".
std::pair<double, double> parse_window(std::string_view text);

/// Reads a JSON experiment config. Relative paths inside it are resolved
/// against the config file's directory.
ExperimentConfig load_config(const std::filesystem::path& path);

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> written;
  std::string summary;  // human-readable report for stdout
};

CommandResult cmd_trop(const ExperimentConfig& config);
CommandResult cmd_amoeba(const ExperimentConfig& config);
CommandResult cmd_converge_a(const ExperimentConfig& config);
CommandResult cmd_family_b(const ExperimentConfig& config);
CommandResult cmd_polycircle(const ExperimentConfig& config);
CommandResult cmd_moment(const ExperimentConfig& config);

/// Dispatches on config.kind after validating it.
CommandResult run_experiment(const ExperimentConfig& config);

}  // namespace tropdegen::cli
