#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stanleychar/shapes.hpp"

namespace stanleychar::cli {

enum class Command { Char, Stanley, Kerov, Cumulant, Maps, Verify };
enum class OutputFormat { Text, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Largest k accepted by the symbolic commands without --force.
inline constexpr int kDefaultGuard = 7;

struct JobSpec {
  Command command = Command::Char;
  OutputFormat output = OutputFormat::Text;
  unsigned threads = 1;
  bool force = false;

  std::optional<Partition> pi;
  std::optional<Partition> lambda;
  std::vector<int> p;
  std::vector<int> q;
  int k = 0;
  int j = 0;
  int ell = 1;

  // maps
  std::string sigma1;
  std::string sigma2;
  bool dot = false;

  // kerov
  bool use_cache = true;
  std::filesystem::path cache_dir;

  // verify
  std::string suite = "all";
  int kmax = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws UsageError unless every parameter the command needs is present and
/// in range, the complexity guard included.
void validate(const JobSpec& job);

/// Validates, computes and renders. Results go to `out`, diagnostics to
/// `err`. Returns one of the ExitCode values.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

struct ParseOutcome {
  std::optional<JobSpec> job;
  int exit_code = kExitOk;
  /// Help text or the usage error, when job is empty.
  std::string message;
};

ParseOutcome parse_command_line(const std::vector<std::string>& args);

/// STANLEYCHAR_CACHE, else $XDG_CACHE_HOME/stanleychar, else
/// $HOME/.cache/stanleychar; empty when none of these is set.
std::filesystem::path default_cache_dir();

}  // namespace stanleychar::cli
