#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsenum/hilbert.hpp"
#include "qsenum/ideal.hpp"
#include "qsenum/stability.hpp"

namespace qsenum::cli {

enum class Subcommand { Enum, Check, Pommaret, Hilbert, Gotzmann, Saturate };
enum class Format { Text, Json };
enum class Mode { QuasiStable, Borel };

struct Flags {
  Format format = Format::Text;
  bool count_only = false;
  bool show_pommaret = false;
  bool verify = false;
  std::optional<Degree> s_override;
  unsigned threads = 1;
};

struct CliRequest {
  Subcommand subcommand = Subcommand::Enum;
  RingSpec ring{0, 0};
  Mode mode = Mode::QuasiStable;
  std::optional<HilbertPolynomial> polynomial;
  std::optional<MonomialIdeal> ideal;
  std::optional<Characteristic> characteristic;
  Flags flags;
};

/// Bad command line: unknown flags, missing required inputs, unparsable text.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Throws UsageError.
CliRequest parse_request(const std::vector<std::string>& args);

/// Executes a parsed request. Domain errors propagate as qsenum::Error.
void run(const CliRequest& request, std::ostream& out);

/// parse_request + run with errors mapped to exit codes and written to err.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsenum::cli
