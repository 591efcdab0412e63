#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qff::cli {

/// Exit statuses of the front-end.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInternalError = 2,
  kVerificationFailed = 3,
};

struct Invocation {
  std::string field_spec;
  std::string command;
  std::vector<std::string> args;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> place;
  bool verify = false;
  std::optional<unsigned> budget_degree;
};

/// Runs one command; the result goes to `out`, diagnostics to `err`.
int run(const Invocation& inv, std::ostream& out, std::ostream& err);

/// Parses argv (QFORMFF_SEED supplies --seed when absent) and runs.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qff::cli
