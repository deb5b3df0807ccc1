#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcran/association.hpp"
#include "mcran/sim_harness.hpp"

namespace mcran::cli {

enum ExitStatus : int {
    kOk = 0,
    kInfeasible = 1,
    kInputError = 2,
    kVerificationFailed = 3,
};

struct SolveCommand {
    std::string config_path;
    CoordinationMode mode = CoordinationMode::Hybrid;
    SolverKind solver = SolverKind::Exact;
    std::size_t local_search_passes = 2;
    std::optional<std::uint64_t> seed;
};

struct VerifyCommand {
    std::string config_path;
    std::size_t cap = 12;
    std::optional<std::uint64_t> seed;
};

struct CountSetsCommand {
    std::string config_path;
    CoordinationMode mode = CoordinationMode::Hybrid;
    std::size_t cap = 12;
    std::optional<std::uint64_t> seed;
};

struct SweepCommand {
    std::string spec_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

struct ExportGraphCommand {
    std::string config_path;
    CoordinationMode mode = CoordinationMode::Hybrid;
    std::string out_path;
    std::optional<std::uint64_t> seed;
};

using Command = std::variant<SolveCommand, VerifyCommand, CountSetsCommand, SweepCommand, ExportGraphCommand>;

/// Result of parsing argv: a command, or an exit status to return right away
/// (help was printed, or the arguments were invalid).
using ParseResult = std::variant<Command, int>;

[[nodiscard]] ParseResult parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes a command; returns one of ExitStatus.
[[nodiscard]] int run(const Command& command, std::ostream& out, std::ostream& err);

/// parse + run. `args` excludes the program name.
[[nodiscard]] int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `<stem>_summary<ext>` next to `path`.
[[nodiscard]] std::string summary_path(const std::string& path);

}  // namespace mcran::cli
