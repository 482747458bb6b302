#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "knotsig/report.hpp"

namespace knotsig {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Full report for one input: diagram statistics, checkerboard data and, for
/// braids, the Seifert matrix, Alexander polynomial and signatures at `omegas`.
Json compute_record(const CatalogueRecord& r, const std::vector<UnitCirclePoint>& omegas);

/// Certificate plus expected-value checks for one record. The "status" field
/// is HOLDS, DEGRADED, FAILED or REJECTED.
Json verify_record(const CatalogueRecord& r);

/// Runs `knotsig <subcommand> ...`; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotsig
