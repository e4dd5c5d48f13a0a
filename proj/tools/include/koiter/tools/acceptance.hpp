#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace koiter::tools {

/// \brief Outcome of one acceptance criterion.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// \brief Inputs shared by the criteria.
struct AcceptanceOptions {
  double nu = 0.3;
  unsigned jobs = 0;
  std::uint64_t seed = 42;
};

/// \brief Seed from KOITER_SEED, or 42 when unset; throws InvalidArgument on a malformed value.
std::uint64_t seed_from_environment();

/// \brief Number of acceptance criteria (ids 1..count).
int criterion_count();

/// \brief Short name of criterion `id`.
std::string criterion_title(int id);

/// \brief Runs one criterion; numerical errors inside it are reported as a failure.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// \brief "PASS [id] title: detail (t s)".
std::string format_result(const CriterionResult& result);

/// \brief Runs all criteria, printing each line to `out` as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& out);

}  // namespace koiter::tools
