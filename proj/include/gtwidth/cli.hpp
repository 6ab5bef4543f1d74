#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtwidth/json_io.hpp"

namespace gtwidth {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitPointOrbit = 3;
inline constexpr int kExitInternal = 4;

struct JobOptions {
  int samples = 1000;
  double tolerance = tol::kMembership;
  std::uint64_t seed = 0;
  std::optional<int> psi;
  std::string emit_hrep;
};

struct JobSpec {
  std::string group;
  int n = 0;
  std::vector<std::string> lambda;
  std::string command;
  JobOptions options;
};

/// GTWIDTH_SEED when set and parseable, 0 otherwise.
std::uint64_t default_seed();

/// Parses and chamber-validates the job's weight (exit-code-2 class errors).
Weight weight_from_job(const JobSpec& job);

Json run_bound(const JobSpec& job);
Json run_certificate(const JobSpec& job);
Json run_verify(const JobSpec& job);

struct JobResult {
  Json report;
  int status = kExitOk;
};

/// Runs one job, mapping every failure mode onto the exit-code contract;
/// never throws.
JobResult dispatch_job(const JobSpec& job);

JobSpec job_from_json_line(const std::string& line);

/// One JobSpec JSON per input line, one report per output line, input
/// order preserved; independent jobs run on `jobs` threads. Returns 0 when
/// every job succeeded, 1 otherwise.
int run_batch(std::istream& in, std::ostream& out, int jobs);

}  // namespace gtwidth
