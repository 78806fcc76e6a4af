#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwa/json_io.hpp"

namespace gwa {

struct Task {
  std::string kind;
  json args;
};

struct JobSpec {
  GwaSpec gwa;
  std::vector<Task> tasks;
  std::uint64_t seed = 1;
};

/// Throws MathError(ParseError) for malformed documents and unknown or
/// incomplete tasks.
JobSpec parse_job(const json& doc);
JobSpec parse_job_text(const std::string& text);

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the job's seed
  long max_divisor_degree = 16;
  bool ansi = false;
  bool parallel = true;
};

struct RunResult {
  json report;
  int exit_code = 0;  // 0 success, 1 some task failed
};

/// One report section per task, in task order.
RunResult run(const JobSpec& job, const RunOptions& opts = {});

/// Report of the rank-one analysis of V_p.
json analyze_vp(const Rank1Module& m, std::uint64_t seed, bool ansi = false);
json diagram_json(const Rank1Module& m, bool ansi = false);

}  // namespace gwa
