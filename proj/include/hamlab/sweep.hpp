#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hamlab {

enum class SweepKind {
  Hamiltonicity,
  EdgePattern,
  VertexPattern,
  Ordered,
  GreedyInversion,
  Coupling,
  FirstMoment,
};

SweepKind parse_sweep_kind(const std::string& name);
std::string sweep_kind_name(SweepKind kind);

// One experiment over a grid of points (edge probabilities, colored-prefix
// lengths t, or inversion budgets M depending on the kind). Extra knobs ride
// in params; see run_sweep for the per-kind keys.
struct SweepSpec {
  SweepKind kind = SweepKind::Hamiltonicity;
  int n = 0;
  std::vector<double> grid;
  int trials = 1;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
};

struct SweepRow {
  double point = 0.0;
  long long trials = 0;
  long long successes = 0;
  double p_hat = 0.0;
  double stderr_value = 0.0;
  double stat = 0.0;  // kind-specific: mean inversions, mean |P*|, or a bound
  long long errors = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// Runs the experiment. Deterministic in spec alone: every trial draws from a
// stream derived from (seed, kind, global trial index) and per-trial slots
// are reduced in index order, so the worker count never changes the result.
// workers = 0 picks the hardware concurrency.
SweepResult run_sweep(const SweepSpec& spec, int workers = 0);

// Columns: point,trials,successes,p_hat,stderr,stat,errors with numbers at 6
// significant digits.
void emit_csv(const SweepResult& res, std::ostream& out);
void emit_csv_file(const SweepResult& res, const std::string& path);

}  // namespace hamlab
