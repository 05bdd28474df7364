#include "hamlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hamlab/brute_force.hpp"
#include "hamlab/coloring.hpp"
#include "hamlab/coupling.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/greedy.hpp"
#include "hamlab/inversion.hpp"
#include "hamlab/ordered.hpp"
#include "hamlab/pattern.hpp"
#include "hamlab/posa.hpp"
#include "hamlab/rng.hpp"

namespace hamlab {
namespace {

constexpr int kExactCap = 12;

struct TrialOut {
  bool success = false;
  bool error = false;
  bool stat_valid = false;
  double stat = 0.0;
};

double param_or(const SweepSpec& spec, const std::string& key, double def) {
  const auto it = spec.params.find(key);
  return it == spec.params.end() ? def : it->second;
}

// Every trial writes its own slot and slots are reduced in index order, so
// the outcome is identical for any worker count.
std::vector<TrialOut> run_trials(
    std::size_t total, int workers,
    const std::function<TrialOut(std::size_t)>& fn) {
  std::vector<TrialOut> slots(total);
  int w = workers > 0 ? workers
                      : std::max(1u, std::thread::hardware_concurrency());
  w = int(std::min<std::size_t>(std::size_t(w), std::max<std::size_t>(total, 1)));
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
      slots[i] = fn(i);
    }
  };
  if (w <= 1) {
    body();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(size_t(w));
    for (int t = 0; t < w; ++t) threads.emplace_back(body);
    for (auto& t : threads) t.join();
  }
  return slots;
}

SweepResult reduce_rows(const SweepSpec& spec,
                        const std::vector<TrialOut>& slots) {
  SweepResult res;
  for (std::size_t row = 0; row < spec.grid.size(); ++row) {
    SweepRow r;
    r.point = spec.grid[row];
    r.trials = spec.trials;
    double stat_sum = 0.0;
    long long stat_count = 0;
    for (int t = 0; t < spec.trials; ++t) {
      const TrialOut& o = slots[row * std::size_t(spec.trials) + t];
      r.successes += o.success;
      r.errors += o.error;
      if (o.stat_valid) {
        stat_sum += o.stat;
        ++stat_count;
      }
    }
    r.p_hat = double(r.successes) / double(r.trials);
    r.stderr_value = std::sqrt(r.p_hat * (1.0 - r.p_hat) / double(r.trials));
    r.stat = stat_count > 0 ? stat_sum / double(stat_count) : 0.0;
    res.rows.push_back(r);
  }
  return res;
}

void check_probability_grid(const SweepSpec& spec) {
  for (double p : spec.grid) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("grid point outside [0, 1]");
    }
  }
}

ColorPattern fixed_edge_pattern(const SweepSpec& spec, int k) {
  Rng rng(spec.seed, "pattern");
  std::vector<int> seq(size_t(spec.n));
  for (int& c : seq) c = rng.uniform_int(1, k);
  return ColorPattern(std::move(seq));
}

}  // namespace

SweepKind parse_sweep_kind(const std::string& name) {
  if (name == "hamiltonicity") return SweepKind::Hamiltonicity;
  if (name == "edge-pattern") return SweepKind::EdgePattern;
  if (name == "vertex-pattern") return SweepKind::VertexPattern;
  if (name == "ordered") return SweepKind::Ordered;
  if (name == "greedy-inversion") return SweepKind::GreedyInversion;
  if (name == "coupling") return SweepKind::Coupling;
  if (name == "first-moment") return SweepKind::FirstMoment;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

std::string sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Hamiltonicity: return "hamiltonicity";
    case SweepKind::EdgePattern: return "edge-pattern";
    case SweepKind::VertexPattern: return "vertex-pattern";
    case SweepKind::Ordered: return "ordered";
    case SweepKind::GreedyInversion: return "greedy-inversion";
    case SweepKind::Coupling: return "coupling";
    case SweepKind::FirstMoment: return "first-moment";
  }
  throw std::logic_error("unhandled experiment kind");
}

SweepResult run_sweep(const SweepSpec& spec, int workers) {
  if (spec.grid.empty()) throw std::invalid_argument("empty grid");
  for (size_t i = 1; i < spec.grid.size(); ++i) {
    if (!(spec.grid[i - 1] < spec.grid[i])) {
      throw std::invalid_argument("grid must be strictly increasing");
    }
  }
  if (spec.trials < 1) throw std::invalid_argument("trials must be positive");
  if (spec.n < 1) throw std::invalid_argument("n must be positive");

  const std::size_t total = spec.grid.size() * std::size_t(spec.trials);
  auto derive = [&](const char* purpose, std::size_t i) {
    return Rng::derive_stream(spec.seed, purpose, i);
  };

  switch (spec.kind) {
    case SweepKind::Hamiltonicity: {
      check_probability_grid(spec);
      auto fn = [&, spec](std::size_t i) {
        TrialOut out;
        const double p = spec.grid[i / size_t(spec.trials)];
        try {
          Graph g = gen_gnp(spec.n, p, derive("ham-gen", i));
          out.stat = g.edge_count();
          out.stat_valid = true;
          if (spec.n <= kExactCap) {
            out.success = brute_hamilton(g).has_value();
          } else {
            out.success = posa_solve(g, {}, std::nullopt, RotationParams{},
                                     derive("ham-solve", i))
                              .cycle.has_value();
          }
        } catch (const std::exception&) {
          out.error = true;
        }
        return out;
      };
      return reduce_rows(spec, run_trials(total, workers, fn));
    }

    case SweepKind::EdgePattern: {
      check_probability_grid(spec);
      if (spec.n > kExactCap) {
        throw std::invalid_argument("edge-pattern sweeps are exact; n > 12");
      }
      const int k = int(param_or(spec, "k", 2));
      const double beta = param_or(spec, "beta", 1.0);
      if (k < 1 || beta <= 0.0) {
        throw std::invalid_argument("need k >= 1 and beta > 0");
      }
      const ColorPattern pat = fixed_edge_pattern(spec, k);
      const std::vector<double> alpha(size_t(k), 1.0 / k);
      auto fn = [&, spec, pat, alpha, beta](std::size_t i) {
        TrialOut out;
        const double p = spec.grid[i / size_t(spec.trials)];
        try {
          Graph g =
              gen_gnp(spec.n, std::min(1.0, beta * p), derive("pat-gen", i));
          out.stat = g.edge_count();
          out.stat_valid = true;
          EdgeColoring ec = color_edges(g, alpha, derive("pat-color", i));
          PatternProblem prob = make_pattern_problem(
              std::move(g), std::move(ec), std::nullopt, pat, std::nullopt);
          out.success = find_patterned(prob, SearchMode::Exact,
                                       derive("pat-search", i))
                            .cycle.has_value();
        } catch (const std::exception&) {
          out.error = true;
        }
        return out;
      };
      return reduce_rows(spec, run_trials(total, workers, fn));
    }

    case SweepKind::VertexPattern: {
      check_probability_grid(spec);
      if (spec.n > kExactCap) {
        throw std::invalid_argument("vertex-pattern sweeps are exact; n > 12");
      }
      const int k = int(param_or(spec, "k", 2));
      if (k < 1 || k > spec.n) {
        throw std::invalid_argument("need 1 <= k <= n");
      }
      std::vector<int> sizes(size_t(k));
      for (int j = 0; j < k; ++j) sizes[j] = spec.n / k + (j < spec.n % k);
      const VertexColoring vc = color_vertices_block(spec.n, sizes);
      auto fn = [&, spec, vc](std::size_t i) {
        TrialOut out;
        const double p = spec.grid[i / size_t(spec.trials)];
        try {
          std::vector<int> seq;
          for (int v = 1; v <= spec.n; ++v) seq.push_back(vc.color_of(v));
          Rng prng(spec.seed, "vpat-pattern", i);
          prng.shuffle(seq);
          ColorPattern pat(std::move(seq));
          Graph g = gen_gnp(spec.n, p, derive("vpat-gen", i));
          out.stat = g.edge_count();
          out.stat_valid = true;
          PatternProblem prob = make_pattern_problem(
              std::move(g), std::nullopt, vc, std::nullopt, std::move(pat));
          out.success = find_patterned(prob, SearchMode::Exact,
                                       derive("vpat-search", i))
                            .cycle.has_value();
        } catch (const std::exception&) {
          out.error = true;
        }
        return out;
      };
      return reduce_rows(spec, run_trials(total, workers, fn));
    }

    case SweepKind::Ordered: {
      check_probability_grid(spec);
      const int s0 = int(param_or(spec, "s0", 3));
      if (s0 < 1 || s0 > spec.n) {
        throw std::invalid_argument("need 1 <= s0 <= n");
      }
      OrderedParams op;
      op.omega = param_or(spec, "omega", op.omega);
      auto fn = [&, spec, op, s0](std::size_t i) {
        TrialOut out;
        const double p = spec.grid[i / size_t(spec.trials)];
        try {
          Graph g = gen_gnp(spec.n, p, derive("ordered-gen", i));
          std::vector<int> order(size_t(spec.n));
          for (int v = 1; v <= spec.n; ++v) order[v - 1] = v;
          Rng srng(spec.seed, "ordered-s0", i);
          srng.shuffle(order);
          order.resize(size_t(s0));
          OrderedResult r =
              solve_ordered(g, order, op, derive("ordered-solve", i));
          out.success = r.cycle.has_value();
          if (out.success) {
            out.stat = r.report.pstar_len;
            out.stat_valid = true;
          }
        } catch (const std::exception&) {
          out.error = true;
        }
        return out;
      };
      return reduce_rows(spec, run_trials(total, workers, fn));
    }

    case SweepKind::GreedyInversion: {
      const double p = param_or(spec, "p", 0.1);
      const double frac = param_or(spec, "frac", 1.0 / 3.0);
      GreedyParams gp;
      gp.u_target = int(param_or(spec, "u_target", -1));
      for (double m : spec.grid) {
        if (m < 0) throw std::invalid_argument("inversion budget negative");
      }
      auto fn = [&, spec, p, frac, gp](std::size_t i) {
        TrialOut out;
        const double point = spec.grid[i / size_t(spec.trials)];
        try {
          const auto [p1, p2] = split_probability(p, frac);
          LayeredGraph lg =
              gen_layered(spec.n, {p1, p2}, derive("greedy-gen", i));
          GreedyResult r =
              greedy_low_inversion(lg, gp, derive("greedy-solve", i));
          if (r.cycle) {
            const long long iota = inversions(*r.cycle);
            out.stat = double(iota);
            out.stat_valid = true;
            out.success = double(iota) <= point;
          }
        } catch (const std::exception&) {
          out.error = true;
        }
        return out;
      };
      return reduce_rows(spec, run_trials(total, workers, fn));
    }

    case SweepKind::Coupling: {
      if (spec.n > 10) {
        throw std::invalid_argument("coupling sweeps are exact; n > 10");
      }
      const double p = param_or(spec, "p", 0.3);
      const double beta = param_or(spec, "beta", 2.0);
      const int k = int(param_or(spec, "k", 2));
      if (k < 1) throw std::invalid_argument("need k >= 1");
      const ColorPattern pat = fixed_edge_pattern(spec, k);
      const std::vector<double> alpha(size_t(k), 1.0 / k);
      std::vector<long long> t_grid;
      for (double t : spec.grid) t_grid.push_back(std::llround(t));
      return coupling_monotonicity(spec.n, p, beta, alpha, pat, t_grid,
                                   spec.trials, spec.seed);
    }

    case SweepKind::FirstMoment: {
      check_probability_grid(spec);
      const long long M = std::llround(param_or(spec, "M", double(spec.n)));
      SweepResult res;
      for (double p : spec.grid) {
        SweepRow r;
        r.point = p;
        r.trials = spec.trials;
        r.stat = first_moment_bound(spec.n, M, p);
        res.rows.push_back(r);
      }
      return res;
    }
  }
  throw std::logic_error("unhandled experiment kind");
}

void emit_csv(const SweepResult& res, std::ostream& out) {
  out << "point,trials,successes,p_hat,stderr,stat,errors\n";
  char buf[128];
  for (const SweepRow& r : res.rows) {
    std::snprintf(buf, sizeof buf, "%.6g,%lld,%lld,%.6g,%.6g,%.6g,%lld",
                  r.point, r.trials, r.successes, r.p_hat, r.stderr_value,
                  r.stat, r.errors);
    out << buf << '\n';
  }
}

void emit_csv_file(const SweepResult& res, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  emit_csv(res, f);
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace hamlab
