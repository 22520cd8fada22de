#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgesched/amdp.hpp"
#include "edgesched/amr2.hpp"
#include "edgesched/baseline.hpp"
#include "edgesched/gen.hpp"
#include "edgesched/io.hpp"
#include "edgesched/oracle.hpp"
#include "edgesched/verify.hpp"

namespace {

using namespace edgesched;

// exit codes are part of the contract: 0 ok, 1 infeasible, 2 bad input or
// I/O, 3 self-check failure; 4 is reserved for internal defects
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitInternal = 4;

double delta_default_from_env() {
  if (const char* env = std::getenv("EDGESCHED_DELTA")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ValidationError(ValidationIssue::InvalidParams,
                            "InvalidParams: EDGESCHED_DELTA must be a positive number");
    }
    return v;
  }
  return kDefaultDelta;
}

GenParams parse_template(const std::string& text) {
  GenParams p;
  p.profile = Profile::MonotoneRandom;
  std::string key, value;
  bool in_key = true;
  bool saw_profile = false, saw_n = false, saw_t = false;
  auto flush = [&]() {
    if (key.empty()) {
      throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: empty template entry");
    }
    if (key == "profile") {
      p.profile = profile_from_name(value);
      saw_profile = true;
    } else if (key == "n") {
      p.n = std::atoi(value.c_str());
      saw_n = true;
    } else if (key == "m") {
      p.m = std::atoi(value.c_str());
    } else if (key == "T") {
      p.deadline = std::atof(value.c_str());
      saw_t = true;
    } else if (key == "seed") {
      p.seed = std::strtoull(value.c_str(), nullptr, 10);
    } else {
      throw ValidationError(ValidationIssue::InvalidParams,
                            "InvalidParams: unknown template key '" + key + "'");
    }
    key.clear();
    value.clear();
    in_key = true;
  };
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else if (ch == '=' && in_key) {
      in_key = false;
    } else {
      (in_key ? key : value) += ch;
    }
  }
  flush();
  if (!saw_profile || !saw_n || !saw_t) {
    throw ValidationError(ValidationIssue::InvalidParams,
                          "InvalidParams: template needs at least profile=..., n=..., T=...");
  }
  if (p.m == 0) p.m = 2;
  return p;
}

SolveReport dispatch(const std::string& algo, const Instance& inst, double delta) {
  if (algo == "amr2") return run_amr2(inst);
  if (algo == "amdp") return run_amdp(inst, delta);
  if (algo == "greedy") return greedy_rra(inst);
  if (algo == "exact") return exact_ilp(inst);
  throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: unknown algorithm '" + algo + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"accuracy-maximizing offload scheduling under a shared time budget"};
  app.require_subcommand(1);

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  std::string gen_profile;
  int gen_n = 0, gen_m = 2;
  double gen_t = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen_cmd->add_option("--profile", gen_profile, "table2 | monotone_random | identical_random")->required();
  gen_cmd->add_option("--n", gen_n, "job count")->required();
  gen_cmd->add_option("--m", gen_m, "device model count (table2 always uses 2)");
  gen_cmd->add_option("--T", gen_t, "budget in seconds")->required();
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--out", gen_out, "output instance path")->required();

  auto* solve_cmd = app.add_subcommand("solve", "run one algorithm on an instance file");
  std::string solve_instance, solve_algo, solve_out;
  double solve_delta = 0.0;
  solve_cmd->add_option("--instance", solve_instance, "instance path")->required();
  solve_cmd->add_option("--algo", solve_algo, "amr2 | amdp | greedy | exact")->required();
  solve_cmd->add_option("--delta", solve_delta, "quantization step in seconds (amdp)");
  solve_cmd->add_option("--out", solve_out, "append the CSV row here instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "generate and solve across a parameter range");
  std::string sweep_template, sweep_vary, sweep_algos, sweep_out;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0, sweep_seeds = 1;
  double sweep_delta = 0.0;
  sweep_cmd->add_option("--instance-template", sweep_template,
                        "comma key=value list: profile=...,n=...,m=...,T=...,seed=...")->required();
  sweep_cmd->add_option("--vary", sweep_vary, "T | n")->required();
  sweep_cmd->add_option("--from", sweep_from, "first value")->required();
  sweep_cmd->add_option("--to", sweep_to, "last value")->required();
  sweep_cmd->add_option("--steps", sweep_steps, "number of grid points")->required();
  sweep_cmd->add_option("--algos", sweep_algos, "comma list of algorithms")->required();
  sweep_cmd->add_option("--seeds", sweep_seeds, "seeds per grid point (base seed increments)");
  sweep_cmd->add_option("--delta", sweep_delta, "quantization step in seconds (amdp)");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the seeded invariant suites");
  int verify_seeds = 100;
  verify_cmd->add_option("--seeds", verify_seeds, "instances per suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  if (gen_cmd->parsed()) {
    GenParams p;
    p.profile = profile_from_name(gen_profile);
    p.n = gen_n;
    p.m = gen_m;
    p.deadline = gen_t;
    p.seed = gen_seed;
    write_instance(generate(p), gen_out);
    return kExitOk;
  }

  if (solve_cmd->parsed()) {
    const double delta = solve_delta > 0.0 ? solve_delta : delta_default_from_env();
    const Instance inst = read_instance(solve_instance);
    const SolveReport rep = dispatch(solve_algo, inst, delta);
    const RunRecord rec = make_record(inst, rep);
    if (solve_out.empty()) {
      std::printf("%s\n%s\n", csv_header().c_str(), to_csv_row(rec).c_str());
    } else {
      append_csv(solve_out, {rec});
    }
    return kExitOk;
  }

  if (sweep_cmd->parsed()) {
    if (sweep_steps < 1) {
      throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: steps must be >= 1");
    }
    if (sweep_seeds < 1) {
      throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: seeds must be >= 1");
    }
    if (sweep_vary != "T" && sweep_vary != "n") {
      throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: --vary must be T or n");
    }
    const GenParams base = parse_template(sweep_template);
    std::vector<std::string> algos;
    {
      std::string cur;
      for (char ch : sweep_algos + ",") {
        if (ch == ',') {
          if (!cur.empty()) algos.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      if (algos.empty()) {
        throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: --algos is empty");
      }
    }
    const double delta = sweep_delta > 0.0 ? sweep_delta : delta_default_from_env();
    std::vector<RunRecord> rows;
    for (int s = 0; s < sweep_steps; ++s) {
      const double at = sweep_steps == 1
                            ? sweep_from
                            : sweep_from + (sweep_to - sweep_from) * static_cast<double>(s) /
                                               static_cast<double>(sweep_steps - 1);
      for (int rep = 0; rep < sweep_seeds; ++rep) {
        GenParams p = base;
        if (sweep_vary == "T") {
          p.deadline = at;
        } else {
          p.n = static_cast<int>(at + 0.5);
        }
        p.seed = base.seed + static_cast<std::uint64_t>(rep);
        const Instance inst = generate(p);
        for (const auto& algo : algos) {
          rows.push_back(make_record(inst, dispatch(algo, inst, delta), p.seed));
        }
      }
    }
    append_csv(sweep_out, rows);
    return kExitOk;
  }

  // verify
  if (verify_seeds < 1) {
    throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: seeds must be >= 1");
  }
  const auto results = run_verify(verify_seeds);
  int passes = 0, runs = 0;
  for (const auto& r : results) {
    std::printf("%s: %d/%d %s\n", r.name.c_str(), r.passes, r.runs, r.description.c_str());
    passes += r.passes;
    runs += r.runs;
  }
  const bool ok = passes == runs;
  std::printf("verify: %s (%d/%d)\n", ok ? "PASS" : "FAIL", passes, runs);
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InfeasibleError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitInfeasible;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitBadInput;
  } catch (const IoError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
