#include "edgesched/gen.hpp"

#include <algorithm>
#include <cmath>

namespace edgesched {

namespace {

// measured single-image latencies per input size (seconds): device model 1,
// device model 2, server compute
struct TierRow {
  double ed1;
  double ed2;
  double es_compute;
  double comm_scale;
};

constexpr TierRow kTiers[3] = {
    {0.010, 0.040, 0.28, 1.0},  // small inputs
    {0.011, 0.040, 0.32, 2.0},  // medium
    {0.011, 0.043, 0.38, 4.0},  // large
};

constexpr double kTable2Acc[3] = {0.395, 0.559, 0.771};

void check_common(const GenParams& p) {
  if (p.n < 1 || p.deadline <= 0.0 || !std::isfinite(p.deadline)) {
    throw ValidationError(ValidationIssue::InvalidParams,
                          "InvalidParams: need n >= 1 and a positive deadline");
  }
}

void check_random(const GenParams& p) {
  check_common(p);
  if (p.m < 1) {
    throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: need m >= 1");
  }
  if (!(p.base_low > 0.0) || !(p.width > 0.0) || p.width >= p.base_low) {
    // tiers must stay disjoint so columns increase strictly down the models
    throw ValidationError(ValidationIssue::InvalidParams,
                          "InvalidParams: need 0 < width < base_low for disjoint time tiers");
  }
  if (!(p.acc_low >= 0.0) || p.acc_high < p.acc_low) {
    throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: bad accuracy range");
  }
}

std::vector<double> sorted_accuracies(const GenParams& p, SplitMix64& rng) {
  std::vector<double> acc(static_cast<size_t>(p.m) + 1);
  for (auto& a : acc) a = rng.uniform(p.acc_low, p.acc_high);
  std::sort(acc.begin(), acc.end());
  return acc;
}

Instance gen_table2(const GenParams& p) {
  check_common(p);
  if (p.p_small < 0.0 || p.p_medium < 0.0 || p.p_small + p.p_medium > 1.0) {
    throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: bad size mix");
  }
  SplitMix64 rng(p.seed);
  Instance inst;
  inst.m = 2;  // this profile models the fixed two-device testbed
  inst.n = p.n;
  inst.deadline = p.deadline;
  inst.accuracies.assign(kTable2Acc, kTable2Acc + 3);
  inst.times.assign(3, std::vector<double>(static_cast<size_t>(p.n)));
  inst.comm_times.emplace(static_cast<size_t>(p.n));
  // per job: one draw for the size tier, one for the upload time
  for (int j = 0; j < p.n; ++j) {
    const double u = rng.next_double();
    const int tier = u < p.p_small ? 0 : (u < p.p_small + p.p_medium ? 1 : 2);
    const TierRow& row = kTiers[tier];
    const double comm = rng.uniform(0.05, 0.15) * row.comm_scale;
    inst.times[0][static_cast<size_t>(j)] = row.ed1;
    inst.times[1][static_cast<size_t>(j)] = row.ed2;
    inst.times[2][static_cast<size_t>(j)] = row.es_compute + comm;
    (*inst.comm_times)[static_cast<size_t>(j)] = comm;
  }
  return validate(std::move(inst));
}

Instance gen_monotone(const GenParams& p) {
  check_random(p);
  SplitMix64 rng(p.seed);
  Instance inst;
  inst.m = p.m;
  inst.n = p.n;
  inst.deadline = p.deadline;
  inst.accuracies = sorted_accuracies(p, rng);
  inst.times.assign(static_cast<size_t>(p.m) + 1, std::vector<double>(static_cast<size_t>(p.n)));
  // job-major draws: extending n with the same seed keeps earlier jobs intact
  for (int j = 0; j < p.n; ++j) {
    for (int i = 0; i <= p.m; ++i) {
      const double lo = p.base_low * static_cast<double>(i + 1);
      inst.times[static_cast<size_t>(i)][static_cast<size_t>(j)] = rng.uniform(lo, lo + p.width);
    }
  }
  return validate(std::move(inst));
}

Instance gen_identical(const GenParams& p) {
  check_random(p);
  SplitMix64 rng(p.seed);
  Instance inst;
  inst.m = p.m;
  inst.n = p.n;
  inst.deadline = p.deadline;
  inst.accuracies = sorted_accuracies(p, rng);
  inst.times.assign(static_cast<size_t>(p.m) + 1, std::vector<double>(static_cast<size_t>(p.n)));
  // one column, snapped to the millisecond grid so unit quantization is
  // exact, then copied to every job
  for (int i = 0; i <= p.m; ++i) {
    const double lo = p.base_low * static_cast<double>(i + 1);
    const double t = std::round(rng.uniform(lo, lo + p.width) * 1000.0) / 1000.0;
    for (int j = 0; j < p.n; ++j) inst.times[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
  }
  return validate(std::move(inst));
}

}  // namespace

Profile profile_from_name(const std::string& name) {
  if (name == "table2") return Profile::Table2;
  if (name == "monotone_random") return Profile::MonotoneRandom;
  if (name == "identical_random") return Profile::IdenticalRandom;
  throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: unknown profile '" + name + "'");
}

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::Table2:
      return "table2";
    case Profile::MonotoneRandom:
      return "monotone_random";
    case Profile::IdenticalRandom:
      return "identical_random";
  }
  return "?";
}

Instance generate(const GenParams& params) {
  switch (params.profile) {
    case Profile::Table2:
      return gen_table2(params);
    case Profile::MonotoneRandom:
      return gen_monotone(params);
    case Profile::IdenticalRandom:
      return gen_identical(params);
  }
  throw ValidationError(ValidationIssue::InvalidParams, "InvalidParams: unknown profile");
}

}  // namespace edgesched
