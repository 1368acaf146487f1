#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <random>

#include "pcdyn/presets.hpp"

namespace pcdyn {

// Parameter-sweep campaign over the simplex of cuts: one fixed branch
// system, sampled parameter points, the full pipeline per trial.
struct CampaignConfig {
    MapSpec system;  // cuts ignored; backend comes from here
    int trials = 100;            // parameter points
    std::uint64_t seed = 0;
    long kmax = 200;             // g-connection scan horizon
    int gap_budget = 0;          // 0 = the default budget formula
    int basin_samples = 100;
    long basin_iter_cap = 100000;
    double basin_tol = 1e-8;
    int oracle_starts = 0;       // cross-check points per trial (0 = skip)
    double oracle_tol = 1e-9;
    enum class Policy { AllLeft, AllRight, EnumerateAll } policy = Policy::AllRight;
    std::string records_path;    // JSONL stream, optional
    std::string scatter_path;    // CSV of (cuts..., r) per success, optional
};

struct TrialRecord {
    int trial = 0;
    std::vector<Scalar> cuts;
    BoundaryAssignment assignment;
    enum class Outcome { Success, Discarded, InvariantViolation } outcome = Outcome::Discarded;
    std::string reason;          // discard reason or violation details
    int r = 0;
    std::vector<int> periods;
    int q = 0;
    int m = 0;
    double ms = 0.0;             // timing; excluded from determinism guarantees
};

const char* outcome_name(TrialRecord::Outcome o);

struct CampaignSummary {
    int parameter_points = 0;
    int records = 0;
    int successes = 0;
    int discards = 0;
    int violations = 0;
    std::map<std::string, int> discard_reasons;
    std::map<int, int> r_histogram;
    std::map<int, int> period_histogram;
    std::map<int, int> q_histogram;
    std::map<int, int> m_histogram;
    double success_rate = 0.0;
    double total_ms = 0.0;
};

// n-1 sorted uniform cuts; rationalized to denominator 10^6 on the
// rational backend; collisions resampled
ParameterPoint sample_omega(int n, std::mt19937_64& rng, Backend backend, int max_retries = 100);

TrialRecord run_trial(const BranchSystem& sys, const ExpandingMap& g, const ParameterPoint& params,
                      const BoundaryAssignment& assignment, const CampaignConfig& cfg, std::uint64_t trial_seed);

CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream* records = nullptr,
                             std::ostream* scatter = nullptr, std::vector<TrialRecord>* keep = nullptr);

Json trial_record_json(const TrialRecord& rec);
Json campaign_summary_json(const CampaignSummary& s);
CampaignConfig campaign_config_from_json(const Json& j);

// per-trial RNG stream derivation
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace pcdyn
