#include "pcdyn/campaign.hpp"

#include <chrono>
#include <cstdio>

namespace pcdyn {

const char* outcome_name(TrialRecord::Outcome o) {
    switch (o) {
        case TrialRecord::Outcome::Success: return "success";
        case TrialRecord::Outcome::Discarded: return "discarded";
        case TrialRecord::Outcome::InvariantViolation: return "invariant-violation";
    }
    return "?";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 over seed + golden-ratio stride
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ParameterPoint sample_omega(int n, std::mt19937_64& rng, Backend backend, int max_retries) {
    if (n < 2) throw_domain("sample_omega: need n >= 2");
    const long den = 1000000;
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Scalar> cuts;
        if (backend == Backend::Rational) {
            std::uniform_int_distribution<long> dist(1, den - 1);
            for (int i = 0; i < n - 1; ++i) cuts.push_back(Scalar::rational(dist(rng), den));
        } else {
            std::uniform_real_distribution<double> dist(0.0, 1.0);
            for (int i = 0; i < n - 1; ++i) cuts.push_back(Scalar::floating(dist(rng)));
        }
        std::sort(cuts.begin(), cuts.end(), [](const Scalar& a, const Scalar& b) { return a.cmp(b) < 0; });
        bool distinct = true;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i] == cuts[i + 1]) distinct = false;
        if (!distinct) continue;
        return ParameterPoint::validate(std::move(cuts));
    }
    throw_numeric("sample_omega: retry cap exceeded while resampling collisions");
}

TrialRecord run_trial(const BranchSystem& sys, const ExpandingMap& g, const ParameterPoint& params,
                      const BoundaryAssignment& assignment, const CampaignConfig& cfg, std::uint64_t trial_seed) {
    auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.cuts = params.cuts;
    rec.assignment = assignment;
    auto finish = [&](TrialRecord::Outcome outcome, const std::string& reason) -> TrialRecord& {
        rec.outcome = outcome;
        rec.reason = reason;
        rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rec;
    };
    try {
        PiecewiseContraction f = PiecewiseContraction::create(sys, ParameterPoint{params.cuts}, assignment);
        if (auto conn = detect_g_connection(f, g, cfg.kmax)) {
            return finish(TrialRecord::Outcome::Discarded,
                          "g-connection(i=" + std::to_string(conn->cut_index) + ",j=" +
                              std::to_string(conn->endpoint_index) + ",k=" + std::to_string(conn->steps) + ")");
        }
        int budget = cfg.gap_budget > 0 ? cfg.gap_budget : default_gap_budget(f, g);
        std::vector<GapHit> hits;
        for (int i = 1; i <= f.n() - 1; ++i) {
            GapHit h = gap_hitting_time(f, g, i, budget);
            if (h.verdict != GapHit::Verdict::HitInterior)
                return finish(TrialRecord::Outcome::Discarded,
                              std::string(verdict_name(h.verdict)) + "(cut " + std::to_string(i) + ")");
            hits.push_back(std::move(h));
        }
        QuasiPartition qp = build_quasi_partition(f, std::move(hits));
        VerifyReport ver = verify_quasi_partition(f, qp);
        if (!ver.ok()) {
            std::string why = "verify:";
            for (const std::string& s : ver.failures) why += " " + s + ";";
            return finish(TrialRecord::Outcome::InvariantViolation, why);
        }
        AttractorOptions aopts;
        aopts.basin_samples = cfg.basin_samples;
        aopts.basin_iter_cap = cfg.basin_iter_cap;
        aopts.basin_tol = cfg.basin_tol;
        aopts.rng_seed = derive_seed(trial_seed, 1);
        AttractorReport rep = attractor_set(f, qp, aopts);
        if (rep.unattributed > 0)
            return finish(TrialRecord::Outcome::InvariantViolation,
                          std::to_string(rep.unattributed) + " basin samples unattributed");
        if (cfg.oracle_starts > 0) {
            std::mt19937_64 orng(derive_seed(trial_seed, 2));
            OracleOptions oopts;
            oopts.tol = cfg.oracle_tol;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.9g", 1e-10);
            Scalar match_tol = Scalar::parse(buf, f.backend());
            for (int s = 0; s < cfg.oracle_starts; ++s) {
                Scalar x0 = f.backend() == Backend::Rational
                                ? Scalar::rational(std::uniform_int_distribution<long>(0, 999999)(orng), 1000000)
                                : Scalar::floating(std::uniform_real_distribution<double>(0.0, 1.0)(orng));
                OracleOutcome out = direct_attractor_oracle(f, x0, oopts);
                if (out.kind != OracleOutcome::Kind::Orbit)
                    return finish(TrialRecord::Outcome::InvariantViolation,
                                  "oracle-disagreement: no orbit from x0=" + x0.str());
                int matched = -1;
                for (size_t o = 0; o < rep.orbits.size() && matched < 0; ++o) {
                    const PeriodicOrbit& orb = rep.orbits[o];
                    if (orb.period != out.period) continue;
                    for (size_t phase = 0; phase < orb.points.size() && matched < 0; ++phase) {
                        bool all = true;
                        for (size_t j = 0; j < orb.points.size() && all; ++j)
                            if ((orb.points[(phase + j) % orb.points.size()] - out.points[j]).abs() > match_tol)
                                all = false;
                        if (all) matched = static_cast<int>(o);
                    }
                }
                if (matched < 0)
                    return finish(TrialRecord::Outcome::InvariantViolation,
                                  "oracle-disagreement: oracle orbit not among attractors (x0=" + x0.str() + ")");
                BasinSample basin = attribute_point(f, rep.orbits, x0, cfg.basin_tol, cfg.basin_iter_cap);
                if (basin.orbit != matched)
                    return finish(TrialRecord::Outcome::InvariantViolation,
                                  "oracle-disagreement: basin attribution mismatch (x0=" + x0.str() + ")");
            }
        }
        rec.r = rep.count();
        for (const PeriodicOrbit& o : rep.orbits) rec.periods.push_back(o.period);
        rec.q = qp.max_hitting_time;
        rec.m = qp.m();
        return finish(TrialRecord::Outcome::Success, "");
    } catch (const Error& e) {
        TrialRecord::Outcome o =
            e.code() == Errc::Invariant ? TrialRecord::Outcome::InvariantViolation : TrialRecord::Outcome::Discarded;
        return finish(o, std::string(e.what()));
    }
}

CampaignSummary run_campaign(const CampaignConfig& cfg, std::ostream* records, std::ostream* scatter,
                             std::vector<TrialRecord>* keep) {
    if (cfg.trials < 1) throw_validation("campaign: trials must be >= 1");
    BranchSystem sys = BranchSystem::validate(cfg.system.branches);
    ExpandingMap g = ExpandingMap::build(sys);
    int n = sys.n();
    if (n < 2) throw_validation("campaign: need n >= 2 branches");

    std::vector<BoundaryAssignment> assignments;
    switch (cfg.policy) {
        case CampaignConfig::Policy::AllLeft:
            assignments.push_back(BoundaryAssignment::all_left(n - 1));
            break;
        case CampaignConfig::Policy::AllRight:
            assignments.push_back(BoundaryAssignment::all_right(n - 1));
            break;
        case CampaignConfig::Policy::EnumerateAll: {
            for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
                BoundaryAssignment a;
                for (int i = 0; i < n - 1; ++i)
                    a.sides.push_back((mask >> i) & 1 ? CutSide::AttachLeft : CutSide::AttachRight);
                assignments.push_back(std::move(a));
            }
            break;
        }
    }

    CampaignSummary sum;
    sum.parameter_points = cfg.trials;
    if (scatter) {
        *scatter << "trial";
        for (int i = 1; i < n; ++i) *scatter << ",x" << i;
        *scatter << ",assignment,r\n";
    }
    for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t tseed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(tseed);
        ParameterPoint pp = sample_omega(n, rng, sys.backend());
        for (const BoundaryAssignment& asg : assignments) {
            TrialRecord rec = run_trial(sys, g, pp, asg, cfg, tseed);
            rec.trial = t;
            ++sum.records;
            sum.total_ms += rec.ms;
            switch (rec.outcome) {
                case TrialRecord::Outcome::Success:
                    ++sum.successes;
                    ++sum.r_histogram[rec.r];
                    for (int p : rec.periods) ++sum.period_histogram[p];
                    ++sum.q_histogram[rec.q];
                    ++sum.m_histogram[rec.m];
                    if (scatter) {
                        *scatter << rec.trial;
                        for (const Scalar& c : rec.cuts) *scatter << "," << c.str();
                        *scatter << "," << rec.assignment.str() << "," << rec.r << "\n";
                    }
                    break;
                case TrialRecord::Outcome::Discarded:
                    ++sum.discards;
                    ++sum.discard_reasons[rec.reason.substr(0, rec.reason.find('('))];
                    break;
                case TrialRecord::Outcome::InvariantViolation:
                    ++sum.violations;
                    break;
            }
            if (records) *records << trial_record_json(rec).dump() << "\n";
            if (keep) keep->push_back(std::move(rec));
        }
    }
    sum.success_rate = sum.records > 0 ? static_cast<double>(sum.successes) / sum.records : 0.0;
    return sum;
}

Json trial_record_json(const TrialRecord& rec) {
    Json j;
    j["schema"] = "pcdyn.trial.v1";
    j["trial"] = rec.trial;
    Json cuts = Json::array();
    for (const Scalar& c : rec.cuts) cuts.push_back(scalar_to_json(c));
    j["cuts"] = std::move(cuts);
    j["assignment"] = rec.assignment.str();
    j["outcome"] = outcome_name(rec.outcome);
    if (!rec.reason.empty()) j["reason"] = rec.reason;
    if (rec.outcome == TrialRecord::Outcome::Success) {
        j["r"] = rec.r;
        j["periods"] = rec.periods;
        j["q"] = rec.q;
        j["m"] = rec.m;
    }
    j["ms"] = rec.ms;
    return j;
}

Json campaign_summary_json(const CampaignSummary& s) {
    Json j;
    j["schema"] = "pcdyn.summary.v1";
    j["parameter_points"] = s.parameter_points;
    j["records"] = s.records;
    j["successes"] = s.successes;
    j["discards"] = s.discards;
    j["violations"] = s.violations;
    j["success_rate"] = s.success_rate;
    Json reasons;
    for (const auto& [k, v] : s.discard_reasons) reasons[k] = v;
    j["discard_reasons"] = std::move(reasons);
    auto hist = [](const std::map<int, int>& h) {
        Json out;
        for (const auto& [k, v] : h) out[std::to_string(k)] = v;
        return out;
    };
    j["r_histogram"] = hist(s.r_histogram);
    j["period_histogram"] = hist(s.period_histogram);
    j["q_histogram"] = hist(s.q_histogram);
    j["m_histogram"] = hist(s.m_histogram);
    j["total_ms"] = s.total_ms;
    return j;
}

CampaignConfig campaign_config_from_json(const Json& j) {
    CampaignConfig cfg;
    if (j.contains("preset"))
        cfg.system = preset_spec(j.at("preset").get<std::string>());
    else if (j.contains("system"))
        cfg.system = map_spec_from_json(j.at("system"));
    else
        throw_parse("campaign config needs 'preset' or 'system'");
    cfg.trials = j.value("trials", 100);
    cfg.seed = j.value("seed", 0ULL);
    cfg.kmax = j.value("kmax", 200L);
    cfg.gap_budget = j.value("gap_budget", 0);
    cfg.basin_samples = j.value("basin_samples", 100);
    cfg.basin_iter_cap = j.value("basin_iter_cap", 100000L);
    cfg.basin_tol = j.value("basin_tol", 1e-8);
    cfg.oracle_starts = j.value("oracle_starts", 0);
    cfg.oracle_tol = j.value("oracle_tol", 1e-9);
    std::string policy = j.value("assignment_policy", "all-right");
    if (policy == "all-right")
        cfg.policy = CampaignConfig::Policy::AllRight;
    else if (policy == "all-left")
        cfg.policy = CampaignConfig::Policy::AllLeft;
    else if (policy == "enumerate-all")
        cfg.policy = CampaignConfig::Policy::EnumerateAll;
    else
        throw_parse("bad assignment_policy '" + policy + "'");
    cfg.records_path = j.value("records", "");
    cfg.scatter_path = j.value("scatter", "");
    if (cfg.trials < 1 || cfg.kmax < 1 || cfg.basin_iter_cap < 1 || cfg.basin_samples < 0)
        throw_validation("campaign config: trials, kmax, basin_iter_cap must be positive");
    return cfg;
}

}  // namespace pcdyn
