#include "pcdyn.h"

#include <cstring>
#include <fstream>
#include <optional>

#include "pcdyn/campaign.hpp"

using namespace pcdyn;

struct pcdyn_map {
    PiecewiseContraction f;
    std::optional<ExpandingMap> g;

    const ExpandingMap& inverse() {
        if (!g) g = ExpandingMap::build(f.system());
        return *g;
    }
};

namespace {

thread_local std::string t_last_error;
thread_local int t_last_status = PCDYN_OK;

int set_error(int code, const std::string& msg) {
    t_last_status = code;
    t_last_error = msg;
    return code;
}

int clear_error() {
    t_last_status = PCDYN_OK;
    t_last_error.clear();
    return PCDYN_OK;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return clear_error();
    } catch (const Error& e) {
        return set_error(static_cast<int>(e.code()), e.what());
    } catch (const std::exception& e) {
        return set_error(PCDYN_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(PCDYN_ERR_INTERNAL, "unknown error");
    }
}

int require(const void* p, const char* what) {
    if (p) return PCDYN_OK;
    return set_error(PCDYN_ERR_DOMAIN, std::string("null ") + what);
}

Scalar in_scalar(const pcdyn_map* map, const char* x) {
    if (!x) throw_domain("null scalar argument");
    return Scalar::parse(x, map->f.backend());
}

}  // namespace

extern "C" {

const char* pcdyn_version(void) { return "0.1.0"; }

const char* pcdyn_last_error(void) { return t_last_error.c_str(); }

int pcdyn_last_status(void) { return t_last_status; }

void pcdyn_string_free(char* s) { std::free(s); }

int pcdyn_map_from_json(const char* json, pcdyn_map** out) {
    if (require(json, "json") || require(out, "out")) return t_last_status;
    return guarded([&] {
        MapSpec spec = map_spec_from_string(json);
        *out = new pcdyn_map{build_map(spec), std::nullopt};
    });
}

int pcdyn_map_from_file(const char* path, pcdyn_map** out) {
    if (require(path, "path") || require(out, "out")) return t_last_status;
    return guarded([&] {
        MapSpec spec = map_spec_from_file(path);
        *out = new pcdyn_map{build_map(spec), std::nullopt};
    });
}

int pcdyn_map_from_preset(const char* name, const char* eps, pcdyn_map** out) {
    if (require(name, "name") || require(out, "out")) return t_last_status;
    return guarded([&] {
        std::optional<std::string> e;
        if (eps) e = eps;
        MapSpec spec = preset_spec(name, e);
        *out = new pcdyn_map{build_map(spec), std::nullopt};
    });
}

void pcdyn_map_free(pcdyn_map* map) { delete map; }

int pcdyn_validate_system(const char* json, char** report_json) {
    if (require(json, "json") || require(report_json, "report_json")) return t_last_status;
    return guarded([&] {
        MapSpec spec = map_spec_from_string(json);
        Json rep;
        if (spec.general_mode) {
            // general mode validates at map level
            PiecewiseContraction f = build_map(spec);
            rep["general_mode"] = true;
            rep["n"] = f.n();
            rep["backend"] = backend_name(f.backend());
            rep["kappa"] = scalar_to_json(f.kappa());
            rep["image"] = interval_set_to_json(f.image_set());
            rep["gaps"] = interval_set_to_json(f.gap_set());
        } else {
            BranchSystem sys = build_system(spec);
            rep = system_report_json(sys);
            rep["general_mode"] = false;
        }
        *report_json = dup_string(rep.dump(2));
    });
}

int pcdyn_map_n(const pcdyn_map* map, int* n) {
    if (require(map, "map") || require(n, "n")) return t_last_status;
    *n = map->f.n();
    return clear_error();
}

int pcdyn_map_describe(const pcdyn_map* map, char** spec_json) {
    if (require(map, "map") || require(spec_json, "spec_json")) return t_last_status;
    return guarded([&] {
        MapSpec spec;
        spec.backend = map->f.backend();
        spec.general_mode = map->f.general_mode();
        spec.branches = map->f.branches();
        spec.cuts = map->f.cuts();
        spec.has_cuts = true;
        spec.assignment = map->f.assignment();
        *spec_json = dup_string(map_spec_to_json(spec).dump(2));
    });
}

int pcdyn_map_eval(const pcdyn_map* map, const char* x, char** y) {
    if (require(map, "map") || require(y, "y")) return t_last_status;
    return guarded([&] { *y = dup_string(map->f.eval(in_scalar(map, x)).str()); });
}

int pcdyn_map_branch(const pcdyn_map* map, const char* x, int* digit) {
    if (require(map, "map") || require(digit, "digit")) return t_last_status;
    return guarded([&] { *digit = map->f.branch_at(in_scalar(map, x)); });
}

int pcdyn_g_eval(pcdyn_map* map, const char* x, char** y) {
    if (require(map, "map") || require(y, "y")) return t_last_status;
    return guarded([&] { *y = dup_string(map->inverse().eval(in_scalar(map, x)).str()); });
}

int pcdyn_map_image_json(const pcdyn_map* map, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        Json j;
        j["image"] = interval_set_to_json(map->f.image_set());
        j["gaps"] = interval_set_to_json(map->f.gap_set());
        *json = dup_string(j.dump(2));
    });
}

int pcdyn_g_info_json(pcdyn_map* map, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] { *json = dup_string(expanding_map_json(map->inverse()).dump(2)); });
}

int pcdyn_orbit_json(pcdyn_map* map, const char* x, long steps, int use_g, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        Scalar x0 = in_scalar(map, x);
        Json j;
        if (use_g) {
            std::vector<Scalar> pts = g_orbit(map->inverse(), x0, steps);
            j = orbit_json(pts, nullptr);
            j["map"] = "g";
        } else {
            std::vector<Scalar> pts = forward_orbit(map->f, x0, steps);
            std::vector<int> digits;
            for (size_t k = 0; k + 1 < pts.size(); ++k) digits.push_back(map->f.branch_at(pts[k]));
            j = orbit_json(pts, &digits);
            j["map"] = "f";
        }
        *json = dup_string(j.dump(2));
    });
}

int pcdyn_itinerary_json(pcdyn_map* map, const char* x, long steps, long horizon, double tol, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        Scalar x0 = in_scalar(map, x);
        ItineraryWord w = itinerary(map->f, x0, steps);
        Json j = itinerary_json(w);
        if (horizon >= 2) {
            auto ep = detect_eventual_period(map->f, x0, horizon, tol > 0 ? tol : 1e-9);
            if (ep) {
                j["classification"] = "eventually-periodic";
                j["preperiod"] = ep->preperiod;
                j["period"] = ep->period;
            } else {
                j["classification"] = "undetermined";
            }
        }
        *json = dup_string(j.dump(2));
    });
}

int pcdyn_gconnection_json(pcdyn_map* map, long kmax, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        auto conn = detect_g_connection(map->f, map->inverse(), kmax > 0 ? kmax : 200);
        *json = dup_string(g_connection_json(conn).dump(2));
    });
}

int pcdyn_qpartition_json(pcdyn_map* map, int budget, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    std::string failure;
    int code = guarded([&] {
        QuasiPartition qp = build_quasi_partition(map->f, map->inverse(), budget);
        VerifyReport rep = verify_quasi_partition(map->f, qp);
        Json j = quasi_partition_json(qp);
        j["verify"] = verify_report_json(rep);
        *json = dup_string(j.dump(2));
        if (!rep.ok()) failure = rep.failures.front();
    });
    // the report (with verify.ok == false) is still written in this case
    if (code == PCDYN_OK && !failure.empty())
        return set_error(PCDYN_ERR_INVARIANT, "quasi-partition verification failed: " + failure);
    return code;
}

int pcdyn_attractors_json(pcdyn_map* map, int basin_samples, long iter_cap, uint64_t seed, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        QuasiPartition qp = build_quasi_partition(map->f, map->inverse(), 0);
        AttractorOptions opts;
        if (basin_samples >= 0) opts.basin_samples = basin_samples;
        if (iter_cap > 0) opts.basin_iter_cap = iter_cap;
        opts.rng_seed = seed;
        AttractorReport rep = attractor_set(map->f, qp, opts);
        *json = dup_string(attractor_report_json(rep).dump(2));
    });
}

int pcdyn_oracle_json(pcdyn_map* map, const char* x, long burn_in, int probe_len, double tol, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        OracleOptions opts;
        if (burn_in > 0) opts.burn_in = burn_in;
        if (probe_len > 0) opts.probe_len = probe_len;
        if (tol > 0) opts.tol = tol;
        OracleOutcome out = direct_attractor_oracle(map->f, in_scalar(map, x), opts);
        *json = dup_string(oracle_outcome_json(out).dump(2));
    });
}

int pcdyn_ulam_json(pcdyn_map* map, int bins, int include_density, char** json) {
    if (require(map, "map") || require(json, "json")) return t_last_status;
    return guarded([&] {
        UlamModel model = ulam_model(map->inverse(), bins >= 2 ? bins : 256);
        *json = dup_string(ulam_json(model, include_density != 0).dump(2));
    });
}

int pcdyn_density_gap(pcdyn_map* map, const char* x, long steps, double* max_gap) {
    if (require(map, "map") || require(max_gap, "max_gap")) return t_last_status;
    return guarded([&] {
        double x0 = in_scalar(map, x).to_double();
        *max_gap = orbit_density_gap(map->inverse(), x0, steps);
    });
}

int pcdyn_campaign_run(const char* config_json, char** summary_json) {
    if (require(config_json, "config_json") || require(summary_json, "summary_json")) return t_last_status;
    return guarded([&] {
        Json j = Json::parse(std::string(config_json), nullptr, false);
        if (j.is_discarded()) throw_parse("invalid JSON in campaign config");
        CampaignConfig cfg = campaign_config_from_json(j);
        std::ofstream records, scatter;
        std::ostream* rp = nullptr;
        std::ostream* sp = nullptr;
        if (!cfg.records_path.empty()) {
            records.open(cfg.records_path);
            if (!records) throw_io("cannot open records path '" + cfg.records_path + "'");
            rp = &records;
        }
        if (!cfg.scatter_path.empty()) {
            scatter.open(cfg.scatter_path);
            if (!scatter) throw_io("cannot open scatter path '" + cfg.scatter_path + "'");
            sp = &scatter;
        }
        CampaignSummary sum = run_campaign(cfg, rp, sp);
        if (rp && !records.good()) throw_io("short write to '" + cfg.records_path + "'");
        *summary_json = dup_string(campaign_summary_json(sum).dump(2));
    });
}

int pcdyn_presets_json(char** json) {
    if (require(json, "json")) return t_last_status;
    return guarded([&] { *json = dup_string(presets_json().dump(2)); });
}

}  // extern "C"
