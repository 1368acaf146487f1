// Command-line front end over the pcdyn C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "pcdyn.h"

namespace {

using Json = nlohmann::ordered_json;

struct MapArgs {
    std::string preset;
    std::string system_file;
    std::string cuts;
    std::string assignment;
    std::string backend;
    std::string eps;
    bool general = false;
};

struct OutputArgs {
    std::string out;
    std::string format = "json";
};

void add_map_options(CLI::App* cmd, MapArgs& args) {
    cmd->add_option("--preset", args.preset, "preset name (see `pcdyn presets`)");
    cmd->add_option("--system", args.system_file, "system description JSON file");
    cmd->add_option("--cuts", args.cuts, "comma-separated cuts, e.g. 3/10,7/10");
    cmd->add_option("--assignment", args.assignment, "all-left | all-right | per-cut letters like LRL");
    cmd->add_option("--backend", args.backend, "rational | float (overrides the spec)");
    cmd->add_option("--eps", args.eps, "epsilon for example-4.1-f2-eps");
    cmd->add_flag("--general", args.general, "general-PC mode (disables the inverse pipeline)");
}

void add_output_options(CLI::App* cmd, OutputArgs& args) {
    cmd->add_option("--out", args.out, "write the result to this file instead of stdout");
    cmd->add_option("--format", args.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
}

[[noreturn]] void die(int code) {
    std::fprintf(stderr, "pcdyn: error %d: %s\n", pcdyn_last_status(), pcdyn_last_error());
    std::exit(code ? code : 1);
}

void check(int code) {
    if (code != PCDYN_OK) die(code);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    pcdyn_string_free(s);
    return out;
}

// assemble the map-spec JSON the C API expects from CLI arguments
std::string resolve_spec_json(const MapArgs& args) {
    Json spec;
    if (!args.preset.empty()) {
        char* buf = nullptr;
        check(pcdyn_presets_json(&buf));
        Json all = Json::parse(take_string(buf));
        for (const Json& p : all)
            if (p.at("name") == args.preset) spec = p.at("spec");
        if (spec.is_null()) {
            std::fprintf(stderr, "pcdyn: unknown preset '%s'; run `pcdyn presets`\n", args.preset.c_str());
            std::exit(PCDYN_ERR_VALIDATION);
        }
        if (args.preset == "example-4.1-f2-eps" && !args.eps.empty()) {
            pcdyn_map* m = nullptr;
            check(pcdyn_map_from_preset(args.preset.c_str(), args.eps.c_str(), &m));
            char* desc = nullptr;
            check(pcdyn_map_describe(m, &desc));
            spec = Json::parse(take_string(desc));
            pcdyn_map_free(m);
        }
    } else if (!args.system_file.empty()) {
        std::ifstream in(args.system_file);
        if (!in) {
            std::fprintf(stderr, "pcdyn: cannot open '%s'\n", args.system_file.c_str());
            std::exit(PCDYN_ERR_IO);
        }
        spec = Json::parse(std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>()),
                           nullptr, false);
        if (spec.is_discarded()) {
            std::fprintf(stderr, "pcdyn: invalid JSON in '%s'\n", args.system_file.c_str());
            std::exit(PCDYN_ERR_PARSE);
        }
    } else {
        std::fprintf(stderr, "pcdyn: pass --preset or --system\n");
        std::exit(PCDYN_ERR_VALIDATION);
    }
    if (!args.backend.empty()) spec["backend"] = args.backend;
    if (args.general) spec["general_mode"] = true;
    if (!args.cuts.empty()) {
        Json cuts = Json::array();
        std::string token;
        for (char c : args.cuts + ",") {
            if (c == ',') {
                if (!token.empty()) cuts.push_back(token);
                token.clear();
            } else {
                token += c;
            }
        }
        spec["cuts"] = cuts;
    }
    if (!args.assignment.empty()) spec["assignment"] = args.assignment;
    return spec.dump();
}

struct MapHandle {
    pcdyn_map* ptr = nullptr;
    ~MapHandle() { pcdyn_map_free(ptr); }
};

void open_map(const MapArgs& args, MapHandle& h) {
    std::string spec = resolve_spec_json(args);
    check(pcdyn_map_from_json(spec.c_str(), &h.ptr));
}

void emit(const OutputArgs& out, const std::string& text) {
    if (out.out.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out.out);
    if (!f) {
        std::fprintf(stderr, "pcdyn: cannot write '%s'\n", out.out.c_str());
        std::exit(PCDYN_ERR_IO);
    }
    f << text << "\n";
}

std::string csv_escape(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// render an array of flat objects as CSV
std::string records_to_csv(const Json& arr) {
    if (!arr.is_array() || arr.empty()) return "";
    std::string out;
    bool first = true;
    for (auto& [key, value] : arr.front().items()) {
        (void)value;
        if (!first) out += ",";
        out += key;
        first = false;
    }
    out += "\n";
    for (const Json& row : arr) {
        first = true;
        for (auto& [key, value] : row.items()) {
            (void)key;
            if (!first) out += ",";
            out += csv_escape(value);
            first = false;
        }
        out += "\n";
    }
    return out;
}

std::string maybe_csv(const OutputArgs& out, const std::string& json_text, const std::string& array_field) {
    if (out.format != "csv") return json_text;
    Json j = Json::parse(json_text);
    const Json& arr = array_field.empty() ? j : j.at(array_field);
    return records_to_csv(arr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-contraction laboratory"};
    app.require_subcommand(1);

    MapArgs map_args;
    OutputArgs out_args;
    std::string x_arg = "0";
    long steps = 10;
    long horizon = 0;
    double tol = 1e-9;
    long kmax = 200;
    int budget = 0;
    int bins = 1024;
    int basin_samples = 100;
    long iter_cap = 100000;
    std::uint64_t seed = 0;
    long burn_in = 1000;
    int probe_len = 256;
    std::string config_file;

    auto* validate = app.add_subcommand("validate", "validate a system description");
    add_map_options(validate, map_args);
    add_output_options(validate, out_args);

    auto* orbit = app.add_subcommand("orbit", "forward orbit of f (or of g with --g)");
    add_map_options(orbit, map_args);
    add_output_options(orbit, out_args);
    orbit->add_option("--x", x_arg, "initial point (scalar literal)");
    orbit->add_option("--steps", steps, "iterate count");
    bool use_g = false;
    orbit->add_flag("--g", use_g, "iterate the expanding left inverse");

    auto* itin = app.add_subcommand("itinerary", "digit itinerary with optional classification");
    add_map_options(itin, map_args);
    add_output_options(itin, out_args);
    itin->add_option("--x", x_arg, "initial point");
    itin->add_option("--steps", steps, "digits to emit");
    itin->add_option("--horizon", horizon, "classification horizon (0 = skip)");
    itin->add_option("--tol", tol, "recurrence tolerance");

    auto* gaps = app.add_subcommand("gaps", "image set and gap set of the map");
    add_map_options(gaps, map_args);
    add_output_options(gaps, out_args);

    auto* qpart = app.add_subcommand("qpartition", "invariant quasi-partition with verification");
    add_map_options(qpart, map_args);
    add_output_options(qpart, out_args);
    qpart->add_option("--budget", budget, "gap-hit budget (0 = auto)");

    auto* attr = app.add_subcommand("attractors", "periodic orbits, stability, basins");
    add_map_options(attr, map_args);
    add_output_options(attr, out_args);
    attr->add_option("--basin-samples", basin_samples, "sampled initial points");
    attr->add_option("--iter-cap", iter_cap, "basin iteration cap");
    attr->add_option("--seed", seed, "basin sampling seed");

    auto* gconn = app.add_subcommand("gconnect", "scan for g-connections");
    add_map_options(gconn, map_args);
    add_output_options(gconn, out_args);
    gconn->add_option("--kmax", kmax, "scan horizon");

    auto* ulam = app.add_subcommand("ulam", "Ulam stationary density of g");
    add_map_options(ulam, map_args);
    add_output_options(ulam, out_args);
    ulam->add_option("--bins", bins, "bin count");

    auto* dgap = app.add_subcommand("density-gap", "largest empty gap of a g-orbit");
    add_map_options(dgap, map_args);
    add_output_options(dgap, out_args);
    dgap->add_option("--x", x_arg, "seed point");
    dgap->add_option("--steps", steps, "orbit length");

    auto* oracle = app.add_subcommand("oracle", "direct attractor oracle (works in general mode)");
    add_map_options(oracle, map_args);
    add_output_options(oracle, out_args);
    oracle->add_option("--x", x_arg, "initial point");
    oracle->add_option("--burn-in", burn_in, "max transient");
    oracle->add_option("--probe", probe_len, "max candidate period");
    oracle->add_option("--tol", tol, "recurrence tolerance");

    auto* campaign = app.add_subcommand("campaign", "parameter-sweep campaign from a config file");
    campaign->add_option("--config", config_file, "campaign config JSON")->required();
    add_output_options(campaign, out_args);

    auto* presets_cmd = app.add_subcommand("presets", "list shipped systems");
    add_output_options(presets_cmd, out_args);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) {
        std::string spec = resolve_spec_json(map_args);
        char* rep = nullptr;
        check(pcdyn_validate_system(spec.c_str(), &rep));
        emit(out_args, take_string(rep));
        return 0;
    }
    if (orbit->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_orbit_json(h.ptr, x_arg.c_str(), steps, use_g ? 1 : 0, &buf));
        emit(out_args, maybe_csv(out_args, take_string(buf), "steps"));
        return 0;
    }
    if (itin->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_itinerary_json(h.ptr, x_arg.c_str(), steps, horizon, tol, &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (gaps->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_map_image_json(h.ptr, &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (qpart->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        int code = pcdyn_qpartition_json(h.ptr, budget, &buf);
        if (buf) emit(out_args, take_string(buf));
        if (code != PCDYN_OK) die(code);
        return 0;
    }
    if (attr->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_attractors_json(h.ptr, basin_samples, iter_cap, seed, &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (gconn->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_gconnection_json(h.ptr, kmax, &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (ulam->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_ulam_json(h.ptr, bins, 1, &buf));
        emit(out_args, maybe_csv(out_args, take_string(buf), "density"));
        return 0;
    }
    if (dgap->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        double gap = 0;
        check(pcdyn_density_gap(h.ptr, x_arg.c_str(), steps, &gap));
        Json j;
        j["x"] = x_arg;
        j["M"] = steps;
        j["max_gap"] = gap;
        emit(out_args, j.dump(2));
        return 0;
    }
    if (oracle->parsed()) {
        MapHandle h;
        open_map(map_args, h);
        char* buf = nullptr;
        check(pcdyn_oracle_json(h.ptr, x_arg.c_str(), burn_in, probe_len, tol, &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (campaign->parsed()) {
        std::ifstream in(config_file);
        if (!in) {
            std::fprintf(stderr, "pcdyn: cannot open '%s'\n", config_file.c_str());
            return PCDYN_ERR_IO;
        }
        std::string cfg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        char* buf = nullptr;
        check(pcdyn_campaign_run(cfg.c_str(), &buf));
        emit(out_args, take_string(buf));
        return 0;
    }
    if (presets_cmd->parsed()) {
        char* buf = nullptr;
        check(pcdyn_presets_json(&buf));
        emit(out_args, maybe_csv(out_args, take_string(buf), ""));
        return 0;
    }
    return 0;
}
