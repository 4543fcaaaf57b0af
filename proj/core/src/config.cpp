#include "zr/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "zr/errors.hpp"

namespace zr {

namespace {

using json = nlohmann::ordered_json;

std::vector<cplx> parse_shifts(const json& arr, const char* key) {
    if (!arr.is_array())
        throw ConfigError(std::string("config: shifts.") + key +
                          " must be an array of [re, im] pairs");
    std::vector<cplx> out;
    for (const auto& e : arr) {
        if (e.is_number()) {
            out.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() &&
                   e[1].is_number()) {
            out.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw ConfigError(std::string("config: shifts.") + key +
                              " entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

json shift_json(const ShiftSet& s) {
    json arr = json::array();
    for (cplx v : s.elems) arr.push_back({v.real(), v.imag()});
    return arr;
}

json to_json(const Config& cfg) {
    json j;
    j["shifts"] = {{"A", shift_json(cfg.A)},
                   {"B", shift_json(cfg.B)},
                   {"C", shift_json(cfg.C)},
                   {"D", shift_json(cfg.D)}};
    j["t_grid"] = cfg.t_grid;
    j["lambda"] = cfg.lambda;
    j["psi_support"] = {cfg.psi_lo, cfg.psi_hi};
    j["x_override"] = cfg.x_override;
    j["prime_cutoff"] = cfg.prime_cutoff;
    j["sieve_x"] = cfg.sieve_x;
    j["h_values"] = cfg.h_values;
    j["corr_u"] = cfg.corr_u;
    j["corr_width"] = cfg.corr_width;
    j["corr_qmax"] = cfg.corr_qmax;
    j["output_dir"] = cfg.output_dir.string();
    return j;
}

}  // namespace

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    static const std::set<std::string> known = {
        "shifts",      "t_grid",     "lambda",    "psi_support",
        "x_override",  "prime_cutoff", "sieve_x", "h_values",
        "corr_u",      "corr_width", "corr_qmax", "output_dir"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw ConfigError("config: unknown key \"" + key + "\"");

    Config cfg;
    if (!j.contains("shifts") || !j["shifts"].is_object())
        throw ConfigError("config: missing \"shifts\" object");
    const json& sh = j["shifts"];
    for (const auto& [key, _] : sh.items())
        if (key != "A" && key != "B" && key != "C" && key != "D")
            throw ConfigError("config: unknown shift set \"" + key + "\"");
    cfg.A = {sh.contains("A") ? parse_shifts(sh["A"], "A") : std::vector<cplx>{},
             Role::A};
    cfg.B = {sh.contains("B") ? parse_shifts(sh["B"], "B") : std::vector<cplx>{},
             Role::B};
    cfg.C = {sh.contains("C") ? parse_shifts(sh["C"], "C") : std::vector<cplx>{},
             Role::C};
    cfg.D = {sh.contains("D") ? parse_shifts(sh["D"], "D") : std::vector<cplx>{},
             Role::D};

    try {
        if (j.contains("t_grid")) cfg.t_grid = j["t_grid"].get<std::vector<double>>();
        if (j.contains("lambda")) cfg.lambda = j["lambda"].get<double>();
        if (j.contains("psi_support")) {
            const auto v = j["psi_support"].get<std::vector<double>>();
            if (v.size() != 2) throw ConfigError("config: psi_support needs [lo, hi]");
            cfg.psi_lo = v[0];
            cfg.psi_hi = v[1];
        }
        if (j.contains("x_override"))
            cfg.x_override = j["x_override"].get<std::uint32_t>();
        if (j.contains("prime_cutoff"))
            cfg.prime_cutoff = j["prime_cutoff"].get<std::uint32_t>();
        if (j.contains("sieve_x")) cfg.sieve_x = j["sieve_x"].get<std::uint32_t>();
        if (j.contains("h_values"))
            cfg.h_values = j["h_values"].get<std::vector<std::uint32_t>>();
        if (j.contains("corr_u")) cfg.corr_u = j["corr_u"].get<double>();
        if (j.contains("corr_width")) cfg.corr_width = j["corr_width"].get<double>();
        if (j.contains("corr_qmax"))
            cfg.corr_qmax = j["corr_qmax"].get<std::uint32_t>();
        if (j.contains("output_dir"))
            cfg.output_dir = j["output_dir"].get<std::string>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (!(cfg.psi_lo > 0.0 && cfg.psi_hi > cfg.psi_lo))
        throw ConfigError("config: psi_support must satisfy 0 < lo < hi");
    if (cfg.t_grid.empty()) throw ConfigError("config: t_grid is empty");
    for (double t : cfg.t_grid)
        if (!(t > 0.0)) throw ConfigError("config: t_grid entries must be > 0");
    if (!(cfg.lambda > 0.0)) throw ConfigError("config: lambda must be > 0");
    if (cfg.sieve_x == 0) throw ConfigError("config: sieve_x must be >= 1");
    for (std::uint32_t h : cfg.h_values)
        if (h == 0) throw ConfigError("config: h_values must be >= 1");
    return cfg;
}

std::string config_snapshot(const Config& cfg) { return to_json(cfg).dump(2); }

void RunManifest::write(const std::filesystem::path& path) const {
    json j;
    j["config"] = json::parse(config);
    j["version"] = version;
    j["seed"] = seed;
    j["threads"] = threads;
    j["wall_seconds"] = wall_seconds;
    json d = json::object();
    for (const auto& [k, v] : diagnostics) d[k] = v;
    j["diagnostics"] = d;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("manifest: cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace zr
