#include "lzs/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lzs/errors.hpp"
#include "lzs/grid_io.hpp"

namespace lzs {
namespace {

struct Entry {
    std::string value;
    int line = 0;
    bool used = false;
};

class KeyTable {
public:
    KeyTable(std::map<std::string, Entry> entries, std::string name)
        : entries_(std::move(entries)), name_(std::move(name)) {}

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    const std::string& raw(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end()) throw config_error(name_ + ": missing required key", key);
        it->second.used = true;
        return it->second.value;
    }

    double number(const std::string& key) {
        const std::string& s = raw(key);
        const char* begin = s.c_str();
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || std::isnan(v))
            throw config_error(name_ + ": unparseable number '" + s + "'", key, line(key));
        return v;
    }

    double number_or(const std::string& key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    int integer(const std::string& key) {
        const double v = number(key);
        if (v != std::floor(v) || std::abs(v) > 1e9)
            throw config_error(name_ + ": expected an integer", key, line(key));
        return static_cast<int>(v);
    }

    int line(const std::string& key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    void reject_unused() const {
        for (const auto& [key, entry] : entries_)
            if (!entry.used) throw config_error(name_ + ": unknown key", key, entry.line);
    }

    const std::string& name() const { return name_; }

private:
    std::map<std::string, Entry> entries_;
    std::string name_;
};

KeyTable tokenize(const std::string& text, const std::string& name) {
    std::map<std::string, Entry> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(name + ": expected 'key = value' on line " + std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error(name + ": empty key or value", key, lineno);
        if (!entries.emplace(key, Entry{value, lineno, false}).second)
            throw config_error(name + ": duplicate key", key, lineno);
    }
    return KeyTable(std::move(entries), name);
}

void require_positive(double v, const KeyTable& t, const std::string& key) {
    if (!(v > 0.0)) throw config_error(t.name() + ": value must be > 0", key, t.line(key));
}

void require_nonnegative(double v, const KeyTable& t, const std::string& key) {
    if (v < 0.0) throw config_error(t.name() + ": value must be >= 0", key, t.line(key));
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& name) {
    KeyTable t = tokenize(text, name);
    RunConfig cfg;

    cfg.model = model_from_name(t.raw("model"));
    cfg.omega = t.number("drive.omega");
    require_positive(cfg.omega, t, "drive.omega");
    cfg.gamma2 = t.number("rates.gamma2");
    require_positive(cfg.gamma2, t, "rates.gamma2");

    QubitSpec& q = cfg.qubit;
    q.gamma10 = t.number("rates.gamma10");
    require_nonnegative(q.gamma10, t, "rates.gamma10");
    q.gamma20 = t.number("rates.gamma20");
    require_nonnegative(q.gamma20, t, "rates.gamma20");
    q.gamma32 = t.number_or("rates.gamma32", q.gamma10);  // mirror-symmetric wells
    require_nonnegative(q.gamma32, t, "rates.gamma32");
    q.temperature = t.number_or("temperature", 0.02);
    require_positive(q.temperature, t, "temperature");

    const std::array<const char*, 4> slope_keys{"slopes.m0", "slopes.m1", "slopes.m2", "slopes.m3"};
    for (int k = 0; k < 4; ++k) {
        DiabaticLevel& lv = q.levels[static_cast<std::size_t>(k)];
        lv.index = k;
        lv.well = k < 2 ? Well::right : Well::left;
        lv.slope = t.number(slope_keys[static_cast<std::size_t>(k)]);
        if ((k < 2 && lv.slope >= 0.0) || (k >= 2 && lv.slope <= 0.0))
            throw config_error(name + ": right-well slopes are negative, left-well positive",
                               slope_keys[static_cast<std::size_t>(k)],
                               t.line(slope_keys[static_cast<std::size_t>(k)]));
    }

    const bool have_locations = t.has("locations.l02") || t.has("locations.l12");
    const bool have_intercepts = t.has("intercepts.e0") || t.has("intercepts.e1") ||
                                 t.has("intercepts.e2") || t.has("intercepts.e3");
    if (have_locations == have_intercepts)
        throw config_error(name +
                           ": specify level geometry by exactly one of locations.l02+locations.l12 "
                           "or intercepts.e0..e3");
    if (have_locations) {
        // canonicalize to intercepts: gauge e0 = 0, mirror-symmetric e3 = e1
        const double l02 = t.number("locations.l02");
        const double l12 = t.number("locations.l12");
        const double e0 = 0.0;
        const double e2 = e0 + (q.levels[0].slope - q.levels[2].slope) * l02;
        const double e1 = e2 + (q.levels[2].slope - q.levels[1].slope) * l12;
        q.levels[0].intercept = e0;
        q.levels[1].intercept = e1;
        q.levels[2].intercept = e2;
        q.levels[3].intercept = e1;
    } else {
        q.levels[0].intercept = t.number("intercepts.e0");
        q.levels[1].intercept = t.number("intercepts.e1");
        q.levels[2].intercept = t.number("intercepts.e2");
        q.levels[3].intercept = t.number("intercepts.e3");
    }

    struct GapKey {
        const char* key;
        int i, j;
        bool required;
    };
    const bool second = cfg.model == Model::second_diamond;
    const bool combined = cfg.model == Model::combined;
    const GapKey gap_keys[] = {
        {"gaps.d02", 0, 2, !second},
        {"gaps.d12", 1, 2, true},
        {"gaps.d03", 0, 3, second || combined},
        {"gaps.d13", 1, 3, combined},
    };
    for (const auto& gk : gap_keys) {
        if (!gk.required && !t.has(gk.key)) continue;
        const double gap = t.number(gk.key);
        require_nonnegative(gap, t, gk.key);
        q.crossings.push_back(CrossingSpec{gk.i, gk.j, gap});
    }

    cfg.grid.dphi_min = t.number("grid.dphi_min");
    cfg.grid.dphi_max = t.number("grid.dphi_max");
    cfg.grid.dphi_steps = t.integer("grid.dphi_steps");
    cfg.grid.phi_rf_min = t.number("grid.phirf_min");
    cfg.grid.phi_rf_max = t.number("grid.phirf_max");
    cfg.grid.phi_rf_steps = t.integer("grid.phirf_steps");

    t.reject_unused();
    try {
        validate_qubit(q);
        validate_grid(cfg.grid);
    } catch (const std::invalid_argument& e) {
        throw config_error(name + ": " + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::vector<std::pair<std::string, std::string>> echo_config(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> kv;
    auto put = [&kv](const std::string& k, const std::string& v) { kv.emplace_back(k, v); };
    auto putd = [&](const std::string& k, double v) { put(k, format_double_exact(v)); };

    put("model", model_name(cfg.model));
    putd("drive.omega", cfg.omega);
    putd("rates.gamma2", cfg.gamma2);
    putd("rates.gamma10", cfg.qubit.gamma10);
    putd("rates.gamma20", cfg.qubit.gamma20);
    putd("rates.gamma32", cfg.qubit.gamma32);
    putd("temperature", cfg.qubit.temperature);
    for (int k = 0; k < 4; ++k)
        putd("slopes.m" + std::to_string(k), cfg.qubit.levels[static_cast<std::size_t>(k)].slope);
    for (int k = 0; k < 4; ++k)
        putd("intercepts.e" + std::to_string(k),
             cfg.qubit.levels[static_cast<std::size_t>(k)].intercept);
    for (const auto& c : cfg.qubit.crossings)
        putd("gaps.d" + std::to_string(c.i) + std::to_string(c.j), c.gap);
    putd("grid.dphi_min", cfg.grid.dphi_min);
    putd("grid.dphi_max", cfg.grid.dphi_max);
    put("grid.dphi_steps", std::to_string(cfg.grid.dphi_steps));
    putd("grid.phirf_min", cfg.grid.phi_rf_min);
    putd("grid.phirf_max", cfg.grid.phi_rf_max);
    put("grid.phirf_steps", std::to_string(cfg.grid.phi_rf_steps));
    return kv;
}

}  // namespace lzs
