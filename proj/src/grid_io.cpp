#include "lzs/grid_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lzs/errors.hpp"

namespace lzs {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_double_exact(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_grid_csv(const SweepGrid& grid, const std::string& path) {
    std::ostringstream out;
    for (const auto& [key, value] : grid.metadata) out << "# " << key << " = " << value << "\n";
    out << "dphi_dc,phi_rf,p_left\n";
    for (int iy = 0; iy < grid.spec.phi_rf_steps; ++iy) {
        const std::string phirf = format_double(grid.spec.phi_rf_at(iy));
        for (int ix = 0; ix < grid.spec.dphi_steps; ++ix) {
            out << format_double(grid.spec.dphi_at(ix)) << ',' << phirf << ','
                << format_double(grid.at(ix, iy)) << '\n';
        }
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    const std::string s = out.str();
    f.write(s.data(), static_cast<std::streamsize>(s.size()));
    if (!f) throw std::runtime_error("short write to '" + path + "'");
}

SweepGrid read_grid_csv(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for reading");
    SweepGrid grid;
    std::string line;
    bool saw_header = false;
    auto meta_value = [&grid](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : grid.metadata)
            if (k == key) return v;
        throw std::runtime_error("grid CSV metadata is missing '" + key + "'");
    };
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find(" = ");
            if (eq == std::string::npos || eq < 2)
                throw std::runtime_error("malformed metadata line in '" + path + "'");
            grid.metadata.emplace_back(line.substr(2, eq - 2), line.substr(eq + 3));
            continue;
        }
        if (!saw_header) {
            if (line != "dphi_dc,phi_rf,p_left")
                throw std::runtime_error("unexpected CSV header in '" + path + "'");
            grid.spec.dphi_min = std::stod(meta_value("grid.dphi_min"));
            grid.spec.dphi_max = std::stod(meta_value("grid.dphi_max"));
            grid.spec.dphi_steps = std::stoi(meta_value("grid.dphi_steps"));
            grid.spec.phi_rf_min = std::stod(meta_value("grid.phirf_min"));
            grid.spec.phi_rf_max = std::stod(meta_value("grid.phirf_max"));
            grid.spec.phi_rf_steps = std::stoi(meta_value("grid.phirf_steps"));
            grid.model = model_from_name(meta_value("model"));
            grid.values.reserve(static_cast<std::size_t>(grid.spec.dphi_steps) *
                                static_cast<std::size_t>(grid.spec.phi_rf_steps));
            saw_header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.rfind(',');
        if (c1 == std::string::npos || c2 == c1)
            throw std::runtime_error("malformed CSV row in '" + path + "'");
        grid.values.push_back(std::stod(line.substr(c2 + 1)));
    }
    if (!saw_header) throw std::runtime_error("'" + path + "' contains no CSV header");
    const std::size_t expect = static_cast<std::size_t>(grid.spec.dphi_steps) *
                               static_cast<std::size_t>(grid.spec.phi_rf_steps);
    if (grid.values.size() != expect)
        throw std::runtime_error("'" + path + "' row count does not match its grid dimensions");
    return grid;
}

void write_grid_pgm(const SweepGrid& grid, const std::string& path, double vmin, double vmax) {
    if (!(vmax > vmin)) throw std::invalid_argument("write_grid_pgm: vmax must exceed vmin");
    const int w = grid.spec.dphi_steps;
    const int h = grid.spec.phi_rf_steps;
    std::string payload;
    payload.reserve(static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * 2);
    for (int iy = h - 1; iy >= 0; --iy) {  // rows top-down = phi_rf descending
        for (int ix = 0; ix < w; ++ix) {
            double u = (grid.at(ix, iy) - vmin) / (vmax - vmin);
            u = u < 0.0 ? 0.0 : (u > 1.0 ? 1.0 : u);
            const auto v = static_cast<std::uint16_t>(u * 65535.0 + 0.5);
            payload.push_back(static_cast<char>(v >> 8));  // big-endian per PGM
            payload.push_back(static_cast<char>(v & 0xff));
        }
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << "P5\n" << w << ' ' << h << "\n65535\n";
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!f) throw std::runtime_error("short write to '" + path + "'");
}

}  // namespace lzs
