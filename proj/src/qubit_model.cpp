#include "lzs/qubit_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lzs {

const CrossingSpec& QubitSpec::crossing(int i, int j) const {
    for (const auto& c : crossings) {
        if (c.i == i && c.j == j) return c;
    }
    throw std::out_of_range("no crossing declared for pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
}

void validate_qubit(const QubitSpec& q) {
    for (int k = 0; k < 4; ++k) {
        const auto& lv = q.levels[static_cast<std::size_t>(k)];
        if (lv.index != k) throw std::invalid_argument("levels must be ordered 0..3");
        const Well expected = k < 2 ? Well::right : Well::left;
        if (lv.well != expected)
            throw std::invalid_argument("level " + std::to_string(k) + " assigned to the wrong well");
        if (lv.slope == 0.0) throw std::invalid_argument("level slopes must be nonzero");
        if ((lv.well == Well::right) != (lv.slope < 0.0))
            throw std::invalid_argument("right-well levels need negative slope, left-well positive");
    }
    for (const auto& c : q.crossings) {
        if (c.i < 0 || c.i > 1 || c.j < 2 || c.j > 3)
            throw std::invalid_argument("crossing indices must pair a right-well with a left-well level");
        if (c.gap < 0.0) throw std::invalid_argument("crossing gaps must be >= 0");
    }
    if (q.gamma10 < 0.0 || q.gamma20 < 0.0 || q.gamma32 < 0.0)
        throw std::invalid_argument("relaxation rates must be >= 0");
    if (!(q.temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
}

double crossing_location(const std::array<DiabaticLevel, 4>& levels, int i, int j) {
    const auto& a = levels.at(static_cast<std::size_t>(i));
    const auto& b = levels.at(static_cast<std::size_t>(j));
    if (a.slope == b.slope)
        throw std::domain_error("levels " + std::to_string(i) + " and " + std::to_string(j) +
                                " are parallel; no crossing");
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

CrossingChannel channel(const QubitSpec& q, const DriveSpec& d, int i, int j) {
    CrossingChannel ch;
    ch.crossing = q.crossing(i, j);
    ch.location = crossing_location(q.levels, i, j);
    ch.combined_slope = std::abs(q.levels[static_cast<std::size_t>(i)].slope) +
                        std::abs(q.levels[static_cast<std::size_t>(j)].slope);
    ch.epsilon = ch.combined_slope * (d.dphi_dc - ch.location);
    ch.amplitude = ch.combined_slope * d.phi_rf;
    return ch;
}

double energy_gap(const QubitSpec& q, int i, int j, double dphi_dc) {
    q.crossing(i, j);  // declared-pair check
    const double loc = crossing_location(q.levels, i, j);
    const double slope = std::abs(q.levels[static_cast<std::size_t>(i)].slope) +
                         std::abs(q.levels[static_cast<std::size_t>(j)].slope);
    return std::abs(slope * (dphi_dc - loc));
}

double thermal_rate(double gamma20, double e02, double temperature) {
    if (!(temperature > 0.0)) throw std::invalid_argument("temperature must be > 0");
    if (e02 < 0.0) throw std::invalid_argument("e02 must be >= 0");
    return gamma20 * std::exp(-e02 / (kBoltzmannGHzPerKelvin * temperature));
}

}  // namespace lzs
