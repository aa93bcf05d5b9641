#pragma once

#include <cmath>

#include "lzs/qubit_model.hpp"

namespace lzs::testing {

/// Four-level qubit of the first-diamond parameter set; with_upper adds the
/// (0,3) and (1,3) crossings used by the second-diamond and combined models.
inline QubitSpec fig2_qubit(bool with_upper = false) {
    QubitSpec q;
    const double e1 = (1.44 - (-1.09)) * 8.4;
    q.levels = {DiabaticLevel{0, -1.44, 0.0, Well::right}, DiabaticLevel{1, -1.09, e1, Well::right},
                DiabaticLevel{2, 1.44, 0.0, Well::left}, DiabaticLevel{3, 1.09, e1, Well::left}};
    q.crossings = {CrossingSpec{0, 2, 0.013}, CrossingSpec{1, 2, 0.09}};
    if (with_upper) {
        q.crossings.push_back(CrossingSpec{0, 3, 0.09});
        q.crossings.push_back(CrossingSpec{1, 3, 0.5});
    }
    q.gamma10 = 0.6;
    q.gamma20 = 5e-5;
    q.gamma32 = 0.6;
    q.temperature = 0.02;
    return q;
}

/// Qubit of the high-frequency fringe study.
inline QubitSpec fig5_qubit() {
    QubitSpec q;
    const double e1 = (1.01 - (-0.91)) * 13.1;
    q.levels = {DiabaticLevel{0, -1.01, 0.0, Well::right}, DiabaticLevel{1, -0.91, e1, Well::right},
                DiabaticLevel{2, 1.01, 0.0, Well::left}, DiabaticLevel{3, 0.91, e1, Well::left}};
    q.crossings = {CrossingSpec{0, 2, 0.004}, CrossingSpec{1, 2, 0.09}};
    q.gamma10 = 0.6;
    q.gamma20 = 5e-5;
    q.gamma32 = 0.6;
    q.temperature = 0.02;
    return q;
}

inline bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace lzs::testing
