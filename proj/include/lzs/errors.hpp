#pragma once

#include <stdexcept>
#include <string>

namespace lzs {

/// Configuration file problem; carries the offending key and line number
/// (line 0 when the location is not meaningful, e.g. a missing key).
class config_error : public std::runtime_error {
public:
    config_error(const std::string& msg, std::string key = {}, int line = 0)
        : std::runtime_error(line > 0 ? msg + " (key '" + key + "', line " + std::to_string(line) + ")"
                                      : (key.empty() ? msg : msg + " (key '" + key + "')")),
          key_(std::move(key)),
          line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

/// Rate system is rank-deficient beyond the conservation law: no unique
/// stationary state.
class degenerate_system_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Relaxation did not reach the requested residual within the step budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fixed-step integrator asked to run outside its stability bound.
class step_size_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lzs
