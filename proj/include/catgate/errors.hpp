#pragma once

#include <stdexcept>
#include <string>

namespace catgate {

/// Base type for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments: dimension mismatches, invalid labels, out-of-range values.
struct InputError : Error {
    using Error::Error;
};

/// Configuration problems: unparsable files, missing keys, violated
/// parameter conventions. Carries location info when it comes from a file.
struct ConfigError : Error {
    ConfigError(const std::string& msg, int line = 0, std::string key = {})
        : Error(format(msg, line, key)), line(line), key(std::move(key)) {}

    int line = 0;
    std::string key;

  private:
    static std::string format(const std::string& msg, int line, const std::string& key) {
        std::string s = msg;
        if (!key.empty()) s += " [key: " + key + "]";
        if (line > 0) s += " [line " + std::to_string(line) + "]";
        return s;
    }
};

/// A requested state cannot be represented within the configured Fock
/// truncation. Reports the truncation that would be sufficient.
struct TruncationError : Error {
    TruncationError(const std::string& msg, int required_n_trunc)
        : Error(msg + " (required n_trunc >= " + std::to_string(required_n_trunc) + ")"),
          required_n_trunc(required_n_trunc) {}

    int required_n_trunc;
};

/// Integrator accuracy failure: norm/trace drift or Hermiticity loss
/// beyond tolerance at the end of a propagation.
struct AccuracyError : Error {
    using Error::Error;
};

/// A parameter constraint cannot be satisfied (e.g. coupling solve with
/// incompatible detuning signs).
struct ConstraintError : Error {
    using Error::Error;
};

} // namespace catgate
