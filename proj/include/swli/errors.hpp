#pragma once

#include <stdexcept>
#include <string>

namespace swli {

// Error taxonomy shared by the whole engine. The CLI maps these onto exit
// codes: ConfigError/CapabilityError -> 2, everything else -> 3.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct StaleCacheError : std::runtime_error {
    explicit StaleCacheError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace swli
