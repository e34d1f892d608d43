#pragma once

#include <stdexcept>
#include <string>

namespace fedgen {

/// Incompatible matrix/adapter shapes. Message names both shapes.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Invalid configuration (unknown layer id, bad strategy name, rejected config file).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Infeasible data partition.
struct PartitionError : std::runtime_error {
    explicit PartitionError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Federation protocol violation (empty aggregation, degenerate round).
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File I/O failure, always carrying the path.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fedgen
