#pragma once
#include <stdexcept>
#include <string>

namespace paramd {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameter or configuration value.
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(w) {}
};

// Argument outside the mathematical domain of a kernel.
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(w) {}
};

// Malformed input file; message carries the line number.
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

// Rejection sampling ran out of attempts.
struct PlacementError : Error {
    explicit PlacementError(const std::string& w) : Error(w) {}
};

// Two particles at identical positions.
struct CoincidentParticlesError : Error {
    explicit CoincidentParticlesError(const std::string& w) : Error(w) {}
};

// Particle (or grid point) outside the lattice region it must map onto.
struct CoverageError : Error {
    explicit CoverageError(const std::string& w) : Error(w) {}
};

// Grid levels passed in the wrong order or to the wrong phase.
struct HierarchyError : Error {
    explicit HierarchyError(const std::string& w) : Error(w) {}
};

// Non-finite state encountered mid-simulation.
struct RuntimeFault : Error {
    explicit RuntimeFault(const std::string& w) : Error(w) {}
};

}  // namespace paramd
