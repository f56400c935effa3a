#pragma once

#include <stdexcept>
#include <string>

namespace metaplectic {

struct ZeroInput : std::domain_error {
    explicit ZeroInput(const std::string& what) : std::domain_error(what) {}
};

struct DepthTooSmall : std::runtime_error {
    explicit DepthTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NotStabilized : std::runtime_error {
    explicit NotStabilized(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedPrime : std::domain_error {
    explicit UnsupportedPrime(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedRamification : std::domain_error {
    explicit UnsupportedRamification(const std::string& what) : std::domain_error(what) {}
};

struct NotSimilitude : std::domain_error {
    explicit NotSimilitude(const std::string& what) : std::domain_error(what) {}
};

struct ShapeMismatch : std::domain_error {
    explicit ShapeMismatch(const std::string& what) : std::domain_error(what) {}
};

struct UnsupportedCocyclePath : std::runtime_error {
    explicit UnsupportedCocyclePath(const std::string& what) : std::runtime_error(what) {}
};

struct ConjugatorNotOmegaZero : std::domain_error {
    explicit ConjugatorNotOmegaZero(const std::string& what) : std::domain_error(what) {}
};

struct UnknownSuite : std::domain_error {
    explicit UnknownSuite(const std::string& what) : std::domain_error(what) {}
};

} // namespace metaplectic
