#pragma once

#include <stdexcept>
#include <string>

namespace catsim {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument / domain violation (bad amplitude, weight out of range, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

/// State whose normalization constant vanishes (unnormalizable superposition).
struct degenerate_state_error : error {
    explicit degenerate_state_error(const std::string& what) : error(what) {}
};

/// Non-orthogonalizable coherent basis (Gram matrix numerically singular).
struct degenerate_basis_error : error {
    explicit degenerate_basis_error(const std::string& what) : error(what) {}
};

/// Invalid repetition-code specification (even or out-of-range n).
struct invalid_code_error : error {
    explicit invalid_code_error(const std::string& what) : error(what) {}
};

/// Numerical failure (eigensolver non-convergence, negative spectrum, ...).
struct numeric_error : error {
    explicit numeric_error(const std::string& what) : error(what) {}
};

/// Fock-space truncation too small for the requested accuracy.
struct truncation_error : error {
    explicit truncation_error(const std::string& what) : error(what) {}
};

/// Exhaustive enumeration refused (pattern count too large).
struct enumeration_error : error {
    explicit enumeration_error(const std::string& what) : error(what) {}
};

} // namespace catsim
