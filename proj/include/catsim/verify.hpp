#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catsim {

struct check_result {
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
    bool errata; // expected discrepancy with a printed form, not a failure
    std::string note;
};

struct verify_options {
    /// Scales every check tolerance (tolerance override knob).
    double tol_scale = 1.0;
    /// Test-harness hook: perturbs the flip probability feeding the
    /// evolution route inside the route-equivalence check, which must then fail.
    double inject_pe_error = 0.0;
};

/// Runs every cross-check of the library (structure, oracle equivalence,
/// route equivalence, ordering, kernel contracts, determinism) plus the
/// expected-discrepancy checks of the printed formulas.
std::vector<check_result> run_all_checks(const verify_options& opt = {});

/// Prints one line per check; returns true iff every non-errata check passed.
bool print_report(std::ostream& os, const std::vector<check_result>& results);

} // namespace catsim
