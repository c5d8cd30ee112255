#include "catsim/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace catsim;

TEST_CASE("default verification run passes every non-errata check") {
    const auto results = run_all_checks();
    int errata = 0;
    for (const auto& r : results) {
        if (r.errata) {
            ++errata;
            CHECK_MESSAGE(r.pass, "errata check misbehaved: ", r.name);
        } else {
            CHECK_MESSAGE(r.pass, "check failed: ", r.name, " residual ", r.max_residual);
        }
    }
    CHECK(errata >= 4);
    std::ostringstream os;
    CHECK(print_report(os, results));
    CHECK(os.str().find("all checks passed") != std::string::npos);
}

TEST_CASE("perturbing the flip probability breaks the route equivalence") {
    verify_options opt;
    opt.inject_pe_error = 1e-3;
    const auto results = run_all_checks(opt);
    bool route_check_failed = false;
    for (const auto& r : results)
        if (r.name == "route-general-vs-evolution" && !r.pass) route_check_failed = true;
    CHECK(route_check_failed);
    std::ostringstream os;
    CHECK_FALSE(print_report(os, results));
}
