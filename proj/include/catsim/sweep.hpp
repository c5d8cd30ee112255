#pragma once

#include "catsim/concurrence.hpp"
#include "catsim/oracle.hpp"

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace catsim {

enum class route { general, xmatrix, evolution, oracle };

route parse_route(const std::string& name);

struct sweep_config {
    double alpha_min = 1.0;
    double alpha_max = 1.0;
    int alpha_steps = 1; // number of grid points (>= 1)
    std::vector<double> etas{1.0};
    std::vector<double> thetas{0.0};
    std::vector<double> ws{0.5};
    std::vector<int> codes{1};
    std::set<route> routes{route::general, route::xmatrix, route::evolution};
    int threads = 0; // 0 = hardware concurrency

    /// Throws domain_error with a field-precise message on invalid content.
    void validate() const;
    std::vector<double> alpha_grid() const;
};

/// Values read from a plain "key = value" config file. Only the keys present
/// in the file are recorded, so command-line flags can override the rest.
struct sweep_file_config {
    sweep_config values;
    std::vector<std::string> routes;
    std::string out;
    std::set<std::string> keys;
};

/// Parses a config file with one "key = value" assignment per line
/// ('#' comments, blank lines allowed). Keys: alpha-min, alpha-max,
/// alpha-steps, eta, theta, w, code, route, threads, out; list values are
/// comma-separated. Throws domain_error with file:line-precise messages.
sweep_file_config load_sweep_config(const std::string& path);

struct result_row {
    double alpha, eta, theta, w;
    int n;
    double p_e;        // flip_prob_single
    double p_e_pair;   // flip_prob_pair
    double p_success;  // success_prob(n, P_e)
    double c_general;  // NaN when the route is not selected
    double c_x;        // NaN when not selected or the state is not X-shaped
    double c_evolution;
    double disagreement; // max pairwise gap of computed routes (+ oracle residual)
};

/// Evaluates the grid in lexicographic order (alpha, eta, theta, w, n).
/// Grid points are independent work items; rows are returned in grid order
/// irrespective of thread count, so output bytes never depend on parallelism.
std::vector<result_row> run_sweep(const sweep_config& cfg);

/// Locale-independent float formatting, 9 significant digits.
std::string format_double(double v);

/// Header + rows; rows whose disagreement reaches 1e-6 are flagged by a
/// following '#' comment line.
void write_sweep_csv(std::ostream& os, const std::vector<result_row>& rows);

inline constexpr double route_disagreement_tolerance = 1e-6;

/// Figure panels of the encoded-transmission comparison: (eta, theta) pairs.
std::vector<std::pair<double, double>> figure4_panels();
/// Repetition counts plotted in the comparison figures.
std::vector<int> figure_code_set();

/// CSV reproduction of figure fig_id in {1..5}; resolution = grid points per
/// axis. Axis ranges: alpha in [0,3] (figures 1-3), alpha in [0.05,3]
/// (figure 4), theta in [0,2pi) (figure 3), eta in [0,1] (figure 5).
std::string figure_csv(int fig_id, int resolution);

} // namespace catsim
