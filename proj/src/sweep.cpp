#include "catsim/sweep.hpp"

#include "catsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <thread>

namespace catsim {

route parse_route(const std::string& name) {
    if (name == "general") return route::general;
    if (name == "xmatrix") return route::xmatrix;
    if (name == "evolution") return route::evolution;
    if (name == "oracle") return route::oracle;
    throw domain_error("unknown route '" + name + "' (expected general|xmatrix|evolution|oracle)");
}

void sweep_config::validate() const {
    if (!(alpha_min >= 0.0) || !std::isfinite(alpha_min))
        throw domain_error("alpha-min must be finite and >= 0");
    if (!(alpha_max >= alpha_min) || !std::isfinite(alpha_max))
        throw domain_error("alpha-max must be finite and >= alpha-min");
    if (alpha_steps < 1) throw domain_error("alpha-steps must be >= 1");
    if (alpha_steps == 1 && alpha_max != alpha_min)
        throw domain_error("alpha-steps = 1 requires alpha-min == alpha-max");
    if (etas.empty()) throw domain_error("at least one eta required");
    for (double e : etas)
        if (!(e >= 0.0 && e <= 1.0)) throw domain_error("eta values must be in [0, 1]");
    if (thetas.empty()) throw domain_error("at least one theta required");
    for (double t : thetas)
        if (!std::isfinite(t)) throw domain_error("theta values must be finite");
    if (ws.empty()) throw domain_error("at least one w required");
    for (double w : ws)
        if (!(w >= 0.0 && w <= 1.0)) throw domain_error("w values must be in [0, 1]");
    if (codes.empty()) throw domain_error("at least one code required");
    for (int n : codes)
        if (n < 1 || n > 101 || n % 2 == 0)
            throw domain_error("code values must be odd and in [1, 101]");
    if (routes.empty()) throw domain_error("at least one route required");
    if (threads < 0) throw domain_error("threads must be >= 0");
}

std::vector<double> sweep_config::alpha_grid() const {
    std::vector<double> g(alpha_steps);
    if (alpha_steps == 1) {
        g[0] = alpha_min;
        return g;
    }
    const double step = (alpha_max - alpha_min) / (alpha_steps - 1);
    for (int i = 0; i < alpha_steps; ++i) g[i] = alpha_min + step * i;
    return g;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        out.push_back(trim(s.substr(pos, comma == std::string::npos ? comma : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

sweep_file_config load_sweep_config(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw domain_error("cannot open config file '" + path + "'");
    sweep_file_config cfg;
    std::string line;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw domain_error(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto to_double = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) fail("trailing characters in number '" + s + "'");
            return v;
        } catch (const std::invalid_argument&) {
            fail("not a number: '" + s + "'");
        } catch (const std::out_of_range&) {
            fail("number out of range: '" + s + "'");
        }
        return 0.0; // unreachable
    };
    auto to_double_list = [&](const std::string& s) {
        std::vector<double> out;
        for (const auto& item : split_list(s)) {
            if (item.empty()) fail("empty list element");
            out.push_back(to_double(item));
        }
        return out;
    };

    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail("missing key");
        if (value.empty()) fail("missing value for '" + key + "'");
        if (cfg.keys.count(key)) fail("duplicate key '" + key + "'");
        cfg.keys.insert(key);

        if (key == "alpha-min") {
            cfg.values.alpha_min = to_double(value);
        } else if (key == "alpha-max") {
            cfg.values.alpha_max = to_double(value);
        } else if (key == "alpha-steps") {
            cfg.values.alpha_steps = static_cast<int>(to_double(value));
        } else if (key == "eta") {
            cfg.values.etas = to_double_list(value);
        } else if (key == "theta") {
            cfg.values.thetas = to_double_list(value);
        } else if (key == "w") {
            cfg.values.ws = to_double_list(value);
        } else if (key == "code") {
            cfg.values.codes.clear();
            for (double v : to_double_list(value))
                cfg.values.codes.push_back(static_cast<int>(v));
        } else if (key == "threads") {
            cfg.values.threads = static_cast<int>(to_double(value));
        } else if (key == "route") {
            cfg.routes = split_list(value);
            for (const auto& r : cfg.routes) parse_route(r); // validate names here
        } else if (key == "out") {
            cfg.out = value;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    return cfg;
}

namespace {

result_row evaluate_point(double alpha, double eta, double theta, double w, int n,
                          const std::set<route>& routes) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    result_row row{alpha, eta, theta, w, n, nan, nan, nan, nan, nan, nan, nan};

    const channel_params ch(eta);
    const code_spec code(n);
    row.p_e = flip_prob_single(alpha, ch);
    row.p_e_pair = flip_prob_pair(alpha, ch);
    row.p_success = success_prob(code, row.p_e_pair);

    const two_mode_cat_state s(alpha, alpha, w, theta);
    cmat4 rho;
    const bool need_rho = routes.count(route::general) || routes.count(route::xmatrix) ||
                          routes.count(route::oracle);
    if (need_rho) rho = transmit_encoded(s, ch, code);

    if (routes.count(route::general)) row.c_general = concurrence(rho);
    if (routes.count(route::xmatrix) && is_x_shaped(rho))
        row.c_x = concurrence_x(x_matrix::from_dense(rho));
    if (routes.count(route::evolution)) {
        if (alpha > 0.0)
            row.c_evolution = evolved_concurrence(alpha, ch, code, s);
        else
            row.c_evolution = 0.0;
    }

    double dis = nan;
    const double vals[3] = {row.c_general, row.c_x, row.c_evolution};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::isfinite(vals[i]) && std::isfinite(vals[j])) {
                const double d = std::abs(vals[i] - vals[j]);
                if (!std::isfinite(dis) || d > dis) dis = d;
            }
    if (routes.count(route::oracle)) {
        const cmat4 ref = gram_encoded_density(chi_span_state(s), ch, code);
        const double d = rho.max_abs_diff(ref);
        if (!std::isfinite(dis) || d > dis) dis = d;
    }
    row.disagreement = dis;
    return row;
}

} // namespace

std::vector<result_row> run_sweep(const sweep_config& cfg) {
    cfg.validate();
    const auto alphas = cfg.alpha_grid();

    struct point {
        double alpha, eta, theta, w;
        int n;
    };
    std::vector<point> grid;
    grid.reserve(alphas.size() * cfg.etas.size() * cfg.thetas.size() * cfg.ws.size() *
                 cfg.codes.size());
    for (double a : alphas)
        for (double e : cfg.etas)
            for (double t : cfg.thetas)
                for (double w : cfg.ws)
                    for (int n : cfg.codes) grid.push_back({a, e, t, w, n});

    std::vector<result_row> rows(grid.size());
    unsigned nthreads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    nthreads = std::min<unsigned>(nthreads, std::max<std::size_t>(grid.size(), 1));

    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            try {
                const auto& p = grid[i];
                rows[i] = evaluate_point(p.alpha, p.eta, p.theta, p.w, p.n, cfg.routes);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (nthreads <= 1) {
        worker(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid.size() + nthreads - 1) / nthreads;
        for (unsigned t = 0; t < nthreads; ++t) {
            const std::size_t b = t * chunk;
            const std::size_t e = std::min(grid.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back(worker, b, e);
        }
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& os, const std::vector<result_row>& rows) {
    os << "alpha,eta,theta,w,n,p_e,P_e,p_success,concurrence_general,concurrence_x,"
          "concurrence_evolution,max_route_disagreement\n";
    for (const auto& r : rows) {
        os << format_double(r.alpha) << ',' << format_double(r.eta) << ','
           << format_double(r.theta) << ',' << format_double(r.w) << ',' << r.n << ','
           << format_double(r.p_e) << ',' << format_double(r.p_e_pair) << ','
           << format_double(r.p_success) << ',' << format_double(r.c_general) << ','
           << format_double(r.c_x) << ',' << format_double(r.c_evolution) << ','
           << format_double(r.disagreement) << '\n';
        if (std::isfinite(r.disagreement) && r.disagreement >= route_disagreement_tolerance)
            os << "# route disagreement above " << format_double(route_disagreement_tolerance)
               << " in the previous row\n";
    }
}

std::vector<std::pair<double, double>> figure4_panels() {
    const double pi = 4.0 * std::atan(1.0);
    return {{2.0 / 3.0, 0.0}, {0.9, 0.0}, {2.0 / 3.0, pi}, {0.9, pi}};
}

std::vector<int> figure_code_set() { return {1, 3, 5, 11, 51}; }

namespace {

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> g(steps);
    if (steps == 1) {
        g[0] = lo;
        return g;
    }
    for (int i = 0; i < steps; ++i) g[i] = lo + (hi - lo) * i / (steps - 1);
    return g;
}

} // namespace

std::string figure_csv(int fig_id, int resolution) {
    if (fig_id < 1 || fig_id > 5) throw domain_error("figure id must be in 1..5");
    if (resolution < 2) throw domain_error("resolution must be >= 2");
    const double pi = 4.0 * std::atan(1.0);
    std::string out;
    auto add = [&out](std::initializer_list<std::string> fields) {
        bool first = true;
        for (const auto& f : fields) {
            if (!first) out += ',';
            out += f;
            first = false;
        }
        out += '\n';
    };

    switch (fig_id) {
    case 1: {
        out += "alpha,overlap\n";
        for (double a : linspace(0.0, 3.0, resolution))
            add({format_double(a), format_double(overlap(a, -a))});
        break;
    }
    case 2: {
        out += "alpha,p_e_eta_2_3,p_e_eta_0_9\n";
        const channel_params lossy(2.0 / 3.0), mild(0.9);
        for (double a : linspace(0.0, 3.0, resolution))
            add({format_double(a), format_double(flip_prob_single(a, lossy)),
                 format_double(flip_prob_single(a, mild))});
        break;
    }
    case 3: {
        out += "alpha,theta,concurrence\n";
        const auto thetas = linspace(0.0, 2.0 * pi * (resolution - 1.0) / resolution, resolution);
        for (double a : linspace(0.0, 3.0, resolution))
            for (double t : thetas) {
                const two_mode_cat_state s(a, a, 0.5, t);
                add({format_double(a), format_double(t),
                     format_double(initial_concurrence(s))});
            }
        break;
    }
    case 4: {
        out += "eta,theta,alpha,n,concurrence\n";
        for (const auto& [eta, theta] : figure4_panels()) {
            const channel_params ch(eta);
            for (double a : linspace(0.05, 3.0, resolution))
                for (int n : figure_code_set()) {
                    const two_mode_cat_state s(a, a, 0.5, theta);
                    const double c = concurrence(transmit_encoded(s, ch, code_spec(n)));
                    add({format_double(eta), format_double(theta), format_double(a),
                         std::to_string(n), format_double(c)});
                }
        }
        break;
    }
    case 5: {
        out += "eta,n,concurrence\n";
        for (double eta : linspace(0.0, 1.0, resolution))
            for (int n : figure_code_set()) {
                const two_mode_cat_state s(1.3, 1.3, 0.5, 0.0);
                const double c =
                    concurrence(transmit_encoded(s, channel_params(eta), code_spec(n)));
                add({format_double(eta), std::to_string(n), format_double(c)});
            }
        break;
    }
    }
    return out;
}

} // namespace catsim
