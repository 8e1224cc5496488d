#pragma once

// Random small databases and an inventory oracle that never touches the
// library's assembly or solver.

#include "mlca/lci.hpp"
#include "mlca/methods.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace mlca::testing {

struct RandomDb
{
    std::size_t n = 0; // products, one process each
    std::size_t m = 0; // elementary flows
    std::vector<double> ref;                 // reference amounts
    std::vector<std::vector<double>> input;  // input[i][j]: product i consumed by process j (negative = avoided)
    std::vector<std::vector<double>> emit;   // emit[r][j]
    std::vector<bool> resource;              // per elementary flow
    BackgroundDatabase db;

    std::string product(std::size_t i) const { return "p" + std::to_string(i); }
    std::string elementary(std::size_t r) const { return "e" + std::to_string(r); }
};

inline RandomDb make_random_db(std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::size_t> n_dist(2, 9);
    std::uniform_int_distribution<std::size_t> m_dist(1, 5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    RandomDb r;
    r.n = n_dist(rng);
    r.m = m_dist(rng);
    r.ref.resize(r.n);
    r.input.assign(r.n, std::vector<double>(r.n, 0.0));
    r.emit.assign(r.m, std::vector<double>(r.n, 0.0));
    r.resource.resize(r.m);

    std::vector<Flow> flows;
    for (std::size_t i = 0; i < r.n; ++i) {
        flows.push_back({r.product(i), FlowKind::Product, "product " + std::to_string(i), "kg", ""});
    }
    for (std::size_t k = 0; k < r.m; ++k) {
        r.resource[k] = u01(rng) < 0.3;
        flows.push_back({r.elementary(k), FlowKind::Elementary, "flow " + std::to_string(k), "kg",
                         r.resource[k] ? "natural resource/in ground" : "air"});
    }

    std::vector<UnitProcess> procs;
    for (std::size_t j = 0; j < r.n; ++j) {
        UnitProcess p;
        p.id = "proc" + std::to_string(j);
        p.name = p.id;
        p.reference_product = r.product(j);
        r.ref[j] = 0.5 + 1.5 * u01(rng);
        p.reference_amount = r.ref[j];
        // column sum of |inputs| kept under 0.4 so the Jacobi iteration contracts
        double budget = 0.4 * u01(rng);
        for (std::size_t i = 0; i < r.n; ++i) {
            if (i == j || u01(rng) < 0.4) {
                continue;
            }
            double a = budget * u01(rng);
            budget -= a;
            if (u01(rng) < 0.15) {
                a = -a;
            }
            r.input[i][j] = a;
            p.exchanges.push_back({r.product(i), a, "kg", Direction::Input});
        }
        for (std::size_t k = 0; k < r.m; ++k) {
            if (u01(rng) < 0.3) {
                continue;
            }
            const double e = 0.01 + 2.0 * u01(rng);
            r.emit[k][j] = e;
            p.exchanges.push_back({r.elementary(k), e, "kg", r.resource[k] ? Direction::Input : Direction::Output});
        }
        procs.push_back(std::move(p));
    }
    r.db = BackgroundDatabase(std::move(flows), std::move(procs));
    return r;
}

// s = D^-1 (f + T s) iterated to a fixed point: the Neumann series of D^-1 T.
inline std::vector<double> neumann_scaling(const RandomDb& r, const std::vector<double>& f)
{
    std::vector<double> s(r.n, 0.0);
    for (int it = 0; it < 5000; ++it) {
        std::vector<double> next(r.n, 0.0);
        double delta = 0.0;
        double size = 0.0;
        for (std::size_t i = 0; i < r.n; ++i) {
            double v = f[i];
            for (std::size_t j = 0; j < r.n; ++j) {
                v += r.input[i][j] * s[j];
            }
            next[i] = v / r.ref[i];
            delta = std::max(delta, std::abs(next[i] - s[i]));
            size = std::max(size, std::abs(next[i]));
        }
        s = std::move(next);
        if (delta <= 1e-16 * std::max(1.0, size)) {
            break;
        }
    }
    return s;
}

inline std::vector<double> oracle_inventory(const RandomDb& r, const std::vector<double>& s)
{
    std::vector<double> g(r.m, 0.0);
    for (std::size_t k = 0; k < r.m; ++k) {
        for (std::size_t j = 0; j < r.n; ++j) {
            g[k] += r.emit[k][j] * s[j];
        }
    }
    return g;
}

inline double rel_err(double expected, double actual, double floor = 1e-300)
{
    return std::abs(actual - expected) / std::max(std::abs(expected), floor);
}

} // namespace mlca::testing
