// Copyright 2026 The netbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netbell/quantum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace netbell {

namespace {

constexpr double kAngleFloor = 1e-9;
constexpr double kAngleCeiling = kPi / 2 - 1e-9;

double clamp_angle(double t) {
    return std::clamp(t, kAngleFloor, kAngleCeiling);
}

/// d term_power(x) / dx; zero where the derivative is unbounded (x = 0, r < 1).
double power_derivative(double x, const Exponent &r, bool absolute) {
    double sign = (absolute && x < 0) ? -1 : 1;
    if (r.is_one()) {
        return sign;
    }
    if (x == 0) {
        return 0;
    }
    return sign * r.value() * std::pow(std::abs(x), r.value() - 1);
}

double norm(const std::vector<double> &v) {
    double s = 0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

/// Maximizes along angle `a`: best of a uniform grid, then bisection on the derivative
/// inside the bracketing grid cell (golden section when the derivative has no sign change).
void line_maximize(const Evaluator &ev, AngleAssignment &angles, std::size_t a, std::size_t grid_points) {
    double width = (kPi / 2) / static_cast<double>(grid_points);
    double best_theta = angles.theta[a];
    double best = ev.value(angles);
    AngleAssignment trial = angles;
    for (std::size_t k = 0; k < grid_points; k++) {
        trial.theta[a] = (static_cast<double>(k) + 0.5) * width;
        double v = ev.value(trial);
        if (v > best) {
            best = v;
            best_theta = trial.theta[a];
        }
    }
    double lo = clamp_angle(best_theta - width);
    double hi = clamp_angle(best_theta + width);
    auto derivative = [&](double t) {
        trial.theta[a] = t;
        return ev.gradient(trial)[a];
    };
    double dlo = derivative(lo);
    double dhi = derivative(hi);
    double refined = best_theta;
    if (dlo > 0 && dhi < 0) {
        for (int it = 0; it < 200 && hi - lo > 1e-16; it++) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (derivative(mid) > 0 ? lo : hi) = mid;
        }
        refined = 0.5 * (lo + hi);
    } else {
        const double g = (std::sqrt(5.0) - 1) / 2;
        auto value_at = [&](double t) {
            trial.theta[a] = t;
            return ev.value(trial);
        };
        double c = hi - g * (hi - lo);
        double d = lo + g * (hi - lo);
        double fc = value_at(c);
        double fd = value_at(d);
        for (int it = 0; it < 200 && hi - lo > 1e-15; it++) {
            if (fc > fd) {
                hi = d;
                d = c;
                fd = fc;
                c = hi - g * (hi - lo);
                fc = value_at(c);
            } else {
                lo = c;
                c = d;
                fc = fd;
                d = lo + g * (hi - lo);
                fd = value_at(d);
            }
        }
        refined = 0.5 * (lo + hi);
    }
    trial.theta[a] = refined;
    if (ev.value(trial) >= best) {
        angles.theta[a] = refined;
    } else {
        angles.theta[a] = best_theta;
    }
}

OptimizeResult coordinate_descent(const Evaluator &ev, AngleAssignment angles, const OptimizeOptions &options) {
    OptimizeResult result;
    double previous = -std::numeric_limits<double>::infinity();
    for (result.sweeps = 1; result.sweeps <= options.max_sweeps; result.sweeps++) {
        for (std::size_t a = 0; a < angles.theta.size(); a++) {
            line_maximize(ev, angles, a, options.grid_points);
        }
        double value = ev.value(angles);
        double g = norm(ev.gradient(angles));
        if (g < options.gradient_tolerance || value <= previous) {
            break;
        }
        previous = value;
    }
    result.sweeps = std::min(result.sweeps, options.max_sweeps);
    result.value = ev.value(angles);
    result.gradient_norm = norm(ev.gradient(angles));
    result.angles = std::move(angles);
    return result;
}

AngleAssignment nelder_mead(const Evaluator &ev, AngleAssignment start) {
    std::size_t d = start.theta.size();
    auto f = [&](std::vector<double> x) {
        for (double &t : x) {
            t = clamp_angle(t);
        }
        return -ev.value({x});
    };
    std::vector<std::vector<double>> simplex(d + 1, start.theta);
    for (std::size_t i = 0; i < d; i++) {
        simplex[i + 1][i] += 0.1;
    }
    std::vector<double> fv(d + 1);
    for (std::size_t i = 0; i <= d; i++) {
        fv[i] = f(simplex[i]);
    }
    for (int it = 0; it < 2000; it++) {
        std::vector<std::size_t> order(d + 1);
        for (std::size_t i = 0; i <= d; i++) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> f2;
        for (std::size_t i : order) {
            s2.push_back(simplex[i]);
            f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
        if (fv[d] - fv[0] < 1e-14) {
            break;
        }
        std::vector<double> centroid(d, 0);
        for (std::size_t i = 0; i < d; i++) {
            for (std::size_t k = 0; k < d; k++) {
                centroid[k] += simplex[i][k] / static_cast<double>(d);
            }
        }
        auto along = [&](double c) {
            std::vector<double> x(d);
            for (std::size_t k = 0; k < d; k++) {
                x[k] = centroid[k] + c * (simplex[d][k] - centroid[k]);
            }
            return x;
        };
        auto reflected = along(-1);
        double fr = f(reflected);
        if (fr < fv[0]) {
            auto expanded = along(-2);
            double fe = f(expanded);
            if (fe < fr) {
                simplex[d] = expanded;
                fv[d] = fe;
            } else {
                simplex[d] = reflected;
                fv[d] = fr;
            }
        } else if (fr < fv[d - 1]) {
            simplex[d] = reflected;
            fv[d] = fr;
        } else {
            auto contracted = along(0.5);
            double fc = f(contracted);
            if (fc < fv[d]) {
                simplex[d] = contracted;
                fv[d] = fc;
            } else {
                for (std::size_t i = 1; i <= d; i++) {
                    for (std::size_t k = 0; k < d; k++) {
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    }
                    fv[i] = f(simplex[i]);
                }
            }
        }
    }
    AngleAssignment out{simplex[0]};
    for (double &t : out.theta) {
        t = clamp_angle(t);
    }
    return out;
}

}  // namespace

Evaluator::Evaluator(const InequalityExpr &ineq, const QuantumState &state)
    : ineq_(ineq), n_angles_(ineq.angle_slots.size()) {
    if (n_qubits(state) != ineq.topology.n_qubits) {
        throw std::invalid_argument("state has " + std::to_string(n_qubits(state)) + " qubits but " + ineq.name +
                                    " needs " + std::to_string(ineq.topology.n_qubits));
    }
    for (std::size_t t = 0; t < ineq.terms.size(); t++) {
        ops_.push_back(segmented_operator(ineq, t));
        expectations_.push_back(expectation(state, ops_.back().pauli));
    }
}

std::vector<double> Evaluator::correlators(const AngleAssignment &angles) const {
    angles.validate(n_angles_);
    std::vector<double> out;
    for (std::size_t t = 0; t < ops_.size(); t++) {
        out.push_back(ops_[t].coefficient(angles) * expectations_[t]);
    }
    return out;
}

double Evaluator::value(const AngleAssignment &angles) const {
    std::vector<double> c = correlators(angles);
    double total = 0;
    for (std::size_t t = 0; t < c.size(); t++) {
        total += ineq_.terms[t].coefficient * term_power(c[t], ineq_.exponent, ineq_.absolute_terms);
    }
    return ineq_.scale * total;
}

std::vector<double> Evaluator::gradient(const AngleAssignment &angles) const {
    angles.validate(n_angles_);
    std::vector<double> g(n_angles_, 0);
    for (std::size_t t = 0; t < ops_.size(); t++) {
        if (expectations_[t] == 0) {
            continue;
        }
        const auto &factors = ops_[t].factors;
        double x = ops_[t].coefficient(angles) * expectations_[t];
        double outer = ineq_.scale * ineq_.terms[t].coefficient * power_derivative(x, ineq_.exponent, ineq_.absolute_terms);
        for (std::size_t k = 0; k < factors.size(); k++) {
            // Product rule: differentiate factor k, keep the others.
            double d = expectations_[t];
            for (std::size_t j = 0; j < factors.size(); j++) {
                double theta = angles.theta[factors[j].angle_slot];
                if (j == k) {
                    d *= factors[j].sine ? std::cos(theta) : -std::sin(theta);
                } else {
                    d *= factors[j].sine ? std::sin(theta) : std::cos(theta);
                }
            }
            g[factors[k].angle_slot] += outer * d;
        }
    }
    return g;
}

double evaluate(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles) {
    return Evaluator(ineq, state).value(angles);
}

std::vector<double> gradient(const InequalityExpr &ineq, const QuantumState &state, const AngleAssignment &angles) {
    return Evaluator(ineq, state).gradient(angles);
}

OptimizeResult optimize_angles(const InequalityExpr &ineq, const QuantumState &state, const OptimizeOptions &options) {
    Evaluator ev(ineq, state);
    std::size_t d = ev.n_angles();
    OptimizeResult best = coordinate_descent(ev, AngleAssignment::uniform(d, kQuarterPi / 2), options);
    if (options.starts == 0 || d == 0) {
        return best;
    }
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> angle(0.05, kPi / 2 - 0.05);
    std::vector<AngleAssignment> starts;
    for (std::size_t s = 0; s < options.starts; s++) {
        AngleAssignment a{std::vector<double>(d)};
        for (double &t : a.theta) {
            t = angle(rng);
        }
        starts.push_back(std::move(a));
    }
    std::vector<OptimizeResult> results(starts.size());
    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t s = begin; s < starts.size(); s += stride) {
            results[s] = coordinate_descent(ev, nelder_mead(ev, starts[s]), options);
        }
    };
    std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, starts.size()));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; i++) {
        pool.emplace_back(run, i, threads);
    }
    run(0, threads);
    for (auto &th : pool) {
        th.join();
    }
    // Merge in start order so the result does not depend on scheduling.
    for (auto &r : results) {
        if (r.value > best.value) {
            best = std::move(r);
        }
    }
    return best;
}

ClaimCheck claimed_max_check(const InequalityExpr &ineq, const QuantumState &state, double tolerance,
                             const OptimizeOptions &options) {
    ClaimCheck c;
    c.optimum = optimize_angles(ineq, state, options);
    c.claimed = ineq.claimed_quantum_max;
    c.difference = c.optimum.value - c.claimed;
    c.pass = std::abs(c.difference) <= tolerance;
    return c;
}

double f_theta(double t, double theta) {
    return std::pow(std::cos(theta), t) + std::pow(std::sin(theta), t);
}

double f_theta_max(double t) {
    if (!(t > 0 && t < 2)) {
        throw std::invalid_argument("f_theta_max needs 0 < t < 2");
    }
    return std::pow(2.0, 1 - t / 2);
}

GridMax f_theta_grid_max(double t, std::size_t points) {
    if (!(t > 0 && t < 2)) {
        throw std::invalid_argument("f_theta_grid_max needs 0 < t < 2");
    }
    GridMax best{-1, 0};
    for (std::size_t k = 1; k < points; k++) {
        double theta = (kPi / 2) * static_cast<double>(k) / static_cast<double>(points);
        double v = f_theta(t, theta);
        if (v > best.value) {
            best = {v, theta};
        }
    }
    return best;
}

MahlerResult mahler_check(const std::vector<double> &alpha, const std::vector<double> &beta) {
    if (alpha.empty() || alpha.size() != beta.size()) {
        throw std::invalid_argument("mahler_check needs two nonempty vectors of equal length");
    }
    double k = static_cast<double>(alpha.size());
    double pa = 1;
    double pb = 1;
    double ps = 1;
    for (std::size_t i = 0; i < alpha.size(); i++) {
        if (alpha[i] < 0 || beta[i] < 0) {
            throw std::invalid_argument("mahler_check needs nonnegative entries");
        }
        pa *= std::pow(alpha[i], 1 / k);
        pb *= std::pow(beta[i], 1 / k);
        ps *= std::pow(alpha[i] + beta[i], 1 / k);
    }
    // Equality holds exactly when alpha and beta are proportional.
    bool proportional = true;
    for (std::size_t i = 0; i < alpha.size(); i++) {
        for (std::size_t j = i + 1; j < alpha.size(); j++) {
            double cross = alpha[i] * beta[j] - alpha[j] * beta[i];
            double scale = std::max({1e-300, alpha[i] * beta[j], alpha[j] * beta[i]});
            proportional = proportional && std::abs(cross) <= 1e-12 * scale;
        }
    }
    MahlerResult r{pa + pb, ps, false, proportional};
    r.holds = r.lhs <= r.rhs + 1e-12 * std::max(1.0, r.rhs);
    return r;
}

}  // namespace netbell
