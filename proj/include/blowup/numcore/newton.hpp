#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "blowup/errors.hpp"
#include "blowup/numcore/linalg.hpp"

namespace blowup::numcore {

struct NewtonConfig {
    int max_iterations = 50;
    double residual_tolerance = 1e-10;
    double damping_floor = 1e-4;  // in (0,1]

    void validate() const {
        if (max_iterations < 1) throw std::invalid_argument("NewtonConfig: max_iterations < 1");
        if (!(residual_tolerance > 0.0))
            throw std::invalid_argument("NewtonConfig: residual_tolerance must be > 0");
        if (!(damping_floor > 0.0) || damping_floor > 1.0)
            throw std::invalid_argument("NewtonConfig: damping_floor must be in (0,1]");
    }
};

struct NewtonResult {
    std::vector<double> state;
    int iterations = 0;
    double residual_norm = 0.0;
};

inline double max_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

namespace detail {
inline std::vector<double> linear_solve(const Tridiagonal& j, const std::vector<double>& rhs) {
    return solve_tridiagonal(j, rhs);
}
inline std::vector<double> linear_solve(const Banded& j, const std::vector<double>& rhs) {
    return solve_banded(j, rhs);
}
}  // namespace detail

/// Damped Newton iteration on a vector state.
///
/// residual(state) -> vector, jacobian(state) -> Tridiagonal or Banded.
/// The step is halved while the residual max-norm does not decrease (or the
/// trial state fails `accept`); the iteration fails when the damping factor
/// drops below cfg.damping_floor. Returns a state with residual max-norm
/// <= cfg.residual_tolerance.
template <class Residual, class Jacobian, class Accept>
NewtonResult newton_solve(Residual&& residual, Jacobian&& jacobian, std::vector<double> initial,
                          const NewtonConfig& cfg, Accept&& accept) {
    cfg.validate();
    std::vector<double> f = residual(initial);
    double norm = max_norm(f);
    if (norm <= cfg.residual_tolerance) return {std::move(initial), 0, norm};

    bool positivity_failed = false;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        auto jac = jacobian(initial);
        std::vector<double> rhs(f.size());
        for (size_t i = 0; i < f.size(); ++i) rhs[i] = -f[i];
        std::vector<double> step = detail::linear_solve(jac, rhs);

        double s = 1.0;
        std::vector<double> trial(initial.size());
        std::vector<double> f_trial;
        double norm_trial = std::numeric_limits<double>::infinity();
        bool accepted = false;
        while (s >= cfg.damping_floor) {
            for (size_t i = 0; i < initial.size(); ++i) trial[i] = initial[i] + s * step[i];
            if (!accept(trial)) {
                positivity_failed = true;
                s *= 0.5;
                continue;
            }
            f_trial = residual(trial);
            norm_trial = max_norm(f_trial);
            // NaN-safe: only a strict decrease is accepted.
            if (norm_trial < norm) {
                accepted = true;
                positivity_failed = false;
                break;
            }
            s *= 0.5;
        }
        if (!accepted) {
            if (positivity_failed)
                throw nonpositive_solution_error(
                    "newton_solve: damping exhausted against the positivity guard");
            throw no_convergence_error("newton_solve: damping exhausted, residual " +
                                           std::to_string(norm),
                                       norm, it);
        }
        initial.swap(trial);
        f.swap(f_trial);
        norm = norm_trial;
        if (norm <= cfg.residual_tolerance) return {std::move(initial), it, norm};
    }
    throw no_convergence_error(
        "newton_solve: no convergence after " + std::to_string(cfg.max_iterations) +
            " iterations, residual " + std::to_string(norm),
        norm, cfg.max_iterations);
}

template <class Residual, class Jacobian>
NewtonResult newton_solve(Residual&& residual, Jacobian&& jacobian, std::vector<double> initial,
                          const NewtonConfig& cfg) {
    return newton_solve(std::forward<Residual>(residual), std::forward<Jacobian>(jacobian),
                        std::move(initial), cfg, [](const std::vector<double>&) { return true; });
}

}  // namespace blowup::numcore
