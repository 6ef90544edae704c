#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Base class for all solver-side failures (as opposed to precondition
/// violations, which throw std::invalid_argument).
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

class no_convergence_error : public solver_error {
public:
    no_convergence_error(const std::string& msg, double final_residual, int iterations)
        : solver_error(msg), final_residual(final_residual), iterations(iterations) {}
    double final_residual;
    int iterations;
};

class singular_matrix_error : public solver_error {
public:
    explicit singular_matrix_error(const std::string& msg) : solver_error(msg) {}
};

class nonpositive_solution_error : public solver_error {
public:
    explicit nonpositive_solution_error(const std::string& msg) : solver_error(msg) {}
};

class ladder_not_converged_error : public solver_error {
public:
    ladder_not_converged_error(const std::string& msg, double last_increment)
        : solver_error(msg), last_increment(last_increment) {}
    double last_increment;
};

/// A monotone scheme produced an ordering violation; this signals a scheme
/// bug and the computation must abort rather than continue.
class monotonicity_violation_error : public solver_error {
public:
    monotonicity_violation_error(const std::string& msg, double violation)
        : solver_error(msg), violation(violation) {}
    double violation;
};

class exhaustion_not_nested_error : public std::invalid_argument {
public:
    explicit exhaustion_not_nested_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class negative_boundary_data_error : public solver_error {
public:
    explicit negative_boundary_data_error(const std::string& msg) : solver_error(msg) {}
};

class blowup_overflow_error : public solver_error {
public:
    explicit blowup_overflow_error(const std::string& msg) : solver_error(msg) {}
};

class grid_misalignment_error : public std::invalid_argument {
public:
    explicit grid_misalignment_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class snapshot_mismatch_error : public std::invalid_argument {
public:
    explicit snapshot_mismatch_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class band_violation_error : public solver_error {
public:
    explicit band_violation_error(const std::string& msg) : solver_error(msg) {}
};

class insufficient_nodes_error : public std::invalid_argument {
public:
    explicit insufficient_nodes_error(const std::string& msg) : std::invalid_argument(msg) {}
};

class underflow_tail_error : public solver_error {
public:
    explicit underflow_tail_error(const std::string& msg) : solver_error(msg) {}
};

class profile_range_error : public std::out_of_range {
public:
    explicit profile_range_error(const std::string& msg) : std::out_of_range(msg) {}
};

class unknown_suite_error : public std::invalid_argument {
public:
    explicit unknown_suite_error(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace blowup
