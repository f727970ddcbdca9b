#pragma once

// 0-1 integer programming model of the problem, built for export to an
// external solver in LP text format.
//
// Variables: y_i_j (i before j, i != j), z_j (job j deteriorated), s_j (start),
// T_j (tardiness). The step p_j = a_j or a_j + b_j is linearized as
// p_j = a_j + b_j z_j with s_j - h_j <= M z_j. Only that direction is needed:
// z_j = 1 can only lengthen the schedule and the objective is regular, so an
// optimal point never sets z_j = 1 without cause.

#include <cstddef>
#include <string>
#include <vector>

#include "stepsched/schedule.hpp"

namespace stepsched::milp {

enum class VarKind { binary, continuous };
enum class Sense { less_equal, equal, greater_equal };

struct Variable {
    std::string name;
    VarKind kind = VarKind::continuous;
};

struct Term {
    std::size_t var = 0;
    Time coef = 0;
};

struct Constraint {
    std::string name;
    std::vector<Term> terms;
    Sense sense = Sense::less_equal;
    Time rhs = 0;
};

enum class ConstraintFamily { pairing, ordering, step, tardiness };

struct Model {
    std::size_t n = 0;
    Time big_m = 0;
    std::vector<Variable> variables;
    std::vector<Term> objective;  // minimized
    std::vector<Constraint> constraints;

    // Variable index lookup; jobs are 1-based.
    std::size_t y(JobId i, JobId j) const;
    std::size_t z(JobId j) const;
    std::size_t s(JobId j) const;
    std::size_t t(JobId j) const;

    std::size_t count(VarKind kind) const;
    std::size_t count(ConstraintFamily family) const;
};

/// max_j d_j + sum_j (a_j + b_j).
Time big_m(const Instance& instance);

/// Throws InvalidInstance for invalid input.
Model build_model(const Instance& instance);

/// Deterministic LP-format text (Minimize / Subject To / Bounds / Binaries / End).
std::string export_lp(const Model& model);

/// Integer assignment for every variable in model order.
using Assignment = std::vector<Time>;

/// The point induced by a no-idle schedule: y from the order, z_j = [s_j > h_j],
/// s and T from the evaluator.
Assignment assignment_from_schedule(const Model& model, const ScheduleResult& schedule);

struct Feasibility {
    std::vector<std::string> violated;  // constraint or bound names
    Time objective = 0;
    bool feasible() const { return violated.empty(); }
};

Feasibility check_assignment(const Model& model, const Assignment& values);

}  // namespace stepsched::milp
