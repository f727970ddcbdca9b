#include "stepsched/milp.hpp"

#include <algorithm>
#include <sstream>

namespace stepsched::milp {

namespace {

// Layout: y variables first (row-major over i != j), then z, s, T blocks.
std::size_t y_index(std::size_t n, JobId i, JobId j) {
    const auto row = static_cast<std::size_t>(i - 1);
    const auto col = static_cast<std::size_t>(j - 1);
    return row * (n - 1) + (col < row ? col : col - 1);
}

std::string family_prefix(ConstraintFamily f) {
    switch (f) {
        case ConstraintFamily::pairing: return "pair_";
        case ConstraintFamily::ordering: return "order_";
        case ConstraintFamily::step: return "step_";
        case ConstraintFamily::tardiness: return "tard_";
    }
    return {};
}

void write_linear(std::ostream& out, const Model& model, const std::vector<Term>& terms) {
    bool first = true;
    for (const Term& term : terms) {
        if (term.coef == 0) continue;
        const Time mag = term.coef < 0 ? -term.coef : term.coef;
        if (first) out << (term.coef < 0 ? "- " : "");
        else out << (term.coef < 0 ? " - " : " + ");
        if (mag != 1) out << mag << ' ';
        out << model.variables[term.var].name;
        first = false;
    }
    if (first) out << "0";
}

}  // namespace

std::size_t Model::y(JobId i, JobId j) const { return y_index(n, i, j); }
std::size_t Model::z(JobId j) const { return n * (n - 1) + static_cast<std::size_t>(j - 1); }
std::size_t Model::s(JobId j) const { return n * n + static_cast<std::size_t>(j - 1); }
std::size_t Model::t(JobId j) const { return n * n + n + static_cast<std::size_t>(j - 1); }

std::size_t Model::count(VarKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(variables.begin(), variables.end(), [&](const Variable& v) { return v.kind == kind; }));
}

std::size_t Model::count(ConstraintFamily family) const {
    const std::string prefix = family_prefix(family);
    return static_cast<std::size_t>(std::count_if(constraints.begin(), constraints.end(), [&](const Constraint& c) {
        return c.name.compare(0, prefix.size(), prefix) == 0;
    }));
}

Time big_m(const Instance& instance) {
    require_valid(instance);
    Time max_d = 0;
    Time work = 0;
    for (const Job& j : instance.jobs) {
        max_d = std::max(max_d, j.d);
        work += j.a + j.b;
    }
    return max_d + work;
}

Model build_model(const Instance& instance) {
    const Evaluator eval(instance);
    const std::size_t n = eval.size();
    const auto id = [](std::size_t k) { return static_cast<JobId>(k + 1); };

    Model m;
    m.n = n;
    m.big_m = big_m(instance);
    const Time M = m.big_m;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                m.variables.push_back({"y_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), VarKind::binary});
    for (std::size_t j = 0; j < n; ++j) m.variables.push_back({"z_" + std::to_string(j + 1), VarKind::binary});
    for (std::size_t j = 0; j < n; ++j) m.variables.push_back({"s_" + std::to_string(j + 1), VarKind::continuous});
    for (std::size_t j = 0; j < n; ++j) m.variables.push_back({"T_" + std::to_string(j + 1), VarKind::continuous});

    for (std::size_t j = 0; j < n; ++j) m.objective.push_back({m.t(id(j)), 1});

    // y_ij + y_ji = 1
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m.constraints.push_back({"pair_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                                     {{m.y(id(i), id(j)), 1}, {m.y(id(j), id(i)), 1}},
                                     Sense::equal,
                                     1});
        }
    }
    // s_i + a_i + b_i z_i <= s_j + M (1 - y_ij)
    for (std::size_t i = 0; i < n; ++i) {
        const Job& ji = eval.job(id(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            m.constraints.push_back({"order_" + std::to_string(i + 1) + "_" + std::to_string(j + 1),
                                     {{m.s(id(i)), 1}, {m.z(id(i)), ji.b}, {m.s(id(j)), -1}, {m.y(id(i), id(j)), M}},
                                     Sense::less_equal,
                                     M - ji.a});
        }
    }
    // s_j - h_j <= M z_j
    for (std::size_t j = 0; j < n; ++j) {
        m.constraints.push_back({"step_" + std::to_string(j + 1),
                                 {{m.s(id(j)), 1}, {m.z(id(j)), -M}},
                                 Sense::less_equal,
                                 eval.job(id(j)).h});
    }
    // s_j + a_j + b_j z_j - d_j <= T_j
    for (std::size_t j = 0; j < n; ++j) {
        const Job& jj = eval.job(id(j));
        m.constraints.push_back({"tard_" + std::to_string(j + 1),
                                 {{m.s(id(j)), 1}, {m.z(id(j)), jj.b}, {m.t(id(j)), -1}},
                                 Sense::less_equal,
                                 jj.d - jj.a});
    }
    return m;
}

std::string export_lp(const Model& model) {
    std::ostringstream out;
    out << "\\ single-machine total tardiness, step-deteriorating jobs\n";
    out << "\\ n = " << model.n << ", M = " << model.big_m << "\n";
    out << "Minimize\n obj: ";
    write_linear(out, model, model.objective);
    out << "\nSubject To\n";
    for (const Constraint& c : model.constraints) {
        out << ' ' << c.name << ": ";
        write_linear(out, model, c.terms);
        switch (c.sense) {
            case Sense::less_equal: out << " <= "; break;
            case Sense::equal: out << " = "; break;
            case Sense::greater_equal: out << " >= "; break;
        }
        out << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (const Variable& v : model.variables)
        if (v.kind == VarKind::continuous) out << ' ' << v.name << " >= 0\n";
    out << "Binaries\n";
    for (const Variable& v : model.variables)
        if (v.kind == VarKind::binary) out << ' ' << v.name << '\n';
    out << "End\n";
    return out.str();
}

Assignment assignment_from_schedule(const Model& model, const ScheduleResult& schedule) {
    const std::size_t n = model.n;
    Assignment values(model.variables.size(), 0);
    std::vector<std::size_t> position(n);
    for (std::size_t k = 0; k < n; ++k) position[static_cast<std::size_t>(schedule.sequence[k] - 1)] = k;
    for (std::size_t i = 0; i < n; ++i) {
        const auto ji = static_cast<JobId>(i + 1);
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) values[model.y(ji, static_cast<JobId>(j + 1))] = position[i] < position[j] ? 1 : 0;
        }
        values[model.z(ji)] = schedule.deteriorated[i] ? 1 : 0;
        values[model.s(ji)] = schedule.starts[i];
        values[model.t(ji)] = schedule.tardiness[i];
    }
    return values;
}

Feasibility check_assignment(const Model& model, const Assignment& values) {
    Feasibility f;
    for (std::size_t v = 0; v < model.variables.size(); ++v) {
        const Variable& var = model.variables[v];
        const Time x = values.at(v);
        if (var.kind == VarKind::binary ? (x != 0 && x != 1) : x < 0) f.violated.push_back(var.name);
    }
    for (const Constraint& c : model.constraints) {
        Time lhs = 0;
        for (const Term& t : c.terms) lhs += t.coef * values.at(t.var);
        const bool ok = c.sense == Sense::less_equal ? lhs <= c.rhs
                        : c.sense == Sense::equal    ? lhs == c.rhs
                                                     : lhs >= c.rhs;
        if (!ok) f.violated.push_back(c.name);
    }
    for (const Term& t : model.objective) f.objective += t.coef * values.at(t.var);
    return f;
}

}  // namespace stepsched::milp
