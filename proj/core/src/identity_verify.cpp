// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "gfpkit/identity/verify.hpp"

#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "gfpkit/errors.hpp"

namespace gfpkit {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::not_applicable:
            return "not_applicable";
    }
    return "?";
}

namespace {

// Occurrences of `v` in the expression, flagging any occurrence nested
// under a multiplication (where the slope would depend on the cofactor).
void count_var(const IndexExpr& e, const std::string& v, bool under_mul, int& count,
               bool& scaled) {
    if (e.kind() == IndexExpr::Kind::Variable) {
        if (e.variable_name() == v) {
            ++count;
            if (under_mul) scaled = true;
        }
        return;
    }
    const bool inner = under_mul || e.kind() == IndexExpr::Kind::Mul;
    for (const IndexExpr& k : e.kids()) count_var(k, v, inner, count, scaled);
}

// `v` enters lhs - rhs with slope exactly +-1 for every assignment of the
// other variables: it occurs once, outside any product.
bool unit_linear_in(const Constraint& c, const std::string& v) {
    int count = 0;
    bool scaled = false;
    count_var(c.lhs, v, false, count, scaled);
    count_var(c.rhs, v, false, count, scaled);
    return count == 1 && !scaled;
}

// Picks, for each equality constraint, a variable to solve for instead of
// enumerating: it must be free (not chosen for another equality) and enter
// the constraint unit-linearly, so the solved value is always exact.
// Equalities with no such variable stay ordinary filters over the
// enumerated grid. Returns constraint index -> variable.
std::map<std::size_t, std::string> plan_equalities(const IdentityDef& def) {
    std::map<std::size_t, std::string> plan;
    std::set<std::string> taken;
    for (std::size_t ci = 0; ci < def.constraints.size(); ++ci) {
        const Constraint& c = def.constraints[ci];
        if (c.rel != Constraint::Rel::Eq) continue;
        // Prefer the last declared variable, so the solved one is the least
        // surprising when reading the file.
        for (auto it = def.vars.rbegin(); it != def.vars.rend(); ++it) {
            if (taken.contains(*it) || !unit_linear_in(c, *it)) continue;
            plan[ci] = *it;
            taken.insert(*it);
            break;
        }
    }
    return plan;
}

std::int64_t eval_diff(const Constraint& c, const Assignment& a) {
    return c.lhs.eval(a) - c.rhs.eval(a);
}

struct Grid {
    std::vector<std::string> enumerated;                  // loop variables, in vars order
    std::vector<std::pair<std::int64_t, std::int64_t>> bounds;  // parallel to enumerated
    std::vector<std::pair<std::size_t, std::string>> solved;    // (constraint idx, var)
};

Grid build_grid(const IdentityDef& def, std::int64_t grid_bound) {
    Grid grid;
    auto plan = plan_equalities(def);
    std::set<std::string> solved_vars;
    for (const auto& [ci, var] : plan) {
        grid.solved.emplace_back(ci, var);
        solved_vars.insert(var);
    }
    for (const std::string& v : def.vars) {
        if (solved_vars.contains(v)) continue;
        auto it = def.ranges.find(v);
        if (it != def.ranges.end())
            grid.bounds.emplace_back(it->second.lo, it->second.hi);
        else
            grid.bounds.emplace_back(0, grid_bound);
        grid.enumerated.push_back(v);
    }
    return grid;
}

// Solves constraint ci for `var` given the other variables: the difference
// lhs - rhs must be affine in var with slope +-1. Returns false when no
// admissible integer value exists.
bool solve_equality(const Constraint& c, const std::string& var, Assignment& a,
                    const IdentityDef& def, std::int64_t grid_bound) {
    a[var] = 0;
    const std::int64_t at0 = eval_diff(c, a);
    a[var] = 1;
    const std::int64_t at1 = eval_diff(c, a);
    const std::int64_t slope = at1 - at0;
    if (slope != 1 && slope != -1) return false;
    const std::int64_t value = -at0 / slope;
    a[var] = value;
    if (eval_diff(c, a) != 0) return false;  // not affine in var after all
    std::int64_t lo = 0, hi = grid_bound;
    if (auto it = def.ranges.find(var); it != def.ranges.end()) {
        lo = it->second.lo;
        hi = it->second.hi;
    }
    return value >= lo && value <= hi;
}

}  // namespace

VerificationReport verify_identity(const IdentityDef& def, const FamilyPair& pair,
                                   std::int64_t grid_bound) {
    PairContext ctx(pair);
    return verify_identity(def, ctx, grid_bound);
}

VerificationReport verify_identity(const IdentityDef& def, PairContext& ctx,
                                   std::int64_t grid_bound) {
    VerificationReport report{def.id, ctx.label(), 0, Status::not_applicable, std::nullopt};

    const Grid grid = build_grid(def, grid_bound);
    Assignment assignment;
    assignment["alpha"] = ctx.alpha();

    // Depth-first enumeration of the index grid in declaration order.
    std::vector<std::int64_t> cursor(grid.enumerated.size());
    bool aborted = false;

    auto check_tuple = [&](Assignment& a) {
        for (const Constraint& c : def.constraints)
            if (!c.holds(a)) return;
        std::pair<Expr, Expr> ground;
        try {
            ground = instantiate(def, a);
        } catch (const NegativeSubscript&) {
            // Nonnegative subscripts are an implicit admissibility constraint.
            return;
        }
        QuadElem lhs = ctx.scalar(Poly());
        QuadElem rhs = ctx.scalar(Poly());
        try {
            lhs = eval_expr(ground.first, ctx);
            rhs = eval_expr(ground.second, ctx);
        } catch (const NotASquare&) {
            return;  // inconclusive tuple; never counts as a failure
        }
        ++report.tuples_checked;
        if (lhs != rhs) {
            Assignment shown(a);
            shown.erase("alpha");
            report.status = Status::fail;
            report.counterexample = Counterexample{std::move(shown), std::move(lhs), std::move(rhs)};
            aborted = true;
        }
    };

    auto descend = [&](auto&& self, std::size_t depth) -> void {
        if (aborted) return;
        if (depth == grid.enumerated.size()) {
            // Fill in the solved variables from the equality constraints. A
            // solve can reference a variable only provided by a later
            // equality; such tuples are unsupported and simply skipped.
            bool solved_all = true;
            for (const auto& [ci, var] : grid.solved) {
                try {
                    solved_all = solve_equality(def.constraints[ci], var, assignment, def,
                                                grid_bound);
                } catch (const UnboundVariable&) {
                    solved_all = false;
                }
                if (!solved_all) break;
            }
            if (solved_all) check_tuple(assignment);
            for (const auto& [cj, w] : grid.solved) assignment.erase(w);
            return;
        }
        const auto [lo, hi] = grid.bounds[depth];
        for (std::int64_t v = lo; v <= hi && !aborted; ++v) {
            assignment[grid.enumerated[depth]] = v;
            self(self, depth + 1);
        }
        assignment.erase(grid.enumerated[depth]);
    };
    descend(descend, 0);

    if (report.status != Status::fail)
        report.status = report.tuples_checked > 0 ? Status::pass : Status::not_applicable;
    return report;
}

std::vector<VerificationReport> verify_corpus(const std::vector<IdentityDef>& corpus,
                                              const std::vector<FamilyPair>& pairs,
                                              std::int64_t grid_bound, int jobs) {
    struct Task {
        const IdentityDef* def;
        const FamilyPair* pair;
    };
    std::vector<Task> tasks;
    tasks.reserve(corpus.size() * pairs.size());
    for (const IdentityDef& def : corpus)
        for (const FamilyPair& pair : pairs) tasks.push_back({&def, &pair});

    std::vector<VerificationReport> reports(tasks.size());
    if (jobs < 1) jobs = 1;

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        // Worker-local contexts: sequence caches are single-writer and are
        // reused across every identity this worker picks up.
        std::map<std::string, PairContext> contexts;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            auto it = contexts.find(tasks[i].pair->label);
            if (it == contexts.end())
                it = contexts.emplace(tasks[i].pair->label, PairContext(*tasks[i].pair)).first;
            reports[i] = verify_identity(*tasks[i].def, it->second, grid_bound);
        }
    };
    if (jobs == 1) {
        worker();
        return reports;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    return reports;
}

}  // namespace gfpkit
