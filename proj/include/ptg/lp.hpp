#pragma once

#include <optional>
#include <vector>

#include "ptg/hyperplane.hpp"
#include "ptg/linalg.hpp"
#include "ptg/rational.hpp"

namespace ptg {

enum class Rel { LT, LE, EQ, GE, GT };

struct IneqRow {
    Vec a;
    Rat b;
    Rel rel;
};

struct InequalitySystem {
    std::size_t dimension = 0;
    std::vector<IneqRow> rows;

    void add(Vec a, Rat b, Rel rel);
};

struct FeasibilityResult {
    bool feasible = false;
    Vec witness;  // length = dimension
    Rat slack;    // positive when strict rows exist; 1 when none constrain it

    explicit operator bool() const { return feasible; }
};

// Decides feasibility of a mixed strict/non-strict system exactly. Strict
// rows <a,x> < b are rewritten <a,x> + t <= b with the fresh slack t
// maximized subject to t <= 1; the system is strictly feasible iff the
// optimum is positive. Simplex pivoting uses Bland's rule throughout, so
// termination is unconditional under degeneracy.
FeasibilityResult feasible(const InequalitySystem& system);

// Hyperplane (u, alpha) with <a,u> < alpha < <b,u> for all a in A, b in B
// (strict mode), or with weak inequalities and a nonzero normal otherwise.
// nullopt iff no such hyperplane exists.
std::optional<OrientedHyperplane> separating_hyperplane(const std::vector<Vec>& a_side,
                                                        const std::vector<Vec>& b_side,
                                                        bool strict);

}  // namespace ptg
