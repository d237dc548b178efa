#include "ptg/lp.hpp"

#include <algorithm>

#include "ptg/errors.hpp"

namespace ptg {

void InequalitySystem::add(Vec a, Rat b, Rel rel) {
    if (a.size() != dimension)
        throw usage_error("DimensionMismatch", "inequality row does not match system dimension");
    rows.push_back(IneqRow{std::move(a), std::move(b), rel});
}

namespace {

// Primal simplex on the full tableau. Maximizes c.y over {My = r, y >= 0}.
// Basic columns are kept as unit columns; reduced costs are recomputed per
// iteration, which is cheap at the scales this library targets.
class Tableau {
public:
    Tableau(Matrix m, Vec rhs) : t_(std::move(m)), rhs_(std::move(rhs)) {}

    std::size_t nrows() const { return t_.rows(); }
    std::size_t ncols() const { return t_.cols(); }

    void set_basis(std::vector<std::size_t> basis) { basis_ = std::move(basis); }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Vec& rhs() const { return rhs_; }

    void pivot(std::size_t row, std::size_t col) {
        const Rat inv = 1 / t_.at(row, col);
        for (std::size_t j = 0; j < ncols(); ++j) t_.at(row, j) *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < nrows(); ++i) {
            if (i == row || sgn(t_.at(i, col)) == 0) continue;
            const Rat f = t_.at(i, col);
            for (std::size_t j = 0; j < ncols(); ++j) t_.at(i, j) -= f * t_.at(row, j);
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    // Bland's rule: entering = lowest-index improving column, leaving =
    // lowest-index basic variable among the ratio-test minimizers.
    void maximize(const Vec& cost) {
        for (;;) {
            Vec dual(nrows());
            for (std::size_t i = 0; i < nrows(); ++i) dual[i] = cost[basis_[i]];

            std::size_t enter = ncols();
            for (std::size_t j = 0; j < ncols() && enter == ncols(); ++j) {
                Rat zbar = cost[j];
                for (std::size_t i = 0; i < nrows(); ++i) {
                    if (sgn(dual[i]) != 0) zbar -= dual[i] * t_.at(i, j);
                }
                if (sgn(zbar) > 0) enter = j;
            }
            if (enter == ncols()) return;  // optimal

            std::size_t leave = nrows();
            Rat best;
            for (std::size_t i = 0; i < nrows(); ++i) {
                if (sgn(t_.at(i, enter)) <= 0) continue;
                const Rat ratio = rhs_[i] / t_.at(i, enter);
                if (leave == nrows() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == nrows())
                throw internal_error("UnboundedLP", "objective unbounded despite cap row");
            pivot(leave, enter);
        }
    }

    Rat entry(std::size_t i, std::size_t j) const { return t_.at(i, j); }

private:
    Matrix t_;
    Vec rhs_;
    std::vector<std::size_t> basis_;
};

struct SimplexOutcome {
    bool feasible = false;
    Vec solution;
};

// Two-phase simplex for max c.y s.t. My = r, y >= 0.
SimplexOutcome simplex_max(const Matrix& m, const Vec& r, const Vec& c) {
    const std::size_t rows = m.rows();
    const std::size_t n = m.cols();

    // Phase 1 tableau with one artificial per row; rhs made nonnegative.
    Matrix t1(rows, n + rows);
    Vec rhs(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const bool neg = sgn(r[i]) < 0;
        for (std::size_t j = 0; j < n; ++j) t1.at(i, j) = neg ? -m.at(i, j) : m.at(i, j);
        rhs[i] = neg ? -r[i] : r[i];
        t1.at(i, n + i) = 1;
    }
    Tableau tab(std::move(t1), std::move(rhs));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;
    tab.set_basis(std::move(basis));

    Vec phase1_cost(n + rows);
    for (std::size_t j = n; j < n + rows; ++j) phase1_cost[j] = -1;
    tab.maximize(phase1_cost);

    Rat art_sum = 0;
    for (std::size_t i = 0; i < rows; ++i)
        if (tab.basis()[i] >= n) art_sum += tab.rhs()[i];
    if (sgn(art_sum) != 0) return {};

    // Drive leftover zero-valued artificials out of the basis.
    std::vector<bool> keep(rows, true);
    for (std::size_t i = 0; i < rows; ++i) {
        if (tab.basis()[i] < n) continue;
        std::size_t j = 0;
        while (j < n && sgn(tab.entry(i, j)) == 0) ++j;
        if (j < n)
            tab.pivot(i, j);
        else
            keep[i] = false;  // redundant row
    }

    // Rebuild without artificial columns and dropped rows.
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < rows; ++i)
        if (keep[i]) live.push_back(i);
    Matrix t2(live.size(), n);
    Vec rhs2(live.size());
    std::vector<std::size_t> basis2(live.size());
    for (std::size_t k = 0; k < live.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) t2.at(k, j) = tab.entry(live[k], j);
        rhs2[k] = tab.rhs()[live[k]];
        basis2[k] = tab.basis()[live[k]];
    }
    Tableau tab2(std::move(t2), std::move(rhs2));
    tab2.set_basis(std::move(basis2));
    tab2.maximize(c);

    Vec y(n);
    for (std::size_t i = 0; i < tab2.nrows(); ++i) y[tab2.basis()[i]] = tab2.rhs()[i];
    return {true, std::move(y)};
}

}  // namespace

FeasibilityResult feasible(const InequalitySystem& system) {
    const std::size_t d = system.dimension;

    // Variables: x+ (d), x- (d), t (1), then one slack per <= row.
    const std::size_t t_col = 2 * d;
    bool has_strict = false;
    struct NormRow {
        Vec a;       // over x
        Rat t_coeff; // 0 or 1
        Rat b;
        bool eq;
    };
    std::vector<NormRow> norm;
    norm.reserve(system.rows.size() + 1);
    for (const IneqRow& row : system.rows) {
        if (row.a.size() != d)
            throw usage_error("DimensionMismatch", "inequality row does not match system dimension");
        switch (row.rel) {
            case Rel::LT:
                has_strict = true;
                norm.push_back({row.a, 1, row.b, false});
                break;
            case Rel::LE:
                norm.push_back({row.a, 0, row.b, false});
                break;
            case Rel::EQ:
                norm.push_back({row.a, 0, row.b, true});
                break;
            case Rel::GE:
                norm.push_back({vec_scale(row.a, -1), 0, -row.b, false});
                break;
            case Rel::GT:
                has_strict = true;
                norm.push_back({vec_scale(row.a, -1), 1, -row.b, false});
                break;
        }
    }
    // Cap on the strictness margin.
    norm.push_back({zero_vec(d), 1, 1, false});

    std::size_t slacks = 0;
    for (const NormRow& row : norm)
        if (!row.eq) ++slacks;

    const std::size_t ncols = 2 * d + 1 + slacks;
    Matrix m(norm.size(), ncols);
    Vec rhs(norm.size());
    std::size_t slack_col = 2 * d + 1;
    for (std::size_t i = 0; i < norm.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m.at(i, j) = norm[i].a[j];
            m.at(i, d + j) = -norm[i].a[j];
        }
        m.at(i, t_col) = norm[i].t_coeff;
        if (!norm[i].eq) m.at(i, slack_col++) = 1;
        rhs[i] = norm[i].b;
    }

    Vec cost(ncols);
    cost[t_col] = 1;

    const SimplexOutcome out = simplex_max(m, rhs, cost);
    if (!out.feasible) return {};
    const Rat t_star = out.solution[t_col];
    if (has_strict && sgn(t_star) <= 0) return {};

    FeasibilityResult res;
    res.feasible = true;
    res.witness.resize(d);
    for (std::size_t j = 0; j < d; ++j) res.witness[j] = out.solution[j] - out.solution[d + j];
    res.slack = t_star;
    return res;
}

std::optional<OrientedHyperplane> separating_hyperplane(const std::vector<Vec>& a_side,
                                                        const std::vector<Vec>& b_side,
                                                        bool strict) {
    if (a_side.empty() || b_side.empty())
        throw usage_error("EmptyPointSet", "separating_hyperplane needs nonempty sides");
    const std::size_t d = a_side[0].size();
    for (const Vec& p : a_side)
        if (p.size() != d) throw usage_error("DimensionMismatch", "mixed dimensions in A");
    for (const Vec& p : b_side)
        if (p.size() != d) throw usage_error("DimensionMismatch", "mixed dimensions in B");

    // Variables (u, alpha) in R^{d+1}.
    auto build = [&](Rel rel_a, Rel rel_b) {
        InequalitySystem sys;
        sys.dimension = d + 1;
        for (const Vec& p : a_side) {
            Vec row(p);
            row.push_back(-1);
            sys.add(std::move(row), 0, rel_a);  // <p,u> - alpha REL 0
        }
        for (const Vec& p : b_side) {
            Vec row(p);
            row.push_back(-1);
            sys.add(std::move(row), 0, rel_b);
        }
        return sys;
    };

    auto to_plane = [&](const Vec& w) {
        Vec normal(w.begin(), w.begin() + d);
        return OrientedHyperplane{std::move(normal), w[d]};
    };

    if (strict) {
        const FeasibilityResult r = feasible(build(Rel::LT, Rel::GT));
        if (!r.feasible) return std::nullopt;
        return to_plane(r.witness);
    }

    // Weak separation: the feasible (u, alpha) form a cone that always
    // contains 0, so force a nonzero normal one coordinate at a time.
    for (std::size_t i = 0; i < d; ++i) {
        for (int s : {1, -1}) {
            InequalitySystem sys = build(Rel::LE, Rel::GE);
            Vec fix = zero_vec(d + 1);
            fix[i] = 1;
            sys.add(std::move(fix), s, Rel::EQ);
            const FeasibilityResult r = feasible(sys);
            if (r.feasible) return to_plane(r.witness);
        }
    }
    return std::nullopt;
}

}  // namespace ptg
