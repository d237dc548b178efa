#include "ptg/hyperplane.hpp"

#include "ptg/errors.hpp"

namespace ptg {

OrientedHyperplane OrientedHyperplane::canonical() const {
    for (const Rat& c : normal) {
        if (sgn(c) != 0) {
            const Rat f = 1 / rat_abs(c);
            OrientedHyperplane h{vec_scale(normal, f), offset * f};
            return h;
        }
    }
    throw usage_error("ZeroNormal", "hyperplane with zero normal");
}

bool OrientedHyperplane::same_oriented(const OrientedHyperplane& o) const {
    if (normal.size() != o.normal.size()) return false;
    const OrientedHyperplane a = canonical();
    const OrientedHyperplane b = o.canonical();
    return a.normal == b.normal && a.offset == b.offset;
}

bool OrientedHyperplane::same_unoriented(const OrientedHyperplane& o) const {
    return same_oriented(o) || same_oriented(o.flipped());
}

OrientedHyperplane hyperplane_through(const std::vector<Vec>& points) {
    if (points.empty()) throw usage_error("DimensionMismatch", "hyperplane through no points");
    const std::size_t d = points[0].size();
    // Normal n and offset a with <p,n> = a for all p: kernel of [(p,-1)].
    Matrix m(points.size(), d + 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = points[i][j];
        m.at(i, d) = -1;
    }
    const std::vector<Vec> ker = kernel_basis(m);
    if (ker.size() != 1)
        throw usage_error("NotAHyperplane", "points do not span a hyperplane");
    Vec normal(ker[0].begin(), ker[0].begin() + d);
    if (vec_is_zero(normal))
        throw usage_error("NotAHyperplane", "points do not span a hyperplane");
    return OrientedHyperplane{std::move(normal), ker[0][d]};
}

bool hyperplane_less(const OrientedHyperplane& a, const OrientedHyperplane& b) {
    const OrientedHyperplane ca = a.canonical();
    const OrientedHyperplane cb = b.canonical();
    if (ca.normal != cb.normal) return ca.normal < cb.normal;
    return ca.offset < cb.offset;
}

}  // namespace ptg
