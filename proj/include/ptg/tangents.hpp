#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptg/hyperplane.hpp"
#include "ptg/separation.hpp"

namespace ptg {

// Two-sided set partition of the member indices. Canonical form keeps the
// side containing member 0 in `upper`.
struct Partition {
    std::vector<std::size_t> upper;  // members required in H^>=
    std::vector<std::size_t> lower;  // members required in H^<=

    Partition canonical(std::size_t m) const;
    Partition swapped() const { return Partition{lower, upper}; }
    std::string describe() const;
};

// All canonical partitions of {0..m-1}: member 0 fixed on the upper side,
// ordered by the bitmask of the lower side.
std::vector<Partition> canonical_partitions(std::size_t m);

struct TangentHyperplane {
    OrientedHyperplane plane;
    // Per member: vertex indices lying exactly on the plane (the tangent
    // face; may be a whole facet since polytopes are not strictly convex).
    std::vector<std::vector<std::size_t>> tangent_faces;
};

struct TangentPair {
    Partition partition;
    TangentHyperplane first, second;
};

struct TangentCheck {
    bool pass = false;
    std::string failure;  // empty when pass
};

// Checks tangency (some vertex exactly on H) and the required closed side
// for every member under the partition.
TangentCheck verify_tangent(const OrientedHyperplane& plane, const Family& family,
                            const Partition& part);

// The two hyperplanes tangent to every member with the `upper` members in
// H^>= and `lower` members in H^<=, built by the linearize / negate /
// affinize / hull / rainbow-facet pipeline. Requires strong separation.
TangentPair sandwich_tangents(const Family& family, const Partition& part,
                              const SeparationCertificate* cert = nullptr);

struct AllTangents {
    std::vector<TangentPair> pairs;  // canonical partition order
    bool full_dimensional = false;
    bool all_distinct = false;  // as unoriented hyperplanes
    std::vector<OrientedHyperplane> planes() const;
};

// All 2^d tangents of a d-member family, one pair per canonical partition.
// Distinctness is enforced when every member is full dimensional and only
// reported otherwise.
AllTangents all_tangents(const Family& family);

// Facets of `hull` whose incident vertex set has at least one vertex of
// every color in 0..m-1.
std::vector<std::size_t> rainbow_facets(const Polytope& hull,
                                        const std::vector<std::size_t>& vertex_colors,
                                        std::size_t m);

// Independent brute-force oracle: every affinely-spanning d-subset of the
// vertex union is tested as a candidate tangent hyperplane.
struct OracleTangent {
    OrientedHyperplane plane;        // canonical orientation
    std::vector<int> member_side;    // +1 above, -1 below, 0 entirely on H
};

struct OracleOptions {
    std::size_t guard = 40;  // max total vertices; override via env in the CLI
};

std::vector<OracleTangent> brute_force_tangents(const Family& family,
                                                const OracleOptions& opts = {});

// True when the oracle tangent can realize the partition (members wholly on
// the plane may sit on either side).
bool oracle_supports_partition(const OracleTangent& t, const Partition& part);

// Prop-style unique tangent for d+1 members: runs the sandwich pair on the
// subfamily without `special` and keeps the one with member `special`
// strictly positive. `part` partitions all d+1 members and must contain
// `special` in `upper`.
OrientedHyperplane unique_tangent_excluding(const Family& family, const Partition& part,
                                            std::size_t special,
                                            const SeparationCertificate* cert = nullptr);

}  // namespace ptg
