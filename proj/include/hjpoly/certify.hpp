#pragma once

// Machine-checkable exact certificates for a realized configuration:
//   - facet certificates: a hyperplane through a line's d points, an
//     orientation, and the minimum slack over all other points (positive
//     slack = the hyperplane supports the polytope in that facet)
//   - vertex certificates: an affine functional vanishing at one point and
//     provably positive at every other (squared-distance identity)
//   - brute-force facet enumeration of the convex hull for the full check
// Certificates store exact rationals only; re-verification is bit-exact.

#include "hjpoly/cover.hpp"
#include "hjpoly/hj.hpp"
#include "hjpoly/linalg.hpp"
#include "hjpoly/rat.hpp"
#include "hjpoly/realize.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hjpoly {

struct FacetCertificate {
    LinePattern pattern;
    std::vector<std::uint32_t> on_set;  // the line's members, sorted
    Hyperplane hyperplane;
    int orientation = 0;                // +1 or -1: side the polytope lies on
    Rat min_slack;                      // min over off points of orientation * eval, > 0
};

struct VertexCertificate {
    std::uint32_t vertex = 0;
    Hyperplane functional;  // vanishes at the vertex, positive elsewhere
};

struct CertBundle {
    std::vector<FacetCertificate> facets;     // one per line, in line order
    std::vector<VertexCertificate> vertices;  // one per point, in index order
};

// Certifies that the hyperplane through the given line's points supports the
// configuration: every off point gets the same strict sign. Throws
// AffinelyDependentError or NotSupportingError when it does not.
FacetCertificate facet_certificate(const Realization& real, const LineGeom& line);

// Certifies convex position: for each point p, the functional
//   x1 + x3 - 2 px * x4 - 2 py * x5 + (px^2 + py^2)
// equals the squared planar distance to p, so it vanishes at p and is
// positive at every other point. Throws DuplicatePlanarPointsError or
// CertificateError when the identity or positivity fails.
std::vector<VertexCertificate> vertex_certificates(const Realization& real);

// Facet certificates for every line plus vertex certificates.
CertBundle build_certificates(const Realization& real);

// Re-verifies a stored bundle against a realization bit-exactly; throws
// CertificateError with a description of the first mismatch.
void recheck_bundle(const Realization& real, const CertBundle& bundle);

struct FacetEnumeration {
    Hypergraph facets;      // edge = sorted vertex set of one facet
    bool simplicial = false;  // every facet has exactly d vertices
};

// Brute-force convex hull facets: every d-subset spanning a hyperplane with
// all other points strictly on one side contributes its full zero set.
// Throws CapExceededError when C(N, d) exceeds subset_cap.
FacetEnumeration enumerate_facets(const Realization& real,
                                  std::size_t subset_cap = 10'000'000,
                                  unsigned threads = 1);

struct CertifyOptions {
    bool full_hull = false;
    unsigned threads = 1;
    std::size_t subset_cap = 10'000'000;
    Deadline deadline = Deadline::never();  // applies to the transversal solves
};

struct CertReport {
    bool all_lines_are_facets = false;
    bool convex_position = false;
    TauResult tau_lines;                      // transversal number of the line hypergraph
    std::optional<FacetEnumeration> hull;     // present when full_hull
    std::optional<bool> lines_contained;      // every line's member set is a hull facet
    std::optional<TauResult> tau_facets;      // transversal number of the facet hypergraph
};

struct TheoremCheck {
    CertReport report;
    CertBundle bundle;
};

// End-to-end check of one realized instance against its line hypergraph:
// every line is a certified facet, the points are in convex position, and —
// with full_hull — the line facets appear among the enumerated hull facets
// and the facet hypergraph's transversal number is at least the line one.
TheoremCheck certify_theorem(const Realization& real, const HJHypergraph& hj,
                             const CertifyOptions& opts = {});

}  // namespace hjpoly
