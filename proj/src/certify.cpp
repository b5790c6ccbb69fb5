#include "hjpoly/certify.hpp"

#include "hjpoly/errors.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hjpoly {

FacetCertificate facet_certificate(const Realization& real, const LineGeom& line) {
    const std::size_t d = static_cast<std::size_t>(real.d);
    if (line.members.size() != d)
        throw std::invalid_argument("facet_certificate: line size differs from dimension");

    std::vector<RVec> pts;
    pts.reserve(d);
    for (auto idx : line.members) pts.push_back(real.coordinates.at(idx));

    const auto f = affine_span_functional(pts);
    if (!f) {
        std::ostringstream os;
        os << "facet_certificate: line " << pattern_string(line.pattern, real.d)
           << " spans no hyperplane";
        throw AffinelyDependentError(os.str());
    }
    Hyperplane hp(f->first, f->second);

    int orientation = 0;
    std::size_t next_member = 0;
    std::optional<Rat> min_slack;
    for (std::size_t idx = 0; idx < real.coordinates.size(); ++idx) {
        if (next_member < line.members.size() && line.members[next_member] == idx) {
            ++next_member;
            continue;
        }
        const Rat value = hp.eval(real.coordinates[idx]);
        if (orientation == 0) {
            orientation = value.sign();
            if (orientation == 0) {
                std::ostringstream os;
                os << "facet_certificate: line " << pattern_string(line.pattern, real.d)
                   << " passes through off-line point " << idx;
                throw NotSupportingError(idx, value.str(), os.str());
            }
        }
        const Rat slack = orientation > 0 ? value : -value;
        if (slack.sign() <= 0) {
            std::ostringstream os;
            os << "facet_certificate: line " << pattern_string(line.pattern, real.d)
               << " does not support the configuration at point " << idx;
            throw NotSupportingError(idx, value.str(), os.str());
        }
        if (!min_slack || slack < *min_slack) min_slack = slack;
    }
    if (!min_slack)
        throw std::invalid_argument("facet_certificate: no points off the line");
    return FacetCertificate{line.pattern, line.members, std::move(hp), orientation,
                            std::move(*min_slack)};
}

std::vector<VertexCertificate> vertex_certificates(const Realization& real) {
    const std::size_t count = real.coordinates.size();
    const std::size_t d = static_cast<std::size_t>(real.d);
    std::vector<VertexCertificate> certs;
    certs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const PlanarPoint p = planar_point(real, i);

        // g(x) = x1 + x3 - 2 px x4 - 2 py x5 + (px^2 + py^2); on monomial
        // images g(nu(q)) is the squared planar distance |q - p|^2.
        RVec c(d);
        c[0] = Rat(1);
        c[2] = Rat(1);
        c[3] = Rat(-2) * p.x;
        c[4] = Rat(-2) * p.y;
        const Rat c0 = p.x * p.x + p.y * p.y;

        for (std::size_t j = 0; j < count; ++j) {
            Rat value = c0;
            for (std::size_t k = 0; k < d; ++k) value += c[k] * real.coordinates[j][k];
            const PlanarPoint q = planar_point(real, j);
            const Rat dx = q.x - p.x;
            const Rat dy = q.y - p.y;
            if (value != dx * dx + dy * dy)
                throw CertificateError(
                    "vertex_certificates: squared-distance identity failed; coordinates are "
                    "not monomial images");
            if (j == i) {
                if (!value.is_zero())
                    throw CertificateError("vertex_certificates: functional nonzero at its vertex");
            } else if (value.sign() <= 0) {
                std::ostringstream os;
                os << "vertex_certificates: points " << i << " and " << j
                   << " have the same planar projection";
                throw DuplicatePlanarPointsError(i, j, os.str());
            }
        }
        VertexCertificate vc{static_cast<std::uint32_t>(i), Hyperplane(c0, c)};
        certs.push_back(std::move(vc));
    }
    return certs;
}

CertBundle build_certificates(const Realization& real) {
    CertBundle bundle;
    bundle.facets.reserve(real.lines.size());
    for (const auto& line : real.lines) bundle.facets.push_back(facet_certificate(real, line));
    bundle.vertices = vertex_certificates(real);
    return bundle;
}

void recheck_bundle(const Realization& real, const CertBundle& bundle) {
    const std::size_t count = real.coordinates.size();
    const std::size_t d = static_cast<std::size_t>(real.d);

    if (bundle.facets.size() != real.lines.size())
        throw CertificateError("recheck: facet certificate count differs from line count");
    for (std::size_t li = 0; li < bundle.facets.size(); ++li) {
        const FacetCertificate& cert = bundle.facets[li];
        if (cert.pattern != real.lines[li].pattern || cert.on_set != real.lines[li].members)
            throw CertificateError("recheck: facet certificate does not match its line");
        if (cert.on_set.size() != d)
            throw CertificateError("recheck: facet on-set size differs from dimension");
        if (cert.orientation != 1 && cert.orientation != -1)
            throw CertificateError("recheck: facet orientation must be +1 or -1");
        if (cert.min_slack.sign() <= 0)
            throw CertificateError("recheck: facet min_slack must be positive");
        {
            std::vector<RVec> pts;
            pts.reserve(d);
            for (auto idx : cert.on_set) pts.push_back(real.coordinates.at(idx));
            if (!affinely_independent(pts))
                throw CertificateError("recheck: facet on-set is affinely dependent");
        }

        std::size_t next_member = 0;
        std::optional<Rat> min_slack;
        for (std::size_t idx = 0; idx < count; ++idx) {
            const Rat value = cert.hyperplane.eval(real.coordinates[idx]);
            if (next_member < cert.on_set.size() && cert.on_set[next_member] == idx) {
                ++next_member;
                if (!value.is_zero())
                    throw CertificateError("recheck: facet hyperplane misses an on-set point");
                continue;
            }
            const Rat slack = cert.orientation > 0 ? value : -value;
            if (slack.sign() <= 0)
                throw CertificateError("recheck: facet hyperplane fails strict support");
            if (!min_slack || slack < *min_slack) min_slack = slack;
        }
        if (!min_slack || *min_slack != cert.min_slack)
            throw CertificateError("recheck: stored min_slack differs from recomputation");
    }

    if (bundle.vertices.size() != count)
        throw CertificateError("recheck: vertex certificate count differs from point count");
    for (std::size_t i = 0; i < count; ++i) {
        const VertexCertificate& vc = bundle.vertices[i];
        if (vc.vertex != i) throw CertificateError("recheck: vertex certificates out of order");
        for (std::size_t j = 0; j < count; ++j) {
            const Rat value = vc.functional.eval(real.coordinates[j]);
            if (j == i) {
                if (!value.is_zero())
                    throw CertificateError("recheck: vertex functional nonzero at its vertex");
            } else if (value.sign() <= 0) {
                throw CertificateError("recheck: vertex functional not positive elsewhere");
            }
        }
    }
}

namespace {

// Classifies one affinely independent d-subset; returns the facet's zero set
// when the subset spans a supporting hyperplane.
std::optional<std::vector<std::uint32_t>> classify_subset(
    const std::vector<RVec>& coords, const std::vector<std::uint32_t>& subset) {
    std::vector<RVec> pts;
    pts.reserve(subset.size());
    for (auto idx : subset) pts.push_back(coords[idx]);
    const auto f = affine_span_functional(pts);
    if (!f) return std::nullopt;

    std::vector<std::uint32_t> zeros;
    int side = 0;
    std::size_t next_member = 0;
    for (std::uint32_t idx = 0; idx < coords.size(); ++idx) {
        if (next_member < subset.size() && subset[next_member] == idx) {
            ++next_member;
            zeros.push_back(idx);
            continue;
        }
        Rat value = f->first;
        for (std::size_t j = 0; j < f->second.size(); ++j)
            value += f->second[j] * coords[idx][j];
        const int s = value.sign();
        if (s == 0) {
            zeros.push_back(idx);
        } else if (side == 0) {
            side = s;
        } else if (side != s) {
            return std::nullopt;  // points on both sides
        }
    }
    if (side == 0) return std::nullopt;  // all points affinely degenerate
    return zeros;
}

}  // namespace

FacetEnumeration enumerate_facets(const Realization& real, std::size_t subset_cap,
                                  unsigned threads) {
    const std::uint32_t n = static_cast<std::uint32_t>(real.coordinates.size());
    const std::uint32_t d = static_cast<std::uint32_t>(real.d);
    if (n < d + 1)
        throw std::invalid_argument("enumerate_facets: need at least d+1 points");

    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), n, d);
    if (binom > static_cast<unsigned long>(subset_cap)) {
        std::ostringstream os;
        os << "enumerate_facets: C(" << n << ", " << d << ") = " << binom.get_str()
           << " exceeds cap " << subset_cap;
        throw CapExceededError(os.str());
    }

    std::set<std::vector<std::uint32_t>> facet_sets;
    std::mutex merge_mutex;
    std::atomic<std::uint32_t> next_first{0};
    const unsigned worker_count = std::max(1u, threads);

    auto worker = [&] {
        std::set<std::vector<std::uint32_t>> local;
        for (;;) {
            const std::uint32_t first = next_first.fetch_add(1);
            if (first + d > n) break;
            std::vector<std::uint32_t> subset(d);
            for (std::uint32_t i = 0; i < d; ++i) subset[i] = first + i;
            // All d-subsets with minimum element `first`: advance only the
            // tail d-1 positions.
            for (;;) {
                if (auto zeros = classify_subset(real.coordinates, subset))
                    local.insert(std::move(*zeros));
                std::vector<std::uint32_t> tail(subset.begin() + 1, subset.end());
                bool more = false;
                {
                    // next subset of {first+1 .. n-1}
                    std::size_t pos = tail.size();
                    while (pos > 0) {
                        --pos;
                        if (tail[pos] != n - (d - 1) + pos) {
                            ++tail[pos];
                            for (std::size_t i = pos + 1; i < tail.size(); ++i)
                                tail[i] = tail[i - 1] + 1;
                            more = true;
                            break;
                        }
                    }
                }
                if (!more) break;
                std::copy(tail.begin(), tail.end(), subset.begin() + 1);
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        facet_sets.merge(local);
    };

    if (worker_count == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    FacetEnumeration fe;
    fe.facets.vertex_count = n;
    fe.facets.edges.assign(facet_sets.begin(), facet_sets.end());
    fe.simplicial = true;
    for (const auto& z : fe.facets.edges) fe.simplicial = fe.simplicial && z.size() == d;
    return fe;
}

TheoremCheck certify_theorem(const Realization& real, const HJHypergraph& hj,
                             const CertifyOptions& opts) {
    if (hj.d != real.d || hj.n != real.n)
        throw std::invalid_argument("certify_theorem: hypergraph parameters differ from realization");
    if (hj.graph.edges.size() != real.lines.size())
        throw std::invalid_argument("certify_theorem: line count mismatch");
    for (std::size_t i = 0; i < real.lines.size(); ++i)
        if (hj.graph.edges[i] != real.lines[i].members ||
            !(hj.patterns[i] == real.lines[i].pattern))
            throw std::invalid_argument("certify_theorem: line sets differ from hypergraph edges");

    validate_realization(real);

    TheoremCheck tc;
    tc.bundle = build_certificates(real);
    tc.report.all_lines_are_facets = true;   // build_certificates would have thrown
    tc.report.convex_position = true;
    tc.report.tau_lines = tau_exact(hj.graph, opts.deadline);

    if (opts.full_hull) {
        tc.report.hull = enumerate_facets(real, opts.subset_cap, opts.threads);

        std::set<std::vector<std::uint32_t>> facet_sets(tc.report.hull->facets.edges.begin(),
                                                        tc.report.hull->facets.edges.end());
        bool contained = true;
        for (const auto& line : real.lines)
            contained = contained && facet_sets.count(line.members) > 0;
        tc.report.lines_contained = contained;
        if (!contained)
            throw CertificateError("certify_theorem: a certified line facet is missing from the hull");

        tc.report.tau_facets = tau_exact(tc.report.hull->facets, opts.deadline);
        if (tc.report.tau_facets->exact && tc.report.tau_lines.exact &&
            tc.report.tau_facets->upper < tc.report.tau_lines.upper)
            throw CertificateError(
                "certify_theorem: facet hypergraph has a smaller transversal number than its "
                "line subhypergraph");
    }
    return tc;
}

}  // namespace hjpoly
