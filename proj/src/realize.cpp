#include "hjpoly/realize.hpp"

#include "hjpoly/errors.hpp"
#include "hjpoly/seeded.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hjpoly {

namespace {

// Builds the drawing and checks both conditions exactly; a violation is
// reported through `why` instead of an exception so that callers can retry.
std::optional<PlanarDrawing> try_drawing(int d, int n,
                                         const std::vector<std::pair<Rat, Rat>>& vectors,
                                         std::size_t line_cap, std::string* why) {
    PlanarDrawing dr;
    dr.d = d;
    dr.n = n;
    dr.vectors = vectors;

    const auto patterns = enumerate_patterns(d, n, line_cap);
    const std::uint64_t count = word_index(Word{std::vector<Letter>(n, d)}, d) + 1;

    dr.points.reserve(count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Word w = word_from_index(idx, d, n);
        Rat x(0), y(0);
        for (int i = 0; i < n; ++i) {
            x += Rat(w.letters[i]) * vectors[i].first;
            y += Rat(w.letters[i]) * vectors[i].second;
        }
        dr.points.emplace_back(std::move(x), std::move(y));
    }

    // Condition: pairwise distinct points (x-parts are positive since every
    // letter is >= 1 and every vector has positive x-part).
    {
        std::map<std::pair<Rat, Rat>, std::uint64_t> seen;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto [it, fresh] = seen.try_emplace(dr.points[idx], idx);
            if (!fresh) {
                std::ostringstream os;
                os << "points " << it->second << " and " << idx << " coincide";
                *why = os.str();
                return std::nullopt;
            }
        }
    }

    dr.lines.reserve(patterns.size());
    for (const auto& pat : patterns) {
        LineGeom lg;
        lg.pattern = pat;
        Rat wx(0), wy(0);
        for (int i = 0; i < n; ++i) {
            if (pat.symbols[i] == kStar) {
                wx += vectors[i].first;
                wy += vectors[i].second;
            }
        }
        lg.slope = wy / wx;  // wx > 0: a sum of positive x-parts
        for (Letter k = 1; k <= d; ++k)
            lg.members.push_back(
                static_cast<std::uint32_t>(word_index(substitute(pat, k, d), d)));
        std::sort(lg.members.begin(), lg.members.end());
        const auto& p0 = dr.points[lg.members[0]];
        lg.intercept = p0.second - lg.slope * p0.first;

        // Condition: the drawing points on this planar line are exactly the
        // line's members.
        std::vector<std::uint32_t> on;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            const auto& p = dr.points[idx];
            if (p.second == lg.slope * p.first + lg.intercept)
                on.push_back(static_cast<std::uint32_t>(idx));
        }
        if (on != lg.members) {
            std::ostringstream os;
            os << "line " << pattern_string(pat, d) << " supports "
               << on.size() << " points instead of its " << lg.members.size() << " members";
            *why = os.str();
            return std::nullopt;
        }
        dr.lines.push_back(std::move(lg));
    }
    return dr;
}

void check_vectors(int d, int n, const std::vector<std::pair<Rat, Rat>>& vectors) {
    if (d < 2) throw std::invalid_argument("drawing: alphabet size must be >= 2");
    if (n < 1) throw std::invalid_argument("drawing: word length must be >= 1");
    if (vectors.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("drawing: need one vector per position");
    for (const auto& v : vectors)
        if (v.first.sign() <= 0)
            throw std::invalid_argument("drawing: vector x-parts must be positive");
}

}  // namespace

PlanarDrawing drawing_from_vectors(int d, int n,
                                   const std::vector<std::pair<Rat, Rat>>& vectors,
                                   std::size_t line_cap) {
    check_vectors(d, n, vectors);
    std::string why;
    auto dr = try_drawing(d, n, vectors, line_cap, &why);
    if (!dr) throw std::invalid_argument("drawing_from_vectors: " + why);
    return *std::move(dr);
}

PlanarDrawing base_drawing(const DrawingConfig& cfg) {
    std::vector<std::pair<Rat, Rat>> vectors;
    vectors.reserve(cfg.n);
    for (int i = 1; i <= cfg.n; ++i)
        vectors.emplace_back(Rat(1), Rat(pow_mpz(static_cast<unsigned long>(cfg.d) + 1,
                                                 static_cast<unsigned long>(i))));
    check_vectors(cfg.d, cfg.n, vectors);

    const unsigned max_attempts = cfg.jitter ? 33 : 1;
    std::string why;
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<Rat, Rat>> v = vectors;
        if (attempt > 0) {
            SeedStream rng(cfg.seed, kTagDrawingJitter, attempt);
            for (int i = 0; i < cfg.n; ++i)
                v[i].second += dyadic(mpz_class(rng.next() & 0xffffu), 20);
        }
        auto dr = try_drawing(cfg.d, cfg.n, v, cfg.line_cap, &why);
        if (dr) return *std::move(dr);
    }
    throw RetriesExhaustedError("base_drawing: still violated after 32 jittered retries: " + why);
}

Rat choose_epsilon(const PlanarDrawing& dr) {
    std::optional<Rat> best;
    for (const auto& line : dr.lines) {
        std::size_t next_member = 0;
        for (std::uint32_t idx = 0; idx < dr.points.size(); ++idx) {
            if (next_member < line.members.size() && line.members[next_member] == idx) {
                ++next_member;
                continue;
            }
            const auto& p = dr.points[idx];
            const Rat delta = p.second - line.slope * p.first - line.intercept;
            if (delta.sign() >= 0) continue;
            const Rat cand = delta * delta / (Rat(4) * p.first);
            if (!best || cand < *best) best = cand;
        }
    }
    if (!best) return Rat(1);
    const Rat half = *best * Rat(1, 2);
    return half < Rat(1) ? half : Rat(1);
}

SurdConfiguration surd_perturb(const PlanarDrawing& dr, const Rat& epsilon) {
    if (epsilon.sign() <= 0) throw std::invalid_argument("surd_perturb: epsilon must be positive");
    SurdConfiguration sc;
    sc.d = dr.d;
    sc.n = dr.n;
    sc.epsilon = epsilon;
    sc.lines = dr.lines;
    sc.points.reserve(dr.points.size());
    for (const auto& p : dr.points)
        sc.points.push_back(SurdPoint{p.first, Surd(p.second, Rat(1), epsilon * p.first)});
    return sc;
}

Surd line_residual(const SurdPoint& p, const LineGeom& line) {
    return p.y - Surd(line.slope * p.x + line.intercept);
}

Surd line_conic_value(const SurdPoint& p, const LineGeom& line, const Rat& epsilon) {
    return line_residual(p, line).square() - Surd(epsilon * p.x);
}

void verify_surd_support(const SurdConfiguration& sc) {
    for (const auto& line : sc.lines) {
        std::size_t next_member = 0;
        for (std::uint32_t idx = 0; idx < sc.points.size(); ++idx) {
            const Surd value = line_conic_value(sc.points[idx], line, sc.epsilon);
            if (next_member < line.members.size() && line.members[next_member] == idx) {
                ++next_member;
                if (value.sign() != 0) {
                    std::ostringstream os;
                    os << "conic value of line " << pattern_string(line.pattern, sc.d)
                       << " does not vanish at member " << idx;
                    throw NotSupportingError(idx, value.str(), os.str());
                }
                continue;
            }
            if (value.sign() <= 0) {
                std::ostringstream os;
                os << "conic value of line " << pattern_string(line.pattern, sc.d)
                   << " is not positive at point " << idx;
                throw NotSupportingError(idx, value.str(), os.str());
            }
        }
    }
}

namespace {

// Nearest multiple of 2^-bits; halves round up.
Rat round_to_dyadic(const Rat& v, unsigned bits) {
    mpz_class scaled_num = v.num();
    mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), bits);
    // floor((2 a + b) / (2 b)) = round(a / b) with ties up
    mpz_class q;
    mpz_class num2 = 2 * scaled_num + v.den();
    mpz_class den2 = 2 * v.den();
    mpz_fdiv_q(q.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    return dyadic(q, bits);
}

// A rational within 2^-(bits+2) of b*sqrt(r), for irrational sqrt(r).
Rat approx_root_term(const Rat& b, const Rat& r, unsigned bits) {
    const Rat sq = b * b * r;  // (b sqrt(r))^2, canonical p/q
    mpz_class n = sq.num() * sq.den();
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * (bits + 2));
    mpz_class t;
    mpz_sqrt(t.get_mpz_t(), n.get_mpz_t());
    mpz_class den = sq.den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits + 2);
    const Rat mag(t, den);
    return b.sign() >= 0 ? mag : -mag;
}

}  // namespace

std::vector<PlanarPoint> snap(const SurdConfiguration& sc, unsigned precision_bits,
                              std::uint64_t seed, bool jitter, unsigned attempt) {
    if (precision_bits < 16) throw std::invalid_argument("snap: need at least 16 bits");
    const std::size_t count = sc.points.size();
    std::vector<PlanarPoint> out;
    out.reserve(count);

    // Jitter numerators u * 2^m + i are pairwise distinct across points, and
    // the offsets stay below 2^-(precision_bits+8).
    const unsigned m = std::bit_width(std::max<std::size_t>(count, 1));
    const unsigned jitter_den_bits = precision_bits + 8 + 64 + m;
    SeedStream rng(seed, kTagSnapJitter, attempt);

    for (std::size_t i = 0; i < count; ++i) {
        const SurdPoint& sp = sc.points[i];
        PlanarPoint pp{sp.x, Rat(0)};
        if (sp.y.is_rational()) {
            pp.y = sp.y.rational_value();
        } else {
            const Rat approx = sp.y.rational_part() +
                               approx_root_term(sp.y.root_coefficient(), sp.y.radicand(),
                                                precision_bits);
            pp.y = round_to_dyadic(approx, precision_bits);
        }
        if (jitter) {
            const mpz_class ux(rng.next());
            const mpz_class uy(rng.next());
            mpz_class tx = ux, ty = uy;
            mpz_mul_2exp(tx.get_mpz_t(), tx.get_mpz_t(), m);
            mpz_mul_2exp(ty.get_mpz_t(), ty.get_mpz_t(), m);
            tx += static_cast<unsigned long>(i);
            ty += static_cast<unsigned long>(i);
            pp.x += dyadic(tx, jitter_den_bits);
            pp.y += dyadic(ty, jitter_den_bits);
        }
        out.push_back(std::move(pp));
    }
    return out;
}

RVec veronese(const Rat& x, const Rat& y) { return RVec{x * x, x * y, y * y, x, y}; }

bool lines_affinely_independent(const std::vector<RVec>& points,
                                const std::vector<LineGeom>& lines) {
    for (const auto& line : lines) {
        std::vector<RVec> pts;
        pts.reserve(line.members.size());
        for (auto idx : line.members) pts.push_back(points.at(idx));
        if (!affinely_independent(pts)) return false;
    }
    return true;
}

std::vector<RVec> lift(const std::vector<RVec>& points, int d, std::uint64_t seed,
                       unsigned precision_bits, const std::vector<LineGeom>& lines) {
    if (d < 5) throw std::invalid_argument("lift: dimension must be >= 5");
    for (const auto& p : points)
        if (p.size() != 5) throw std::invalid_argument("lift: input points must lie in R^5");

    if (d == 5) {
        if (!lines_affinely_independent(points, lines))
            throw RetriesExhaustedError(
                "lift: a line is affinely dependent in R^5 and there are no coordinates to draw");
        return points;
    }

    const std::uint64_t mask =
        precision_bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << precision_bits) - 1);
    for (unsigned attempt = 0; attempt < 33; ++attempt) {
        SeedStream rng(seed, kTagLift, attempt);
        std::vector<RVec> lifted;
        lifted.reserve(points.size());
        for (const auto& p : points) {
            RVec q(static_cast<std::size_t>(d));
            for (std::size_t j = 0; j < 5; ++j) q[j] = p[j];
            for (int j = 5; j < d; ++j)
                q[static_cast<std::size_t>(j)] =
                    dyadic(mpz_class(rng.next() & mask), precision_bits + 8);
            lifted.push_back(std::move(q));
        }
        if (lines_affinely_independent(lifted, lines)) return lifted;
    }
    throw RetriesExhaustedError("lift: line rank deficiency persisted through 32 redraws");
}

void validate_realization(const Realization& real) {
    if (real.d < 5) throw std::invalid_argument("realization: dimension must be >= 5");
    if (real.n < 1) throw std::invalid_argument("realization: word length must be >= 1");
    const mpz_class expect =
        pow_mpz(static_cast<unsigned long>(real.d), static_cast<unsigned long>(real.n));
    if (expect != static_cast<unsigned long>(real.coordinates.size()))
        throw std::invalid_argument("realization: point count is not d^n");
    if (real.precision_bits < 16) throw std::invalid_argument("realization: precision too small");
    if (real.epsilon.sign() <= 0) throw std::invalid_argument("realization: epsilon must be positive");

    const std::size_t count = real.coordinates.size();
    for (const auto& c : real.coordinates) {
        if (c.size() != static_cast<std::size_t>(real.d))
            throw std::invalid_argument("realization: wrong point dimension");
        if (c[0] != c[3] * c[3] || c[1] != c[3] * c[4] || c[2] != c[4] * c[4])
            throw CertificateError(
                "realization: first five coordinates are not the monomial image of the plane");
    }

    if (real.lines.empty()) throw std::invalid_argument("realization: no lines");
    for (const auto& line : real.lines) {
        if (line.members.size() != static_cast<std::size_t>(real.d))
            throw std::invalid_argument("realization: line member count differs from d");
        for (std::size_t i = 0; i < line.members.size(); ++i) {
            if (line.members[i] >= count)
                throw std::invalid_argument("realization: line member out of range");
            if (i > 0 && line.members[i - 1] >= line.members[i])
                throw std::invalid_argument("realization: line members not increasing");
        }
    }

    // Pairwise distinct planar projections.
    std::map<std::pair<Rat, Rat>, std::size_t> seen;
    for (std::size_t i = 0; i < count; ++i) {
        const auto key = std::make_pair(real.coordinates[i][3], real.coordinates[i][4]);
        auto [it, fresh] = seen.try_emplace(key, i);
        if (!fresh) {
            std::ostringstream os;
            os << "realization: points " << it->second << " and " << i
               << " have the same planar projection";
            throw DuplicatePlanarPointsError(it->second, i, os.str());
        }
    }

    // Full-dimensional affine span.
    RMat hom(count, static_cast<std::size_t>(real.d) + 1);
    for (std::size_t i = 0; i < count; ++i) {
        hom(i, 0) = Rat(1);
        for (int j = 0; j < real.d; ++j)
            hom(i, static_cast<std::size_t>(j) + 1) = real.coordinates[i][j];
    }
    if (rank(hom) != static_cast<std::size_t>(real.d) + 1)
        throw CertificateError("realization: affine span is not full-dimensional");
}

PlanarPoint planar_point(const Realization& real, std::size_t i) {
    const RVec& c = real.coordinates.at(i);
    return PlanarPoint{c[3], c[4]};
}

}  // namespace hjpoly
