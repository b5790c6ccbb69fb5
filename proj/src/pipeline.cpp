#include "hjpoly/pipeline.hpp"

#include "hjpoly/errors.hpp"

#include <sstream>
#include <stdexcept>

namespace hjpoly {

BuildResult realize_pipeline(const DrawingConfig& cfg) {
    if (cfg.d < 5)
        throw std::invalid_argument("realize_pipeline: the embedding needs dimension >= 5");
    if (cfg.n < 1) throw std::invalid_argument("realize_pipeline: word length must be >= 1");
    const mpz_class count =
        pow_mpz(static_cast<unsigned long>(cfg.d), static_cast<unsigned long>(cfg.n));
    if (count < static_cast<unsigned long>(cfg.d) + 1) {
        std::ostringstream os;
        os << "realize_pipeline: degenerate size, d^n = " << count.get_str()
           << " points cannot span R^" << cfg.d;
        throw std::invalid_argument(os.str());
    }
    if (cfg.precision_bits < 16 || cfg.precision_bits > cfg.max_precision_bits)
        throw std::invalid_argument("realize_pipeline: bad precision range");

    const PlanarDrawing drawing = base_drawing(cfg);
    const Rat epsilon = cfg.epsilon_override ? *cfg.epsilon_override : choose_epsilon(drawing);
    if (epsilon.sign() <= 0)
        throw std::invalid_argument("realize_pipeline: epsilon must be positive");

    const SurdConfiguration surds = surd_perturb(drawing, epsilon);
    // With the chosen epsilon this holds by construction; an override can
    // break it, and then no precision ever certifies.
    try {
        verify_surd_support(surds);
    } catch (const NotSupportingError& e) {
        throw std::invalid_argument(
            std::string("realize_pipeline: epsilon is too large for this drawing: ") + e.what());
    }

    std::string last_failure;
    unsigned attempt = 0;
    for (unsigned bits = cfg.precision_bits; bits <= cfg.max_precision_bits; bits *= 2) {
        ++attempt;
        try {
            const std::vector<PlanarPoint> planar = snap(surds, bits, cfg.seed, cfg.jitter,
                                                         attempt - 1);
            std::vector<RVec> embedded;
            embedded.reserve(planar.size());
            for (const auto& p : planar) embedded.push_back(veronese(p.x, p.y));
            std::vector<RVec> coords = lift(embedded, cfg.d, cfg.seed, bits, surds.lines);

            Realization real{cfg.d, cfg.n, epsilon, bits, cfg.seed,
                             std::move(coords), surds.lines};
            validate_realization(real);
            CertBundle bundle = build_certificates(real);

            BuildResult result{std::move(real), std::move(bundle), attempt};
            return result;
        } catch (const AffinelyDependentError& e) {
            last_failure = e.what();
        } catch (const NotSupportingError& e) {
            last_failure = e.what();
        } catch (const DuplicatePlanarPointsError& e) {
            last_failure = e.what();
        } catch (const CertificateError& e) {
            last_failure = e.what();
        } catch (const RetriesExhaustedError& e) {
            last_failure = e.what();
        }
    }
    std::ostringstream os;
    os << "realize_pipeline: certificates still failing at " << cfg.max_precision_bits
       << " bits (last failure: " << last_failure << ")";
    throw PrecisionExhaustedError(os.str());
}

}  // namespace hjpoly
