#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hjpoly {

// Points that do not determine a unique hyperplane.
class AffinelyDependentError : public std::runtime_error {
public:
    explicit AffinelyDependentError(const std::string& what) : std::runtime_error(what) {}
};

// A candidate facet hyperplane with some off-facet point on the wrong side.
// Carries the violating point index and its exact functional value.
class NotSupportingError : public std::runtime_error {
public:
    NotSupportingError(std::size_t violating_index, std::string exact_value, const std::string& what)
        : std::runtime_error(what), index(violating_index), value(std::move(exact_value)) {}
    std::size_t index;
    std::string value;
};

// Weak coloring is impossible: some hyperedge has a single vertex.
class SizeOneEdgeError : public std::runtime_error {
public:
    explicit SizeOneEdgeError(const std::string& what) : std::runtime_error(what) {}
};

// Requested enumeration exceeds a configured size cap.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// A verify-and-retry stage ran out of retries.
class RetriesExhaustedError : public std::runtime_error {
public:
    explicit RetriesExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

// The snap precision-doubling loop hit its cap with a certificate still failing.
class PrecisionExhaustedError : public std::runtime_error {
public:
    explicit PrecisionExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

// Two words snapped to the same planar point; the pipeline retries on this.
class DuplicatePlanarPointsError : public std::runtime_error {
public:
    DuplicatePlanarPointsError(std::size_t first, std::size_t second, const std::string& what)
        : std::runtime_error(what), a(first), b(second) {}
    std::size_t a;
    std::size_t b;
};

// A stored certificate failed re-verification against its realization.
class CertificateError : public std::runtime_error {
public:
    explicit CertificateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hjpoly
