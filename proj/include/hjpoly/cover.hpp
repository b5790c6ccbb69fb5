#pragma once

// Exact covering and coloring numbers of small hypergraphs: transversal
// number via branch and bound (with an optional deadline that degrades the
// answer to certified bounds), plus a brute-force oracle; weak chromatic
// number via backtracking, plus a brute-force oracle.

#include "hjpoly/hj.hpp"
#include "hjpoly/rat.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace hjpoly {

struct Transversal {
    std::vector<std::uint32_t> vertices;  // strictly increasing
};

// True iff every edge contains a vertex of t. Throws std::invalid_argument
// on out-of-range or unsorted vertices.
bool check_transversal(const Hypergraph& h, const Transversal& t);

struct Deadline {
    std::optional<std::chrono::steady_clock::time_point> at;
    static Deadline never() { return {}; }
    static Deadline after(std::chrono::milliseconds ms) {
        return {std::chrono::steady_clock::now() + ms};
    }
    bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
};

struct TauResult {
    std::size_t lower = 0;         // certified lower bound
    std::size_t upper = 0;         // size of the witness
    Transversal witness;           // valid transversal of size upper
    bool exact = false;            // lower == upper == the transversal number
};

// Smallest-k subset enumeration; vertex counts above the cap are rejected.
TauResult tau_bruteforce(const Hypergraph& h, std::size_t vertex_cap = 30);

// Branch and bound on the vertices of a minimum-size uncovered edge. With an
// expired deadline the search stops and the result carries the best certified
// bounds found so far (exact = false).
TauResult tau_exact(const Hypergraph& h, const Deadline& deadline = Deadline::never());

// tau / vertex_count as an exact rational. Requires vertex_count > 0.
Rat rho(const Hypergraph& h);

struct Coloring {
    std::vector<int> colors;  // one in 1..k per vertex
};

struct ChiResult {
    int chi = 0;
    Coloring coloring;  // witness with no monochromatic edge
};

// Weak chromatic number: least k such that some k-coloring leaves no edge
// monochromatic. Throws SizeOneEdgeError when an edge has one vertex.
ChiResult chi_weak(const Hypergraph& h);

// Exhaustive check of all k^V colorings for k = 1, 2, ...
ChiResult chi_bruteforce(const Hypergraph& h, std::size_t vertex_cap = 12);

// True iff no edge is monochromatic and colors lie in 1..k.
bool check_coloring(const Hypergraph& h, const Coloring& c, int k);

}  // namespace hjpoly
