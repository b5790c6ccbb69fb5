#include "hjpoly/cover.hpp"

#include "hjpoly/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hjpoly {

bool check_transversal(const Hypergraph& h, const Transversal& t) {
    std::vector<char> in(h.vertex_count, 0);
    for (std::size_t i = 0; i < t.vertices.size(); ++i) {
        const std::uint32_t v = t.vertices[i];
        if (v >= h.vertex_count) throw std::invalid_argument("transversal: vertex out of range");
        if (i > 0 && t.vertices[i - 1] >= v)
            throw std::invalid_argument("transversal: vertices not strictly increasing");
        in[v] = 1;
    }
    for (const auto& e : h.edges) {
        bool hit = false;
        for (auto v : e) hit = hit || in[v];
        if (!hit) return false;
    }
    return true;
}

TauResult tau_bruteforce(const Hypergraph& h, std::size_t vertex_cap) {
    if (h.vertex_count > vertex_cap || h.vertex_count > 63) {
        std::ostringstream os;
        os << "tau_bruteforce: " << h.vertex_count << " vertices exceed cap "
           << std::min<std::size_t>(vertex_cap, 63);
        throw CapExceededError(os.str());
    }
    const std::uint32_t v = h.vertex_count;
    std::vector<std::uint64_t> edge_mask;
    edge_mask.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::uint64_t m = 0;
        for (auto u : e) m |= std::uint64_t{1} << u;
        edge_mask.push_back(m);
    }

    std::vector<std::uint32_t> pick;
    for (std::uint32_t k = 0; k <= v; ++k) {
        // Lexicographically first k-subset, then odometer.
        pick.resize(k);
        for (std::uint32_t i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            std::uint64_t mask = 0;
            for (auto u : pick) mask |= std::uint64_t{1} << u;
            bool covers = true;
            for (auto em : edge_mask) covers = covers && (em & mask);
            if (covers) {
                TauResult r;
                r.lower = r.upper = k;
                r.witness.vertices = pick;
                r.exact = true;
                return r;
            }
            if (k == 0) break;
            std::int64_t pos = k - 1;
            while (pos >= 0 && pick[pos] == v - k + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (std::uint32_t i = static_cast<std::uint32_t>(pos) + 1; i < k; ++i)
                pick[i] = pick[i - 1] + 1;
        }
    }
    // Unreachable: the full vertex set is always a transversal.
    throw std::logic_error("tau_bruteforce: no transversal found");
}

namespace {

struct TauSearch {
    const Hypergraph& h;
    std::vector<std::vector<std::uint32_t>> vertex_edges;
    std::vector<std::uint32_t> cover_count;  // per edge
    std::vector<char> forbidden;
    std::vector<std::uint32_t> current, best;
    const Deadline& deadline;
    bool aborted = false;
    std::uint64_t nodes = 0;

    TauSearch(const Hypergraph& hg, const Deadline& dl) : h(hg), deadline(dl) {
        vertex_edges.resize(h.vertex_count);
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (auto v : h.edges[e]) {
                if (v >= h.vertex_count)
                    throw std::invalid_argument("tau: vertex index out of range");
                vertex_edges[v].push_back(static_cast<std::uint32_t>(e));
            }
        cover_count.assign(h.edges.size(), 0);
        forbidden.assign(h.vertex_count, 0);
    }

    void take(std::uint32_t v) {
        for (auto e : vertex_edges[v]) ++cover_count[e];
        current.push_back(v);
    }
    void untake(std::uint32_t v) {
        for (auto e : vertex_edges[v]) --cover_count[e];
        current.pop_back();
    }

    // Greedy packing of pairwise disjoint uncovered edges — a lower bound on
    // how many more vertices any completion needs.
    std::size_t disjoint_uncovered() const {
        std::vector<char> used(h.vertex_count, 0);
        std::size_t packed = 0;
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            if (cover_count[e]) continue;
            bool free = true;
            for (auto v : h.edges[e]) free = free && !used[v];
            if (!free) continue;
            for (auto v : h.edges[e]) used[v] = 1;
            ++packed;
        }
        return packed;
    }

    // Deterministic greedy completion from the current partial cover; seeds
    // the incumbent and never worsens it.
    void greedy_complete() {
        std::vector<std::uint32_t> cc = cover_count;
        std::vector<std::uint32_t> extra;
        for (;;) {
            std::vector<std::uint32_t> gain(h.vertex_count, 0);
            bool open = false;
            for (std::size_t e = 0; e < h.edges.size(); ++e) {
                if (cc[e]) continue;
                open = true;
                for (auto v : h.edges[e]) ++gain[v];
            }
            if (!open) break;
            std::uint32_t pick = 0;
            for (std::uint32_t v = 1; v < h.vertex_count; ++v)
                if (gain[v] > gain[pick]) pick = v;
            extra.push_back(pick);
            for (auto e : vertex_edges[pick])
                if (!cc[e]) cc[e] = 1;
        }
        if (current.size() + extra.size() < best.size()) {
            std::vector<std::uint32_t> cand = current;
            cand.insert(cand.end(), extra.begin(), extra.end());
            std::sort(cand.begin(), cand.end());
            best = std::move(cand);
        }
    }

    void dfs() {
        if (aborted) return;
        ++nodes;
        if (deadline.expired()) {
            aborted = true;
            return;
        }
        // Find the minimum-size uncovered edge; detect infeasible edges
        // (all vertices forbidden) on the way.
        std::size_t branch_edge = h.edges.size();
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            if (cover_count[e]) continue;
            bool feasible = false;
            for (auto v : h.edges[e]) feasible = feasible || !forbidden[v];
            if (!feasible) return;
            if (branch_edge == h.edges.size() || h.edges[e].size() < h.edges[branch_edge].size())
                branch_edge = e;
        }
        if (branch_edge == h.edges.size()) {
            if (current.size() < best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            return;
        }
        if (current.size() + std::max<std::size_t>(disjoint_uncovered(), 1) >= best.size()) return;

        std::vector<std::uint32_t> newly_forbidden;
        for (auto v : h.edges[branch_edge]) {
            if (forbidden[v]) continue;
            take(v);
            dfs();
            untake(v);
            if (aborted) break;
            forbidden[v] = 1;
            newly_forbidden.push_back(v);
        }
        for (auto v : newly_forbidden) forbidden[v] = 0;
    }
};

}  // namespace

TauResult tau_exact(const Hypergraph& h, const Deadline& deadline) {
    TauSearch s(h, deadline);

    // Root incumbent from the greedy cover; root lower bound from packing.
    s.best.assign(h.vertex_count, 0);
    for (std::uint32_t v = 0; v < h.vertex_count; ++v) s.best[v] = v;
    s.greedy_complete();
    const std::size_t root_lower = s.disjoint_uncovered();

    s.dfs();

    TauResult r;
    r.witness.vertices = s.best;
    r.upper = s.best.size();
    r.exact = !s.aborted;
    r.lower = s.aborted ? std::min(root_lower, r.upper) : r.upper;
    return r;
}

Rat rho(const Hypergraph& h) {
    if (h.vertex_count == 0) throw std::domain_error("rho: empty vertex set");
    const TauResult t = tau_exact(h);
    return Rat(static_cast<long>(t.upper), static_cast<long>(h.vertex_count));
}

bool check_coloring(const Hypergraph& h, const Coloring& c, int k) {
    if (c.colors.size() != h.vertex_count)
        throw std::invalid_argument("coloring: wrong number of vertices");
    for (int col : c.colors)
        if (col < 1 || col > k) return false;
    for (const auto& e : h.edges) {
        bool mono = true;
        for (auto v : e) mono = mono && (c.colors[v] == c.colors[e[0]]);
        if (mono) return false;
    }
    return true;
}

namespace {

void require_no_singleton_edge(const Hypergraph& h) {
    for (const auto& e : h.edges)
        if (e.size() < 2)
            throw SizeOneEdgeError("weak coloring impossible: edge with a single vertex");
}

struct ChiSearch {
    const Hypergraph& h;
    int k;
    std::vector<std::vector<std::uint32_t>> vertex_edges;
    // Per edge: how many vertices are colored, and the common color so far
    // (0 once two distinct colors appear).
    std::vector<std::uint32_t> assigned;
    std::vector<int> unicolor;
    std::vector<int> colors;

    explicit ChiSearch(const Hypergraph& hg, int kk) : h(hg), k(kk) {
        vertex_edges.resize(h.vertex_count);
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (auto v : h.edges[e]) {
                if (v >= h.vertex_count)
                    throw std::invalid_argument("chi: vertex index out of range");
                vertex_edges[v].push_back(static_cast<std::uint32_t>(e));
            }
        assigned.assign(h.edges.size(), 0);
        unicolor.assign(h.edges.size(), 0);
        colors.assign(h.vertex_count, 0);
    }

    bool would_close_monochromatic(std::uint32_t v, int c) const {
        for (auto e : vertex_edges[v])
            if (assigned[e] + 1 == h.edges[e].size() && unicolor[e] == c) return true;
        return false;
    }

    void assign(std::uint32_t v, int c) {
        colors[v] = c;
        for (auto e : vertex_edges[v]) {
            if (assigned[e] == 0)
                unicolor[e] = c;
            else if (unicolor[e] != c)
                unicolor[e] = 0;
            ++assigned[e];
        }
    }

    void unassign(std::uint32_t v) {
        // Rebuild the state of v's edges from scratch; edges are tiny.
        colors[v] = 0;
        for (auto e : vertex_edges[v]) {
            std::uint32_t cnt = 0;
            int uni = 0;
            bool mixed = false;
            for (auto u : h.edges[e]) {
                if (colors[u] == 0) continue;
                if (cnt == 0)
                    uni = colors[u];
                else if (colors[u] != uni)
                    mixed = true;
                ++cnt;
            }
            assigned[e] = cnt;
            unicolor[e] = mixed ? 0 : uni;
        }
    }

    bool dfs(std::uint32_t v) {
        if (v == h.vertex_count) return true;
        const int limit = (v == 0) ? 1 : k;  // fix the first vertex's color
        for (int c = 1; c <= limit; ++c) {
            if (would_close_monochromatic(v, c)) continue;
            assign(v, c);
            if (dfs(v + 1)) return true;
            unassign(v);
        }
        return false;
    }
};

}  // namespace

ChiResult chi_weak(const Hypergraph& h) {
    require_no_singleton_edge(h);
    ChiResult r;
    if (h.vertex_count == 0) {
        r.chi = h.edges.empty() ? 0 : 1;
        return r;
    }
    if (h.edges.empty()) {
        r.chi = 1;
        r.coloring.colors.assign(h.vertex_count, 1);
        return r;
    }
    for (int k = 2;; ++k) {
        ChiSearch s(h, k);
        if (s.dfs(0)) {
            r.chi = k;
            r.coloring.colors = s.colors;
            return r;
        }
        if (k > static_cast<int>(h.vertex_count))
            throw std::logic_error("chi_weak: no coloring found");
    }
}

ChiResult chi_bruteforce(const Hypergraph& h, std::size_t vertex_cap) {
    if (h.vertex_count > vertex_cap) {
        std::ostringstream os;
        os << "chi_bruteforce: " << h.vertex_count << " vertices exceed cap " << vertex_cap;
        throw CapExceededError(os.str());
    }
    require_no_singleton_edge(h);
    ChiResult r;
    if (h.vertex_count == 0) {
        r.chi = h.edges.empty() ? 0 : 1;
        return r;
    }
    for (int k = 1;; ++k) {
        Coloring c;
        c.colors.assign(h.vertex_count, 1);
        for (;;) {
            if (check_coloring(h, c, k)) {
                r.chi = k;
                r.coloring = c;
                return r;
            }
            std::int64_t pos = static_cast<std::int64_t>(h.vertex_count) - 1;
            while (pos >= 0 && c.colors[pos] == k) c.colors[pos--] = 1;
            if (pos < 0) break;
            ++c.colors[pos];
        }
        if (k > static_cast<int>(h.vertex_count))
            throw std::logic_error("chi_bruteforce: no coloring found");
    }
}

}  // namespace hjpoly
