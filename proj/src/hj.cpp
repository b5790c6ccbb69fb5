#include "hjpoly/hj.hpp"

#include "hjpoly/errors.hpp"
#include "hjpoly/rat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hjpoly {

namespace {

void check_alphabet(int d, int n) {
    if (d < 1) throw std::invalid_argument("alphabet size d must be >= 1");
    if (n < 1) throw std::invalid_argument("word length n must be >= 1");
}

}  // namespace

void validate_hypergraph(const Hypergraph& h) {
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& e : h.edges) {
        if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= h.vertex_count)
                throw std::invalid_argument("hypergraph: vertex index out of range");
            if (i > 0 && e[i - 1] >= e[i])
                throw std::invalid_argument("hypergraph: edge not strictly increasing");
        }
        if (!seen.insert(e).second) throw std::invalid_argument("hypergraph: duplicate edge");
    }
}

bool valid_word(const Word& w, int d, int n) {
    if (static_cast<int>(w.letters.size()) != n) return false;
    for (Letter c : w.letters)
        if (c < 1 || c > d) return false;
    return true;
}

bool valid_pattern(const LinePattern& p, int d, int n) {
    if (static_cast<int>(p.symbols.size()) != n) return false;
    bool star = false;
    for (Letter c : p.symbols) {
        if (c == kStar)
            star = true;
        else if (c < 1 || c > d)
            return false;
    }
    return star;
}

std::size_t star_count(const LinePattern& p) {
    return static_cast<std::size_t>(std::count(p.symbols.begin(), p.symbols.end(), kStar));
}

Word substitute(const LinePattern& p, Letter k, int d) {
    if (k < 1 || k > d) throw std::invalid_argument("substitute: letter out of range");
    Word w;
    w.letters.reserve(p.symbols.size());
    for (Letter c : p.symbols) w.letters.push_back(c == kStar ? k : c);
    return w;
}

Line line_of(const LinePattern& p, int d) {
    Line l;
    l.words.reserve(d);
    for (Letter k = 1; k <= d; ++k) l.words.push_back(substitute(p, k, d));
    return l;
}

std::vector<LinePattern> enumerate_patterns(int d, int n, std::size_t cap) {
    check_alphabet(d, n);
    const mpz_class total = pow_mpz(static_cast<unsigned long>(d) + 1, static_cast<unsigned long>(n));
    if (total > static_cast<unsigned long>(cap)) {
        std::ostringstream os;
        os << "enumerate_patterns: (d+1)^n = " << total.get_str() << " exceeds cap " << cap;
        throw CapExceededError(os.str());
    }

    // Odometer over symbols 0..d per position; 0 encodes the wildcard, so
    // numeric order is lexicographic order with * below every letter.
    std::vector<LinePattern> out;
    std::vector<Letter> cur(n, 0);
    for (;;) {
        if (std::find(cur.begin(), cur.end(), kStar) != cur.end())
            out.push_back(LinePattern{cur});
        int pos = n - 1;
        while (pos >= 0 && cur[pos] == d) cur[pos--] = 0;
        if (pos < 0) break;
        ++cur[pos];
    }
    return out;
}

std::vector<Line> enumerate_lines(int d, int n, std::size_t cap) {
    std::vector<Line> out;
    for (const auto& p : enumerate_patterns(d, n, cap)) out.push_back(line_of(p, d));
    return out;
}

std::uint64_t word_index(const Word& w, int d) {
    std::uint64_t idx = 0;
    for (Letter c : w.letters) {
        if (c < 1 || c > d) throw std::invalid_argument("word_index: letter out of range");
        idx = idx * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(c - 1);
    }
    return idx;
}

Word word_from_index(std::uint64_t index, int d, int n) {
    check_alphabet(d, n);
    Word w;
    w.letters.assign(n, 1);
    for (int pos = n - 1; pos >= 0; --pos) {
        w.letters[pos] = static_cast<Letter>(index % d) + 1;
        index /= d;
    }
    if (index != 0) throw std::invalid_argument("word_from_index: index out of range");
    return w;
}

namespace {

std::string symbols_to_string(const std::vector<Letter>& symbols, int d) {
    std::ostringstream os;
    bool first = true;
    for (Letter c : symbols) {
        if (d > 9 && !first) os << ',';
        first = false;
        if (c == kStar)
            os << '*';
        else
            os << c;
    }
    return os.str();
}

std::vector<Letter> symbols_from_string(const std::string& s, int d, int n, bool allow_star) {
    std::vector<Letter> symbols;
    std::vector<std::string> tokens;
    if (d > 9) {
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                tokens.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        tokens.push_back(cur);
    } else {
        for (char ch : s) tokens.push_back(std::string(1, ch));
    }
    for (const auto& t : tokens) {
        if (t == "*" && allow_star) {
            symbols.push_back(kStar);
            continue;
        }
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed symbol '" + t + "' in '" + s + "'");
        const long v = std::stol(t);
        if (v < 1 || v > d) throw std::invalid_argument("letter out of range in '" + s + "'");
        symbols.push_back(static_cast<Letter>(v));
    }
    if (static_cast<int>(symbols.size()) != n)
        throw std::invalid_argument("wrong length in '" + s + "'");
    return symbols;
}

}  // namespace

std::string word_string(const Word& w, int d) { return symbols_to_string(w.letters, d); }

std::string pattern_string(const LinePattern& p, int d) { return symbols_to_string(p.symbols, d); }

Word word_from_string(const std::string& s, int d, int n) {
    check_alphabet(d, n);
    return Word{symbols_from_string(s, d, n, false)};
}

LinePattern pattern_from_string(const std::string& s, int d, int n) {
    check_alphabet(d, n);
    LinePattern p{symbols_from_string(s, d, n, true)};
    if (star_count(p) == 0) throw std::invalid_argument("pattern without wildcard: '" + s + "'");
    return p;
}

HJHypergraph hj_hypergraph(int d, int n, std::size_t cap) {
    HJHypergraph hj;
    hj.d = d;
    hj.n = n;
    hj.patterns = enumerate_patterns(d, n, cap);

    const mpz_class vertices = pow_mpz(static_cast<unsigned long>(d), static_cast<unsigned long>(n));
    if (vertices > 0xFFFFFFFFul || vertices > static_cast<unsigned long>(cap)) {
        std::ostringstream os;
        os << "hj_hypergraph: d^n = " << vertices.get_str() << " exceeds cap " << cap;
        throw CapExceededError(os.str());
    }
    hj.graph.vertex_count = static_cast<std::uint32_t>(vertices.get_ui());

    hj.graph.edges.reserve(hj.patterns.size());
    for (const auto& p : hj.patterns) {
        std::vector<std::uint32_t> edge;
        edge.reserve(d);
        for (Letter k = 1; k <= d; ++k)
            edge.push_back(static_cast<std::uint32_t>(word_index(substitute(p, k, d), d)));
        std::sort(edge.begin(), edge.end());
        hj.graph.edges.push_back(std::move(edge));
    }
    return hj;
}

}  // namespace hjpoly
