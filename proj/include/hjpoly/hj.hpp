#pragma once

// Combinatorics of words over the alphabet {1..d} and the line hypergraph
// on [d]^n: a line pattern is a word template with at least one wildcard,
// and its line is the d words obtained by substituting each letter for the
// wildcards simultaneously.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hjpoly {

using Letter = int;
inline constexpr Letter kStar = 0;  // wildcard symbol inside patterns

struct Word {
    std::vector<Letter> letters;  // each in 1..d
    friend auto operator<=>(const Word& a, const Word& b) = default;
};

struct LinePattern {
    std::vector<Letter> symbols;  // kStar or a letter in 1..d
    friend auto operator<=>(const LinePattern& a, const LinePattern& b) = default;
};

struct Line {
    std::vector<Word> words;  // the d substitution results, increasing in the letter
    friend auto operator<=>(const Line& a, const Line& b) = default;
};

// Vertices are 0..vertex_count-1; each edge is a strictly increasing index
// set. Use validate_hypergraph on untrusted data.
struct Hypergraph {
    std::uint32_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> edges;
    friend bool operator==(const Hypergraph& a, const Hypergraph& b) = default;
};

// Throws std::invalid_argument on out-of-range indices, unsorted or
// duplicated entries within an edge, empty edges, or duplicate edges.
void validate_hypergraph(const Hypergraph& h);

bool valid_word(const Word& w, int d, int n);
bool valid_pattern(const LinePattern& p, int d, int n);
std::size_t star_count(const LinePattern& p);

// Replaces every wildcard with the letter k (1 <= k <= d).
Word substitute(const LinePattern& p, Letter k, int d);

// All d substitutions, ordered by the substituted letter.
Line line_of(const LinePattern& p, int d);

inline constexpr std::size_t kDefaultLineCap = 4'000'000;

// All patterns over {1..d, *} of length n with at least one wildcard, in
// lexicographic order with * below every letter. Throws CapExceededError
// when (d+1)^n exceeds the cap.
std::vector<LinePattern> enumerate_patterns(int d, int n, std::size_t cap = kDefaultLineCap);
std::vector<Line> enumerate_lines(int d, int n, std::size_t cap = kDefaultLineCap);

// Rank of a word in the lexicographic order of [d]^n (base-d digits,
// leftmost position most significant).
std::uint64_t word_index(const Word& w, int d);
Word word_from_index(std::uint64_t index, int d, int n);

// Printable forms: plain digit strings for d <= 9 ("2*1"), comma-separated
// tokens for larger alphabets ("12,*,3").
std::string word_string(const Word& w, int d);
std::string pattern_string(const LinePattern& p, int d);
Word word_from_string(const std::string& s, int d, int n);
LinePattern pattern_from_string(const std::string& s, int d, int n);

// The line hypergraph on [d]^n together with the pattern of each edge;
// edges[i] is the sorted vertex set of patterns[i]'s line.
struct HJHypergraph {
    int d = 0;
    int n = 0;
    Hypergraph graph;
    std::vector<LinePattern> patterns;
};

HJHypergraph hj_hypergraph(int d, int n, std::size_t cap = kDefaultLineCap);

}  // namespace hjpoly
