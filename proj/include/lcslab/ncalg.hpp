#pragma once

#include "lcslab/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace lcslab::ncalg {

// Occurrence counts per generator; total degree is the sum of entries.
using MultiDegree = std::vector<int>;

int total_degree(const MultiDegree& d);
bool strictly_positive(const MultiDegree& d);

// A word over generators x_1..x_n, stored as 0-based indices. The empty
// word is the multiplicative unit.
struct Word {
    std::vector<std::uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint8_t> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Word concat(const Word& other) const;
    MultiDegree multidegree(int ngens) const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
};

// degree-lexicographic order with x_1 < x_2 < ... < x_n
bool deglex_less(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto c : w.letters) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Sparse noncommutative polynomial over Q. No zero coefficients are stored.
class NcPoly {
public:
    explicit NcPoly(int ngens = 1);
    static NcPoly zero(int ngens) { return NcPoly(ngens); }
    static NcPoly one(int ngens);
    static NcPoly generator(int ngens, int i); // 0-based index
    static NcPoly monomial(int ngens, Word w, Rat c = Rat(1));

    int ngens() const { return ngens_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Word& w) const;
    void add_term(const Word& w, const Rat& c); // accumulates, drops zeros

    const std::unordered_map<Word, Rat, WordHash>& terms() const { return terms_; }
    std::vector<std::pair<Word, Rat>> sorted_terms() const; // deglex order

    NcPoly operator-() const;
    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    NcPoly& operator+=(const NcPoly& b);
    NcPoly& operator-=(const NcPoly& b);
    friend NcPoly operator*(const Rat& c, const NcPoly& p);

    friend bool operator==(const NcPoly& a, const NcPoly& b);
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    int max_total_degree() const; // -1 for the zero polynomial
    // The common multidegree of all terms, if the polynomial is homogeneous.
    std::optional<MultiDegree> multidegree() const;

private:
    int ngens_;
    std::unordered_map<Word, Rat, WordHash> terms_;
};

NcPoly mul(const NcPoly& a, const NcPoly& b);
NcPoly bracket(const NcPoly& a, const NcPoly& b); // ab - ba

// ad_x^i ( ad_y ( ad_x^j ( ad_{x^k} (y^l) ) ) )  in generators x=x_1, y=x_2
NcPoly build_b(int l, int i, int j, int k);
// ad_x^i ( ad_{x^j} (y^l) )
NcPoly build_b2(int l, int i, int j);
// ad_x^a ( ad_y^b ( ad_{x^i} (y^j) ) )
NcPoly build_c(int a, int b, int i, int j);

// Derivation sending x_gen to 1 and the other generators to 0: on a word,
// the sum over occurrences of x_gen of the word with that occurrence deleted.
NcPoly partial(const NcPoly& p, int gen);

// gl_n action: E_{ij} is the derivation sending x_j to x_i.
NcPoly gl_action(int i, int j, const NcPoly& p);

// Deletes every term whose word contains x_i^{powers[i]} as a contiguous
// subword (exact reduction modulo the two-sided monomial ideal).
NcPoly monomial_quotient_reduce(const NcPoly& p, const std::vector<int>& powers);
bool word_contains_forbidden_power(const Word& w, const std::vector<int>& powers);

// All words of the given multidegree in lexicographic order.
std::vector<Word> words_of_multidegree(const MultiDegree& d);
// All words of total degree l over n generators, deglex order.
std::vector<Word> words_of_total_degree(int ngens, int l);

// The 2^{n-2} permutations (2,3)^{d2}(3,4)^{d3}...(n-1,n)^{d_{n-1}} of
// {1..n}, in the recursive order that starts with the identity and appends
// each block composed with the next adjacent transposition. Entries are
// 1-based sequences (p(1),...,p(n)).
std::vector<std::vector<int>> pn_row_order(int n);

} // namespace lcslab::ncalg
