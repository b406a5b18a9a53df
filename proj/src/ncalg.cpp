#include "lcslab/ncalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcslab::ncalg {

int total_degree(const MultiDegree& d)
{
    int t = 0;
    for (int c : d) t += c;
    return t;
}

bool strictly_positive(const MultiDegree& d)
{
    for (int c : d)
        if (c <= 0) return false;
    return true;
}

Word Word::concat(const Word& other) const
{
    Word r;
    r.letters.reserve(letters.size() + other.letters.size());
    r.letters = letters;
    r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
    return r;
}

MultiDegree Word::multidegree(int ngens) const
{
    MultiDegree d(ngens, 0);
    for (auto c : letters) {
        if (c >= ngens) throw std::invalid_argument("Word: letter out of range");
        ++d[c];
    }
    return d;
}

bool deglex_less(const Word& a, const Word& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
}

NcPoly::NcPoly(int ngens) : ngens_(ngens)
{
    if (ngens < 1) throw std::invalid_argument("NcPoly: ngens must be positive");
}

NcPoly NcPoly::one(int ngens)
{
    NcPoly p(ngens);
    p.terms_.emplace(Word(), Rat(1));
    return p;
}

NcPoly NcPoly::generator(int ngens, int i)
{
    if (i < 0 || i >= ngens) throw std::invalid_argument("NcPoly: generator index out of range");
    NcPoly p(ngens);
    p.terms_.emplace(Word({(std::uint8_t)i}), Rat(1));
    return p;
}

NcPoly NcPoly::monomial(int ngens, Word w, Rat c)
{
    NcPoly p(ngens);
    for (auto l : w.letters)
        if (l >= ngens) throw std::invalid_argument("NcPoly: letter out of range");
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

Rat NcPoly::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rat() : it->second;
}

void NcPoly::add_term(const Word& w, const Rat& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<std::pair<Word, Rat>> NcPoly::sorted_terms() const
{
    std::vector<std::pair<Word, Rat>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return deglex_less(a.first, b.first); });
    return v;
}

NcPoly NcPoly::operator-() const
{
    NcPoly r(ngens_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& b)
{
    if (ngens_ != b.ngens_) throw std::invalid_argument("NcPoly: mismatched generator counts");
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& b)
{
    if (ngens_ != b.ngens_) throw std::invalid_argument("NcPoly: mismatched generator counts");
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b)
{
    NcPoly r = a;
    r += b;
    return r;
}

NcPoly operator-(const NcPoly& a, const NcPoly& b)
{
    NcPoly r = a;
    r -= b;
    return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) { return mul(a, b); }

NcPoly operator*(const Rat& c, const NcPoly& p)
{
    NcPoly r(p.ngens_);
    if (c.is_zero()) return r;
    for (const auto& [w, pc] : p.terms_) r.terms_.emplace(w, c * pc);
    return r;
}

bool operator==(const NcPoly& a, const NcPoly& b)
{
    if (a.ngens_ != b.ngens_ || a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [w, c] : a.terms_) {
        auto it = b.terms_.find(w);
        if (it == b.terms_.end() || it->second != c) return false;
    }
    return true;
}

int NcPoly::max_total_degree() const
{
    int m = -1;
    for (const auto& [w, c] : terms_) m = std::max(m, (int)w.size());
    return m;
}

std::optional<MultiDegree> NcPoly::multidegree() const
{
    std::optional<MultiDegree> d;
    for (const auto& [w, c] : terms_) {
        MultiDegree wd = w.multidegree(ngens_);
        if (!d)
            d = wd;
        else if (*d != wd)
            return std::nullopt;
    }
    return d;
}

NcPoly mul(const NcPoly& a, const NcPoly& b)
{
    if (a.ngens() != b.ngens()) throw std::invalid_argument("mul: mismatched generator counts");
    NcPoly r(a.ngens());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa.concat(wb), ca * cb);
    return r;
}

NcPoly bracket(const NcPoly& a, const NcPoly& b) { return mul(a, b) - mul(b, a); }

namespace {

NcPoly x_power(int k) // x_1^k in two generators
{
    std::vector<std::uint8_t> ls(k, 0);
    return NcPoly::monomial(2, Word(std::move(ls)));
}

NcPoly y_power(int l)
{
    std::vector<std::uint8_t> ls(l, 1);
    return NcPoly::monomial(2, Word(std::move(ls)));
}

} // namespace

NcPoly build_b(int l, int i, int j, int k)
{
    if (l < 1 || k < 1 || i < 0 || j < 0)
        throw std::invalid_argument("build_b: need l >= 1, k >= 1, i, j >= 0");
    NcPoly x = NcPoly::generator(2, 0);
    NcPoly y = NcPoly::generator(2, 1);
    NcPoly r = bracket(x_power(k), y_power(l));
    for (int t = 0; t < j; ++t) r = bracket(x, r);
    r = bracket(y, r);
    for (int t = 0; t < i; ++t) r = bracket(x, r);
    return r;
}

NcPoly build_b2(int l, int i, int j)
{
    if (l < 1 || j < 1 || i < 0)
        throw std::invalid_argument("build_b2: need l >= 1, j >= 1, i >= 0");
    NcPoly x = NcPoly::generator(2, 0);
    NcPoly r = bracket(x_power(j), y_power(l));
    for (int t = 0; t < i; ++t) r = bracket(x, r);
    return r;
}

NcPoly build_c(int a, int b, int i, int j)
{
    if (j < 1 || i < 1 || a < 0 || b < 0)
        throw std::invalid_argument("build_c: need i, j >= 1, a, b >= 0");
    NcPoly x = NcPoly::generator(2, 0);
    NcPoly y = NcPoly::generator(2, 1);
    NcPoly r = bracket(x_power(i), y_power(j));
    for (int t = 0; t < b; ++t) r = bracket(y, r);
    for (int t = 0; t < a; ++t) r = bracket(x, r);
    return r;
}

NcPoly partial(const NcPoly& p, int gen)
{
    if (gen < 0 || gen >= p.ngens()) throw std::invalid_argument("partial: index out of range");
    NcPoly r(p.ngens());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w.letters[pos] != gen) continue;
            Word u;
            u.letters.reserve(w.size() - 1);
            u.letters.assign(w.letters.begin(), w.letters.begin() + pos);
            u.letters.insert(u.letters.end(), w.letters.begin() + pos + 1, w.letters.end());
            r.add_term(u, c);
        }
    }
    return r;
}

NcPoly gl_action(int i, int j, const NcPoly& p)
{
    if (i < 0 || i >= p.ngens() || j < 0 || j >= p.ngens())
        throw std::invalid_argument("gl_action: index out of range");
    NcPoly r(p.ngens());
    for (const auto& [w, c] : p.terms()) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            if (w.letters[pos] != j) continue;
            Word u = w;
            u.letters[pos] = (std::uint8_t)i;
            r.add_term(u, c);
        }
    }
    return r;
}

bool word_contains_forbidden_power(const Word& w, const std::vector<int>& powers)
{
    int run = 0;
    int prev = -1;
    for (auto c : w.letters) {
        if (c == prev)
            ++run;
        else {
            run = 1;
            prev = c;
        }
        if (c < powers.size() && run >= powers[c]) return true;
    }
    return false;
}

NcPoly monomial_quotient_reduce(const NcPoly& p, const std::vector<int>& powers)
{
    if ((int)powers.size() != p.ngens())
        throw std::invalid_argument("monomial_quotient_reduce: powers length must equal ngens");
    for (int m : powers)
        if (m < 1) throw std::invalid_argument("monomial_quotient_reduce: powers must be >= 1");
    NcPoly r(p.ngens());
    for (const auto& [w, c] : p.terms())
        if (!word_contains_forbidden_power(w, powers)) r.add_term(w, c);
    return r;
}

namespace {

void enumerate_words(MultiDegree& remaining, Word& acc, std::vector<Word>& out)
{
    bool done = true;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] > 0) {
            done = false;
            --remaining[i];
            acc.letters.push_back((std::uint8_t)i);
            enumerate_words(remaining, acc, out);
            acc.letters.pop_back();
            ++remaining[i];
        }
    }
    if (done) out.push_back(acc);
}

} // namespace

std::vector<Word> words_of_multidegree(const MultiDegree& d)
{
    for (int c : d)
        if (c < 0) throw std::invalid_argument("words_of_multidegree: negative entry");
    MultiDegree rem = d;
    Word acc;
    std::vector<Word> out;
    enumerate_words(rem, acc, out);
    return out;
}

std::vector<Word> words_of_total_degree(int ngens, int l)
{
    std::vector<Word> out;
    Word acc;
    // counting in base ngens, shortest-first = deglex
    std::vector<int> idx(l, 0);
    if (l == 0) {
        out.push_back(Word());
        return out;
    }
    while (true) {
        Word w;
        w.letters.reserve(l);
        for (int i = 0; i < l; ++i) w.letters.push_back((std::uint8_t)idx[i]);
        out.push_back(std::move(w));
        int pos = l - 1;
        while (pos >= 0 && idx[pos] == ngens - 1) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
    }
    return out;
}

std::vector<std::vector<int>> pn_row_order(int n)
{
    if (n < 2) throw std::invalid_argument("pn_row_order: need n >= 2");
    std::vector<std::vector<int>> rows;
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i + 1;
    rows.push_back(id);
    for (int k = 0; k + 3 <= n; ++k) {
        // compose existing rows with the transposition (k+2, k+3), applied first
        std::size_t count = rows.size();
        for (std::size_t j = 0; j < count; ++j) {
            std::vector<int> p = rows[j];
            std::swap(p[k + 1], p[k + 2]); // positions of k+2 and k+3 (1-based values)
            rows.push_back(std::move(p));
        }
    }
    return rows;
}

} // namespace lcslab::ncalg
