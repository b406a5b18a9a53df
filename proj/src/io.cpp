#include "lcslab/io.hpp"

#include <cctype>
#include <stdexcept>

namespace lcslab::io {

using ncalg::NcPoly;
using ncalg::Word;
using derham::DiffForm;

nlohmann::json nc_poly_to_json(const NcPoly& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : p.sorted_terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (auto l : w.letters) word.push_back((int)l + 1);
        arr.push_back({{"word", word}, {"coeff", c.to_string()}});
    }
    return arr;
}

NcPoly nc_poly_from_json(const nlohmann::json& j, int ngens)
{
    if (!j.is_array()) throw std::invalid_argument("NcPoly JSON: expected an array of terms");
    NcPoly p(ngens);
    for (const auto& term : j) {
        if (!term.contains("word") || !term.contains("coeff"))
            throw std::invalid_argument("NcPoly JSON: term needs 'word' and 'coeff'");
        Word w;
        for (const auto& idx : term["word"]) {
            int v = idx.get<int>();
            if (v < 1 || v > ngens)
                throw std::invalid_argument("NcPoly JSON: generator index out of range");
            w.letters.push_back((std::uint8_t)(v - 1));
        }
        Rat c = Rat::from_string(term["coeff"].get<std::string>());
        p.add_term(w, c);
    }
    return p;
}

nlohmann::json diff_form_to_json(const DiffForm& f)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [t, c] : f.sorted_terms()) {
        nlohmann::json expo = nlohmann::json::array();
        for (int e : t.expo) expo.push_back(e);
        nlohmann::json dx = nlohmann::json::array();
        for (int k = 0; k < (int)t.expo.size(); ++k)
            if ((t.mask >> k) & 1u) dx.push_back(k + 1);
        arr.push_back({{"expo", expo}, {"dx", dx}, {"coeff", c.to_string()}});
    }
    return arr;
}

nlohmann::json char_series_to_json(const charmod::CharSeries& s)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ab, v] : s.coeffs())
        arr.push_back({{"a", ab.first}, {"b", ab.second}, {"dim", v}});
    return nlohmann::json{{"truncation", s.truncation()}, {"coeffs", arr}};
}

nlohmann::json zpoly_to_json(const lie::ZPoly& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    int nvars;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool peek(char c)
    {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c)
    {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    long long number()
    {
        skip_ws();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000'000ll) fail("number too large");
            ++pos;
        }
        return v;
    }

    DiffForm base()
    {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            DiffForm e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (s[pos] == 'x') {
            ++pos;
            long long idx = number();
            if (idx < 1 || idx > nvars) fail("variable index out of range");
            return DiffForm::variable(nvars, (int)idx - 1);
        }
        if (std::isdigit((unsigned char)s[pos]))
            return Rat(number()) * DiffForm::one(nvars);
        fail("expected a number, variable or '('");
    }

    DiffForm factor()
    {
        DiffForm b = base();
        skip_ws();
        if (eat('^')) {
            long long e = number();
            if (e < 0 || e > 64) fail("exponent out of range");
            DiffForm r = DiffForm::one(nvars);
            for (long long i = 0; i < e; ++i) r = derham::wedge(r, b);
            return r;
        }
        return b;
    }

    DiffForm term()
    {
        DiffForm r = factor();
        while (true) {
            skip_ws();
            if (eat('*'))
                r = derham::wedge(r, factor());
            else
                break;
        }
        return r;
    }

    DiffForm expr()
    {
        skip_ws();
        bool neg = eat('-');
        DiffForm r = term();
        if (neg) r = -r;
        while (true) {
            skip_ws();
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                break;
        }
        return r;
    }
};

} // namespace

DiffForm parse_commutative_poly(std::string_view text, int nvars)
{
    Parser p{text, 0, nvars};
    DiffForm r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

} // namespace lcslab::io
