// lcslab: exact computations around lower central series of associative
// algebras, polynomial differential forms with Fedosov products, bigraded
// characters, and root-system counts. JSON (default) or CSV on stdout,
// diagnostics on stderr. Exit codes: 0 success, 1 computation error,
// 2 usage error.

#include "lcslab/charmod.hpp"
#include "lcslab/derham.hpp"
#include "lcslab/fs.hpp"
#include "lcslab/io.hpp"
#include "lcslab/lcs.hpp"
#include "lcslab/lie.hpp"
#include "lcslab/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace lcslab;

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in integer list '" + s + "'");
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

lcs::AlgebraSpec spec_from_options(int n, const std::string& powers)
{
    if (powers.empty()) return lcs::AlgebraSpec::free_algebra(n);
    auto m = parse_int_list(powers);
    if ((int)m.size() != n)
        throw std::invalid_argument("--powers must list one exponent per generator");
    return lcs::AlgebraSpec::with_powers(m);
}

std::vector<derham::DiffForm> parse_relation_list(const std::string& text, int nvars)
{
    std::vector<derham::DiffForm> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(io::parse_commutative_poly(item, nvars));
    }
    if (out.empty()) throw std::invalid_argument("no relations given");
    return out;
}

lie::RootSystem root_system_from_options(const std::string& type, const std::string& roots,
                                         const std::string& degrees, long long weyl)
{
    if (!type.empty()) {
        if (type.size() < 2 || (type[0] != 'A' && type[0] != 'a'))
            throw std::invalid_argument("only type A root systems are built in (A1..A8)");
        return lie::RootSystem::type_a(std::stoi(type.substr(1)));
    }
    if (roots.empty()) throw std::invalid_argument("need --type or --roots");
    lie::RootSystem r;
    std::stringstream ss(roots);
    std::string item;
    while (std::getline(ss, item, ';')) r.roots.push_back(parse_int_list(item));
    r.weyl_order = weyl;
    if (!degrees.empty()) {
        for (int d : parse_int_list(degrees)) r.degrees.push_back(d);
    }
    r.validate();
    return r;
}

std::ostream* g_out = &std::cout;

void emit(const json& j) { (*g_out) << j.dump(2) << "\n"; }

void enumerate_degrees(int n, int degmax, const std::function<void(const ncalg::MultiDegree&)>& fn)
{
    ncalg::MultiDegree acc(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos + 1 == n) {
            acc[pos] = rest;
            fn(acc);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            acc[pos] = v;
            rec(pos + 1, rest - v);
        }
    };
    for (int l = 1; l <= degmax; ++l) rec(0, l);
}

int run(int argc, char** argv)
{
    CLI::App app{"exact lower-central-series and differential-form computations"};
    app.require_subcommand(1);

    int exit_code = 0;
    auto output_path = std::make_shared<std::string>();
    app.add_option("-o,--output", *output_path, "write results to a file instead of stdout");

    // ---- lcs ----------------------------------------------------------
    auto* lcs_cmd = app.add_subcommand("lcs", "lower central series components and bases");
    lcs_cmd->require_subcommand(1);

    {
        auto* dims = lcs_cmd->add_subcommand("dims", "dimensions of L_k[d] and B_k[d]");
        auto n = std::make_shared<int>(2);
        auto k = std::make_shared<int>(2);
        auto deg = std::make_shared<std::string>();
        auto powers = std::make_shared<std::string>();
        dims->add_option("--n", *n, "generator count")->required();
        dims->add_option("--k", *k, "series index (k >= 1)")->required();
        dims->add_option("--deg", *deg, "multidegree, e.g. 5,2")->required();
        dims->add_option("--powers", *powers, "monomial relation exponents m_1,..,m_n");
        dims->callback([=]() {
            lcs::Engine eng;
            auto spec = spec_from_options(*n, *powers);
            auto d = parse_int_list(*deg);
            int lk = eng.l_dim(spec, *k, d);
            int lk1 = eng.l_dim(spec, *k + 1, d);
            emit(json{{"n", *n},
                      {"k", *k},
                      {"deg", d},
                      {"dim_L_k", lk},
                      {"dim_L_k_plus_1", lk1},
                      {"dim_B_k", lk - lk1}});
        });
    }

    {
        auto* basis = lcs_cmd->add_subcommand("b2-basis", "canonical bracket basis of B_2[d]");
        auto n = std::make_shared<int>(2);
        auto deg = std::make_shared<std::string>();
        basis->add_option("--n", *n, "generator count")->required();
        basis->add_option("--deg", *deg, "strictly positive multidegree")->required();
        basis->callback([=]() {
            auto d = parse_int_list(*deg);
            json arr = json::array();
            for (const auto& p : lcs::canonical_b2_basis(*n, d))
                arr.push_back(io::nc_poly_to_json(p));
            emit(json{{"n", *n}, {"deg", d}, {"basis", arr}});
        });
    }

    {
        auto* table = lcs_cmd->add_subcommand("table", "table of B_k dimensions");
        auto n = std::make_shared<int>(2);
        auto kmax = std::make_shared<int>(4);
        auto degmax = std::make_shared<int>(8);
        auto powers = std::make_shared<std::string>();
        auto fmt = std::make_shared<std::string>("json");
        table->add_option("--n", *n, "generator count")->required();
        table->add_option("--kmax", *kmax, "largest series index");
        table->add_option("--degmax", *degmax, "largest total degree");
        table->add_option("--powers", *powers, "monomial relation exponents");
        table->add_option("--format", *fmt, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        table->callback([=]() {
            lcs::Engine eng;
            auto spec = spec_from_options(*n, *powers);
            std::vector<ncalg::MultiDegree> degs;
            enumerate_degrees(*n, *degmax, [&](const ncalg::MultiDegree& d) { degs.push_back(d); });
            std::vector<std::tuple<int, ncalg::MultiDegree, int>> rows;
            for (int k = 1; k <= *kmax; ++k)
                for (const auto& d : degs) rows.emplace_back(k, d, eng.b_dim(spec, k, d));
            if (*fmt == "csv") {
                if (*n == 2)
                    (*g_out) << "k,deg_x,deg_y,dim\n";
                else {
                    (*g_out) << "k";
                    for (int i = 1; i <= *n; ++i) (*g_out) << ",deg_" << i;
                    (*g_out) << ",dim\n";
                }
                for (const auto& [k, d, v] : rows) {
                    (*g_out) << k;
                    for (int c : d) (*g_out) << "," << c;
                    (*g_out) << "," << v << "\n";
                }
            } else {
                json arr = json::array();
                for (const auto& [k, d, v] : rows)
                    arr.push_back(json{{"k", k}, {"deg", d}, {"dim", v}});
                emit(json{{"n", *n}, {"kmax", *kmax}, {"degmax", *degmax}, {"table", arr}});
            }
        });
    }

    // ---- forms --------------------------------------------------------
    auto* forms_cmd = app.add_subcommand("forms", "polynomial differential forms");
    forms_cmd->require_subcommand(1);

    {
        auto* cd = forms_cmd->add_subcommand("closed-dim", "closed/exact p-form dimensions");
        auto n = std::make_shared<int>(3);
        auto p = std::make_shared<int>(2);
        auto deg = std::make_shared<std::string>();
        cd->add_option("--n", *n, "variable count")->required();
        cd->add_option("--p", *p, "form degree")->required();
        cd->add_option("--deg", *deg, "multidegree")->required();
        cd->callback([=]() {
            auto d = parse_int_list(*deg);
            emit(json{{"n", *n},
                      {"p", *p},
                      {"deg", d},
                      {"closed_dim", derham::closed_dim(*n, *p, d)},
                      {"exact_dim", derham::exact_dim(*n, *p, d)}});
        });
    }

    {
        auto* eps = forms_cmd->add_subcommand("epsilon", "sign matrix and its determinant");
        auto n = std::make_shared<int>(3);
        eps->add_option("--n", *n, "parameter (n >= 3)")->required();
        eps->callback([=]() {
            auto e = derham::epsilon_matrix(*n);
            json cols = json::array();
            for (const auto& s : e.col_subsets) cols.push_back(s);
            json rows = json::array();
            for (const auto& p : e.row_perms) rows.push_back(p);
            emit(json{{"n", e.n},
                      {"size", e.entries.size()},
                      {"matrix", e.entries},
                      {"columns", cols},
                      {"row_permutations", rows},
                      {"det", e.det.to_string()},
                      {"invertible", !e.det.is_zero()}});
        });
    }

    {
        auto* ra = forms_cmd->add_subcommand("rA", "filtered quotient complex of a relation ideal");
        auto n = std::make_shared<int>(3);
        auto rels = std::make_shared<std::string>();
        auto cutoff = std::make_shared<int>(8);
        auto fmt = std::make_shared<std::string>("json");
        ra->add_option("--n", *n, "variable count")->required();
        ra->add_option("--relations", *rels, "relation polynomials, ';'-separated")->required();
        ra->add_option("--cutoff", *cutoff, "total-degree cutoff");
        ra->add_option("--format", *fmt, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        ra->callback([=]() {
            if (*cutoff > lcs::default_degree_ceiling())
                throw lcs::DegreeCeilingError("cutoff exceeds the degree ceiling");
            auto gens = parse_relation_list(*rels, *n);
            derham::RAComplex complex(*n, gens, *cutoff);
            if (*fmt == "csv") {
                (*g_out) << (complex.parity_only() ? "parity" : "p")
                         << ",degree,ambient,ideal,quotient,closed,exact,cohomology\n";
                for (int p = 0; p < complex.block_count(); ++p)
                    for (int lvl = 0; lvl <= *cutoff; ++lvl) {
                        (*g_out) << p << "," << lvl << "," << complex.ambient_dim(p, lvl) << ","
                                 << complex.ideal_dim(p, lvl) << ","
                                 << complex.quotient_dim(p, lvl) << ","
                                 << complex.closed_dim(p, lvl) << ","
                                 << complex.exact_dim(p, lvl) << ",";
                        if (lvl <= *cutoff - 1)
                            (*g_out) << complex.cohomology_dim(p, lvl);
                        else
                            (*g_out) << "unknown";
                        (*g_out) << "\n";
                    }
                return;
            }
            json blocks = json::array();
            for (int p = 0; p < complex.block_count(); ++p) {
                json levels = json::array();
                for (int lvl = 0; lvl <= *cutoff; ++lvl) {
                    json row{{"degree", lvl},
                             {"ambient", complex.ambient_dim(p, lvl)},
                             {"ideal", complex.ideal_dim(p, lvl)},
                             {"quotient", complex.quotient_dim(p, lvl)},
                             {"closed", complex.closed_dim(p, lvl)},
                             {"exact", complex.exact_dim(p, lvl)}};
                    if (lvl <= *cutoff - 1)
                        row["cohomology"] = complex.cohomology_dim(p, lvl);
                    else
                        row["cohomology"] = "unknown"; // truncation boundary
                    levels.push_back(std::move(row));
                }
                blocks.push_back(json{{complex.parity_only() ? "parity" : "p", p},
                                      {"levels", levels}});
            }
            emit(json{{"nvars", *n},
                      {"cutoff", *cutoff},
                      {"form_graded", !complex.parity_only()},
                      {"blocks", blocks}});
        });
    }

    // ---- fs -----------------------------------------------------------
    auto* fs_cmd = app.add_subcommand("fs", "even-forms homomorphism and B_2 pipeline");
    fs_cmd->require_subcommand(1);

    {
        auto* phi = fs_cmd->add_subcommand("phi", "image of a polynomial under the homomorphism");
        auto n = std::make_shared<int>(2);
        auto poly = std::make_shared<std::string>();
        phi->add_option("--n", *n, "variable count")->required();
        phi->add_option("--poly", *poly, "NcPoly JSON (inline, or @file)")->required();
        phi->callback([=]() {
            std::string text = *poly;
            if (!text.empty() && text[0] == '@') {
                std::ifstream in(text.substr(1));
                if (!in) throw std::invalid_argument("cannot read " + text.substr(1));
                std::stringstream ss;
                ss << in.rdbuf();
                text = ss.str();
            }
            auto p = io::nc_poly_from_json(json::parse(text), *n);
            if (p.max_total_degree() > lcs::default_degree_ceiling())
                throw lcs::DegreeCeilingError("input degree exceeds the degree ceiling");
            emit(json{{"n", *n}, {"phi", io::diff_form_to_json(fs::phi(p, *n))}});
        });
    }

    {
        auto* b2 = fs_cmd->add_subcommand("b2", "B_2 dimensions for a relation quotient");
        auto n = std::make_shared<int>(3);
        auto rels = std::make_shared<std::string>();
        auto cutoff = std::make_shared<int>(8);
        b2->add_option("--n", *n, "variable count")->required();
        b2->add_option("--relations", *rels, "relation polynomials, ';'-separated")->required();
        b2->add_option("--cutoff", *cutoff, "total-degree cutoff");
        b2->callback([=]() {
            if (*cutoff > lcs::default_degree_ceiling())
                throw lcs::DegreeCeilingError("cutoff exceeds the degree ceiling");
            auto gens = parse_relation_list(*rels, *n);
            auto table = fs::pseudosmooth_b2_dims(*n, gens, *cutoff);
            json levels = json::array();
            for (int lvl = 0; lvl < (int)table.value.size(); ++lvl)
                levels.push_back(json{{"degree", lvl},
                                      {"h_odd", table.h_odd[lvl]},
                                      {"h_even", table.h_even[lvl]},
                                      {table.identified ? "b2_dim" : "b2_upper_bound",
                                       table.value[lvl]}});
            json out{{"nvars", *n},
                     {"cutoff", *cutoff},
                     {"identified", table.identified},
                     {"levels", levels}};
            if (!table.identified)
                out["note"] = "odd cohomology is nonzero: values bound B_2 from above only "
                              "(the image of cyclic homology is not computed)";
            emit(out);
        });
    }

    {
        auto* check = fs_cmd->add_subcommand("check", "equivalence checks at graded components");
        auto which = std::make_shared<std::string>();
        auto n = std::make_shared<int>(2);
        auto degmax = std::make_shared<int>(6);
        auto powers = std::make_shared<std::string>();
        check->add_option("what", *which, "tripcom, imd or hc1")
            ->required()
            ->check(CLI::IsMember({"tripcom", "imd", "hc1"}));
        check->add_option("--n", *n, "generator count")->required();
        check->add_option("--degmax", *degmax, "largest total degree");
        check->add_option("--powers", *powers, "monomial relation exponents");
        check->callback([=]() {
            lcs::Engine eng;
            auto spec = spec_from_options(*n, *powers);
            json rows = json::array();
            bool all_ok = true;
            enumerate_degrees(*n, *degmax, [&](const ncalg::MultiDegree& d) {
                json row{{"deg", d}};
                if (*which == "tripcom") {
                    bool ok = fs::tripcom_check(spec, d, eng);
                    row["pass"] = ok;
                    all_ok = all_ok && ok;
                } else if (*which == "imd") {
                    bool ok = fs::imd_check(spec, d, eng);
                    row["pass"] = ok;
                    all_ok = all_ok && ok;
                } else {
                    row["hc1_dim"] = fs::hc1_dim(spec, d, eng);
                }
                rows.push_back(std::move(row));
            });
            json out{{"check", *which}, {"n", *n}, {"degmax", *degmax}, {"rows", rows}};
            if (*which != "hc1") out["all_pass"] = all_ok;
            emit(out);
        });
    }

    // ---- char ---------------------------------------------------------
    auto* char_cmd = app.add_subcommand("char", "bigraded character series");
    char_cmd->require_subcommand(1);

    {
        auto* f = char_cmd->add_subcommand("F", "character of the two-row module (p,k)");
        auto p = std::make_shared<int>(2);
        auto k = std::make_shared<int>(1);
        auto trunc = std::make_shared<int>(10);
        f->add_option("--p", *p, "first row")->required();
        f->add_option("--k", *k, "second row")->required();
        f->add_option("--trunc", *trunc, "total-degree truncation");
        f->callback([=]() { emit(io::char_series_to_json(charmod::char_F(*p, *k, *trunc))); });
    }

    {
        auto* b = char_cmd->add_subcommand("B", "character of B_k for two generators");
        auto k = std::make_shared<int>(3);
        auto trunc = std::make_shared<int>(10);
        b->add_option("--k", *k, "series index")->required();
        b->add_option("--trunc", *trunc, "total-degree truncation");
        b->callback([=]() {
            lcs::Engine eng;
            emit(io::char_series_to_json(charmod::char_B(eng, *k, *trunc)));
        });
    }

    {
        auto* dec = char_cmd->add_subcommand("decompose", "two-row decomposition of char B_k");
        auto k = std::make_shared<int>(3);
        auto trunc = std::make_shared<int>(10);
        auto fmt = std::make_shared<std::string>("json");
        dec->add_option("--k", *k, "series index")->required();
        dec->add_option("--trunc", *trunc, "total-degree truncation");
        dec->add_option("--format", *fmt, "json")->check(CLI::IsMember({"json"}));
        dec->callback([=]() {
            lcs::Engine eng;
            auto series = charmod::char_B(eng, *k, *trunc);
            auto decomp = charmod::decompose(series);
            json mults = json::array();
            for (const auto& [pk, m] : decomp.multiplicities)
                mults.push_back(json{{"diagram", {pk.first, pk.second}}, {"mult", m}});
            emit(json{{"k", *k},
                      {"trunc", *trunc},
                      {"multiplicities", mults},
                      {"remainder_zero", true},
                      {"certified_total", decomp.certified_total}});
        });
    }

    // ---- lie ----------------------------------------------------------
    auto* lie_cmd = app.add_subcommand("lie", "root-system counts and curve formulas");
    lie_cmd->require_subcommand(1);

    auto add_root_options = [](CLI::App* cmd, auto type, auto roots, auto degrees, auto weyl) {
        cmd->add_option("--type", *type, "built-in type A1..A8");
        cmd->add_option("--roots", *roots, "explicit roots, e.g. \"1,-1;-1,1\"");
        cmd->add_option("--degrees", *degrees, "invariant degrees for explicit roots");
        cmd->add_option("--weyl", *weyl, "Weyl group order for explicit roots");
    };

    {
        auto* nu = lie_cmd->add_subcommand("nu", "zero-sum subset polynomial and count");
        auto type = std::make_shared<std::string>();
        auto roots = std::make_shared<std::string>();
        auto degrees = std::make_shared<std::string>();
        auto weyl = std::make_shared<long long>(1);
        add_root_options(nu, type, roots, degrees, weyl);
        nu->callback([=]() {
            auto r = root_system_from_options(*type, *roots, *degrees, *weyl);
            auto f = lie::zero_sum_poly(r);
            emit(json{{"roots", r.roots.size()},
                      {"F", io::zpoly_to_json(f)},
                      {"nu", f.eval(Int(1)).to_string()}});
        });
    }

    {
        auto* b2i = lie_cmd->add_subcommand("b2-invariant", "(nu - |W|)/4 with series cross-check");
        auto type = std::make_shared<std::string>();
        auto roots = std::make_shared<std::string>();
        auto degrees = std::make_shared<std::string>();
        auto weyl = std::make_shared<long long>(1);
        add_root_options(b2i, type, roots, degrees, weyl);
        b2i->callback([=]() {
            auto r = root_system_from_options(*type, *roots, *degrees, *weyl);
            auto inv = lie::b2_invariant(r);
            json out{{"nu", inv.nu.to_string()},
                     {"weyl", inv.weyl},
                     {"dim_b2_invariant", inv.dim.to_string()},
                     {"dim_via_series", inv.dim_via_series.to_string()}};
            std::string t = *type;
            for (auto& ch : t) ch = (char)std::tolower((unsigned char)ch);
            if (t != "a1" && t != "a2" && t != "a3")
                out["note"] = "no tabulated anchor for this input; value is an extrapolation";
            emit(out);
        });
    }

    {
        auto* chi = lie_cmd->add_subcommand("chi", "Euler characteristic 1 - (1-d)^n");
        auto dd = std::make_shared<long long>(2);
        auto n = std::make_shared<long long>(2);
        chi->add_option("--d", *dd, "degree")->required();
        chi->add_option("--n", *n, "variables")->required();
        chi->callback([=]() {
            emit(json{{"d", *dd},
                      {"n", *n},
                      {"chi", lie::euler_char(*dd, *n).to_string()},
                      {"b2_generic", lie::b2_hypersurface(*dd, *n).to_string()}});
        });
    }

    {
        auto* curve = lie_cmd->add_subcommand("curve", "smooth plane curve count (d-1)^2");
        auto dd = std::make_shared<long long>(3);
        curve->add_option("--d", *dd, "degree")->required();
        curve->callback(
            [=]() { emit(json{{"d", *dd}, {"b2", lie::b2_plane_curve(*dd).to_string()}}); });
    }

    {
        auto* se = lie_cmd->add_subcommand("superelliptic", "m(r-1) + gcd(p_i, m)");
        auto m = std::make_shared<long long>(2);
        auto p = std::make_shared<std::string>();
        se->add_option("--m", *m, "cover degree")->required();
        se->add_option("--p", *p, "root multiplicities, e.g. 2,2,3")->required();
        se->callback([=]() {
            std::vector<long long> mults;
            for (int v : parse_int_list(*p)) mults.push_back(v);
            emit(json{{"m", *m},
                      {"p", mults},
                      {"b2", lie::b2_superelliptic(*m, mults).to_string()}});
        });
    }

    // ---- verify -------------------------------------------------------
    {
        auto* ver = app.add_subcommand("verify", "run the regression manifest");
        auto suite = std::make_shared<std::string>("paper");
        auto degmax = std::make_shared<int>(0);
        auto fmt = std::make_shared<std::string>("text");
        ver->add_option("--suite", *suite, "suite name")->check(CLI::IsMember({"paper"}));
        ver->add_option("--degmax", *degmax, "cap scan degrees for a faster run");
        ver->add_option("--format", *fmt, "text or json")->check(CLI::IsMember({"text", "json"}));
        ver->callback([=, &exit_code]() {
            auto results = verify::run_paper_suite(*degmax);
            bool all = true;
            if (*fmt == "json") {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back(json{{"id", r.id},
                                       {"name", r.name},
                                       {"pass", r.pass},
                                       {"seconds", r.seconds},
                                       {"detail", r.detail}});
                    all = all && r.pass;
                }
                emit(json{{"suite", *suite}, {"all_pass", all}, {"results", arr}});
            } else {
                for (const auto& r : results) {
                    std::ostringstream line;
                    line << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name;
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "%-76s (%.2fs)", line.str().c_str(), r.seconds);
                    (*g_out) << buf << (r.detail.empty() ? "" : "  -- ") << r.detail << "\n";
                    all = all && r.pass;
                }
            }
            if (!all) exit_code = 1;
        });
    }

    std::ostringstream buffer;
    g_out = &buffer;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (output_path->empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream out(*output_path);
        if (!out) throw std::runtime_error("cannot open output file " + *output_path);
        out << buffer.str();
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
