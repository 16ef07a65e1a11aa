// Command line surface for the straightening-law engine: construct an algebra
// configuration, run verifications, and emit relation tables and Hilbert /
// Gorenstein reports as JSON or fixed-width tables.
#include <CLI11.hpp>

#include "qasl/hilbert.hpp"
#include "qasl/straighten.hpp"

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

using namespace qasl;

namespace {

struct CommonOpts {
    std::string kind = "grassmannian";
    int m = 0;
    int n = 0;
    int t = 0;
    std::string gamma;
    int degree = 3;
    std::string q_value;
    std::string format = "json";
    std::string out_path;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty entry in integer list '" + text + "'");
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

// "1,4" for a column set; "1,2:1,3" for rows:cols
IndexPair parse_element(const std::string& text, const AlgebraConfig& cfg) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        if (!cfg.on_pi_poset())
            throw std::invalid_argument("element '" + text +
                                        "' needs rows:cols for a matrix-side algebra");
        std::vector<int> rows(static_cast<size_t>(cfg.m));
        std::iota(rows.begin(), rows.end(), 1);
        return IndexPair{rows, parse_int_list(text)};
    }
    return IndexPair{parse_int_list(text.substr(0, colon)), parse_int_list(text.substr(colon + 1))};
}

AlgebraConfig make_config(const CommonOpts& o) {
    if (o.kind == "grassmannian") return AlgebraConfig::grassmannian(o.m, o.n);
    if (o.kind == "matrix") return AlgebraConfig::matrix(o.m, o.n);
    if (o.kind == "detring") return AlgebraConfig::detring(o.m, o.n, o.t);
    if (o.kind == "schubert") {
        if (o.gamma.empty()) throw std::invalid_argument("schubert needs --gamma");
        return AlgebraConfig::schubert(o.m, o.n, parse_int_list(o.gamma));
    }
    throw std::invalid_argument("unknown kind '" + o.kind + "'");
}

std::optional<Rational> q_specialization(const CommonOpts& o) {
    if (o.q_value.empty()) return std::nullopt;
    Rational v(o.q_value);
    if (v == 0) throw std::invalid_argument("--q must be nonzero");
    return v;
}

nlohmann::json coeff_json(const LaurentPoly& c, const std::optional<Rational>& q) {
    if (!q) return c.to_json();
    std::ostringstream os;
    os << c.specialize(*q);
    return os.str();
}

std::string coeff_text(const LaurentPoly& c, const std::optional<Rational>& q) {
    if (!q) return c.to_string();
    std::ostringstream os;
    os << c.specialize(*q);
    return os.str();
}

nlohmann::json combination_json(const AlgebraContext& ctx, const StandardCombination& comb,
                                const std::optional<Rational>& q) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mono, coeff] : comb.terms) {
        nlohmann::json chain = nlohmann::json::array();
        for (int e : mono.chain) chain.push_back(ctx.element_label(e));
        arr.push_back({{"chain", chain}, {"coeff", coeff_json(coeff, q)}});
    }
    return arr;
}

std::string combination_text(const AlgebraContext& ctx, const StandardCombination& comb,
                             const std::optional<Rational>& q) {
    if (comb.is_zero()) return "    0\n";
    std::ostringstream os;
    for (const auto& [mono, coeff] : comb.terms)
        os << "    (" << coeff_text(coeff, q) << ") " << ctx.chain_label(mono) << "\n";
    return os.str();
}

nlohmann::json element_json(const AlgebraElement& e, const std::optional<Rational>& q) {
    if (!q) return e.to_json();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : e.terms()) {
        nlohmann::json word = nlohmann::json::array();
        for (const auto& g : w) word.push_back({g.row, g.col});
        arr.push_back({{"word", word}, {"coeff", coeff_json(c, q)}});
    }
    return arr;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path " + o.out_path);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + o.out_path);
}

void emit_json(const CommonOpts& o, const nlohmann::json& j) { emit(o, j.dump(2) + "\n"); }

void add_common(CLI::App* cmd, CommonOpts& o, bool with_degree = true) {
    cmd->add_option("--kind", o.kind, "algebra kind: grassmannian, matrix, schubert, detring");
    cmd->add_option("--m", o.m, "number of rows")->required();
    cmd->add_option("--n", o.n, "number of columns")->required();
    cmd->add_option("--t", o.t, "determinantal parameter (detring)");
    cmd->add_option("--gamma", o.gamma, "Schubert parameter, e.g. 1,4");
    if (with_degree) cmd->add_option("--degree", o.degree, "degree bound for the check");
    cmd->add_option("--q", o.q_value, "specialize coefficients at a nonzero rational, e.g. 1 or 1/3");
    cmd->add_option("--format", o.format, "output format: json or table")
        ->check(CLI::IsMember({"json", "table", "dot"}));
    cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
}

int run_minor(const CommonOpts& o, const std::string& rows, const std::string& cols) {
    QMatrixAlgebra alg(Shape{o.m, o.n});
    std::vector<int> r;
    if (rows.empty()) {
        r.resize(static_cast<size_t>(o.m));
        std::iota(r.begin(), r.end(), 1);
    } else {
        r = parse_int_list(rows);
    }
    IndexPair p{r, parse_int_list(cols)};
    const AlgebraElement& minor = alg.quantum_minor(p);
    auto q = q_specialization(o);
    if (o.format == "table") {
        emit(o, p.label() + " = " + minor.to_string() + "\n");
    } else {
        emit_json(o, nlohmann::json{{"pair", p.label()}, {"element", element_json(minor, q)}});
    }
    return 0;
}

int run_straighten(const CommonOpts& o, const std::string& lhs, const std::string& rhs) {
    AlgebraContext ctx(make_config(o));
    int a = ctx.element_index(parse_element(lhs, ctx.config()));
    int b = ctx.element_index(parse_element(rhs, ctx.config()));
    if (a < 0 || b < 0) throw std::invalid_argument("element not in the configured poset");
    StraighteningResult r = ctx.straightening_relation(a, b);
    auto q = q_specialization(o);
    if (o.format == "table") {
        std::ostringstream os;
        os << ctx.element_label(a) << "*" << ctx.element_label(b) << " =\n"
           << combination_text(ctx, r.rhs, q) << "certified: " << (r.certified ? "yes" : "no")
           << (r.failure.empty() ? "" : " (" + r.failure + ")") << "\n";
        emit(o, os.str());
    } else {
        emit_json(o, nlohmann::json{{"lhs", {ctx.element_label(a), ctx.element_label(b)}},
                                    {"f", nullptr},
                                    {"rhs", combination_json(ctx, r.rhs, q)},
                                    {"certified", r.certified},
                                    {"failure", r.failure}});
    }
    return r.certified ? 0 : 1;
}

int run_commute(const CommonOpts& o, const std::string& lhs, const std::string& rhs) {
    AlgebraContext ctx(make_config(o));
    int a = ctx.element_index(parse_element(lhs, ctx.config()));
    int b = ctx.element_index(parse_element(rhs, ctx.config()));
    if (a < 0 || b < 0) throw std::invalid_argument("element not in the configured poset");
    CommutationResult r = ctx.commutation_relation(a, b);
    auto q = q_specialization(o);
    if (o.format == "table") {
        std::ostringstream os;
        os << ctx.element_label(a) << "*" << ctx.element_label(b) << " - q^" << r.exponent << " "
           << ctx.element_label(b) << "*" << ctx.element_label(a) << " =\n"
           << combination_text(ctx, r.lower_terms, q)
           << "certified: " << (r.certified ? "yes" : "no")
           << (r.failure.empty() ? "" : " (" + r.failure + ")") << "\n";
        emit(o, os.str());
    } else {
        emit_json(o, nlohmann::json{{"lhs", {ctx.element_label(a), ctx.element_label(b)}},
                                    {"f", r.exponent},
                                    {"rhs", combination_json(ctx, r.lower_terms, q)},
                                    {"certified", r.certified},
                                    {"failure", r.failure}});
    }
    return r.certified ? 0 : 1;
}

int run_verify_asl(const CommonOpts& o) {
    AlgebraContext ctx(make_config(o));
    AslReport report = ctx.verify_asl(o.degree);
    if (o.format == "table") {
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\n";
        if (report.trivial_quotient) {
            os << "verdict: trivial quotient\n";
        } else {
            for (int i = 0; i < 5; ++i)
                os << "condition (" << i + 1 << "): "
                   << (report.conditions[i].pass ? "pass" : "FAIL") << "  "
                   << report.conditions[i].detail << "\n";
            os << "overall: " << (report.overall() ? "pass" : "FAIL") << "\n";
        }
        emit(o, os.str());
    } else {
        emit_json(o, report.to_json());
    }
    return report.overall() ? 0 : 1;
}

int run_schubert_basis(const CommonOpts& o) {
    CommonOpts local = o;
    local.kind = "schubert";
    AlgebraContext ctx(make_config(local));
    nlohmann::json degrees = nlohmann::json::object();
    for (int d = 0; d <= o.degree; ++d) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& mono : ctx.standard_monomials(d)) {
            nlohmann::json chain = nlohmann::json::array();
            for (int e : mono.chain) chain.push_back(ctx.element_label(e));
            list.push_back(chain);
        }
        degrees[std::to_string(d)] = list;
    }
    if (o.format == "table") {
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\n";
        for (int d = 0; d <= o.degree; ++d) {
            os << "degree " << d << " (" << degrees[std::to_string(d)].size() << "):";
            for (const auto& chain : degrees[std::to_string(d)]) {
                os << " ";
                if (chain.empty()) os << "1";
                for (const auto& lbl : chain) os << lbl.get<std::string>();
            }
            os << "\n";
        }
        emit(o, os.str());
    } else {
        emit_json(o, nlohmann::json{{"config", ctx.config().to_json()}, {"basis", degrees}});
    }
    return 0;
}

int run_ideal_check(const CommonOpts& o, const std::string& omega_spec,
                    const std::string& omega_mode, const std::string& chain_spec) {
    AlgebraContext ctx(make_config(o));
    const Poset& poset = ctx.ambient_poset();

    std::vector<int> generators;
    if (!omega_spec.empty()) {
        std::stringstream ss(omega_spec);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            int e = ctx.element_index(parse_element(tok, ctx.config()));
            if (e < 0) throw std::invalid_argument("omega generator '" + tok + "' not in the poset");
            generators.push_back(e);
        }
    } else if (!o.gamma.empty()) {
        int e = ctx.element_index(parse_element(o.gamma, ctx.config()));
        if (e < 0) throw std::invalid_argument("gamma not in the poset");
        generators.push_back(e);
    } else {
        throw std::invalid_argument("ideal-check needs --omega or --gamma");
    }
    PiIdeal omega = omega_mode == "generated" ? poset.ideal_generated(generators)
                                              : poset.ideal_cogenerated(generators);

    std::vector<int> product;
    std::stringstream ss(chain_spec);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        int e = ctx.element_index(parse_element(tok, ctx.config()));
        if (e < 0) throw std::invalid_argument("chain element '" + tok + "' not in the poset");
        product.push_back(e);
    }
    if (product.empty()) throw std::invalid_argument("ideal-check needs --chain");

    MembershipResult r = ctx.ideal_membership(ctx.realize_product(product), omega);
    auto q = q_specialization(o);
    nlohmann::json omega_labels = nlohmann::json::array();
    for (int e = 0; e < poset.size(); ++e)
        if (omega.contains(e)) omega_labels.push_back(ctx.element_label(e));
    if (o.format == "table") {
        std::ostringstream os;
        os << "member: " << (r.member ? "yes" : "no") << "\ninside:\n"
           << combination_text(ctx, r.inside, q) << "outside:\n"
           << combination_text(ctx, r.outside, q);
        emit(o, os.str());
    } else {
        emit_json(o, nlohmann::json{{"config", ctx.config().to_json()},
                                    {"omega", omega_labels},
                                    {"member", r.member},
                                    {"inside", combination_json(ctx, r.inside, q)},
                                    {"outside", combination_json(ctx, r.outside, q)}});
    }
    return 0;
}

int run_hilbert(const CommonOpts& o) {
    AlgebraContext ctx(make_config(o));
    nlohmann::json j = hilbert_report(ctx);
    if (o.format == "table") {
        HilbertSeries h = hilbert_series(ctx);
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\n"
           << "series: " << h.series.to_string() << "\n"
           << "gk_dim: " << j["gk_dim"] << "\n"
           << "poset_rank: " << j["poset_rank"] << "\n"
           << "gorenstein: " << (j["gorenstein"].get<bool>() ? "yes" : "no") << "\n";
        if (!j["shift"].is_null()) os << "shift: " << j["shift"] << "\n";
        emit(o, os.str());
    } else {
        emit_json(o, j);
    }
    return 0;
}

int run_gorenstein(const CommonOpts& o) {
    AlgebraContext ctx(make_config(o));
    HilbertSeries h = hilbert_series(ctx);
    GorensteinVerdict v = gorenstein_test(h);
    if (o.format == "table") {
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\n"
           << "gorenstein: " << (v.gorenstein ? "yes" : "no") << "\n";
        if (v.shift) os << "shift: " << *v.shift << "\n";
        emit(o, os.str());
    } else {
        emit_json(o,
                  nlohmann::json{{"config", ctx.config().to_json()},
                                 {"gorenstein", v.gorenstein},
                                 {"shift", v.shift ? nlohmann::json(*v.shift) : nlohmann::json(nullptr)}});
    }
    return 0;
}

int run_dehom_check(const CommonOpts& o, const std::string& rows, const std::string& cols) {
    IndexPair p{parse_int_list(rows), parse_int_list(cols)};
    bool holds = verify_dehom_plucker(p, o.m, o.n);
    if (o.format == "table") {
        emit(o, "pair: " + p.label() + "\nidentity holds: " + (holds ? "yes" : "no") + "\n");
    } else {
        emit_json(o, nlohmann::json{{"m", o.m}, {"n", o.n}, {"pair", p.label()}, {"identity_holds", holds}});
    }
    return holds ? 0 : 1;
}

int run_poset(const CommonOpts& o) {
    AlgebraContext ctx(make_config(o));
    const Poset& poset = ctx.config_poset();
    if (o.format == "dot") {
        emit(o, poset.to_dot());
    } else if (o.format == "table") {
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\n"
           << "elements (" << poset.size() << "):";
        for (int e = 0; e < poset.size(); ++e) os << " " << poset.label(e);
        os << "\nrank: " << poset.rank() << "\ncovers:\n";
        for (auto [a, b] : poset.cover_relations())
            os << "  " << poset.label(a) << " < " << poset.label(b) << "\n";
        emit(o, os.str());
    } else {
        emit_json(o, poset.to_json());
    }
    return 0;
}

int run_relations(const CommonOpts& o, int max_degree) {
    AlgebraContext ctx(make_config(o));
    nlohmann::json table = export_relation_table(ctx, max_degree);
    bool all_certified = true;
    for (const auto& rec : table)
        if (rec["certified"] != true) all_certified = false;
    if (o.format == "table") {
        std::ostringstream os;
        os << "configuration: " << ctx.config().label() << "\nrecords: " << table.size() << "\n";
        for (const auto& rec : table) {
            os << rec["lhs"][0].get<std::string>() << "*" << rec["lhs"][1].get<std::string>();
            if (!rec["f"].is_null()) os << " (f=" << rec["f"] << ")";
            os << " -> " << rec["rhs"].size() << " terms, "
               << (rec["certified"] == true ? "certified" : "NOT CERTIFIED") << "\n";
        }
        emit(o, os.str());
    } else {
        emit_json(o, table);
    }
    return all_certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum straightening-law workbench"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string lhs, rhs, rows, cols, omega_spec, chain_spec;
    std::string omega_mode = "cogenerated";
    int max_degree = 4;

    CLI::App* minor = app.add_subcommand("minor", "expand a quantum minor in the PBW basis");
    add_common(minor, o, false);
    minor->add_option("--rows", rows, "row set, e.g. 1,2 (defaults to 1..m)");
    minor->add_option("--cols", cols, "column set, e.g. 1,3")->required();

    CLI::App* straighten = app.add_subcommand("straighten", "straighten an incomparable pair");
    add_common(straighten, o, false);
    straighten->add_option("--lhs", lhs, "left element, e.g. 1,4 or 1,2:1,3")->required();
    straighten->add_option("--rhs", rhs, "right element")->required();

    CLI::App* commute = app.add_subcommand("commute", "commutation relation for an ordered pair");
    add_common(commute, o, false);
    commute->add_option("--lhs", lhs, "left element")->required();
    commute->add_option("--rhs", rhs, "right element")->required();

    CLI::App* verify = app.add_subcommand("verify-asl", "check the five straightening-law conditions");
    add_common(verify, o);

    CLI::App* sbasis = app.add_subcommand("schubert-basis", "standard monomials of a Schubert quotient");
    add_common(sbasis, o);

    CLI::App* icheck = app.add_subcommand("ideal-check", "membership in the ideal of a Pi-ideal");
    add_common(icheck, o, false);
    icheck->add_option("--omega", omega_spec, "Pi-ideal generators, semicolon separated");
    icheck->add_option("--omega-mode", omega_mode, "generated or cogenerated")
        ->check(CLI::IsMember({"generated", "cogenerated"}));
    icheck->add_option("--chain", chain_spec, "product to test, semicolon separated elements");

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series, growth and Gorenstein report");
    add_common(hilbert, o, false);

    CLI::App* gorenstein = app.add_subcommand("gorenstein", "Gorenstein functional-equation verdict");
    add_common(gorenstein, o, false);

    CLI::App* dehom = app.add_subcommand("dehom-check", "dehomogenisation Pluecker identity");
    add_common(dehom, o, false);
    dehom->add_option("--rows", rows, "row set of the index pair")->required();
    dehom->add_option("--cols", cols, "column set of the index pair")->required();

    CLI::App* poset = app.add_subcommand("poset", "export the configured poset (json, table, dot)");
    add_common(poset, o, false);

    CLI::App* relations = app.add_subcommand("relations", "export the full relation table");
    add_common(relations, o, false);
    relations->add_option("--max-degree", max_degree, "skip pairs of total degree above this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (minor->parsed()) return run_minor(o, rows, cols);
        if (straighten->parsed()) return run_straighten(o, lhs, rhs);
        if (commute->parsed()) return run_commute(o, lhs, rhs);
        if (verify->parsed()) return run_verify_asl(o);
        if (sbasis->parsed()) return run_schubert_basis(o);
        if (icheck->parsed()) return run_ideal_check(o, omega_spec, omega_mode, chain_spec);
        if (hilbert->parsed()) return run_hilbert(o);
        if (gorenstein->parsed()) return run_gorenstein(o);
        if (dehom->parsed()) return run_dehom_check(o, rows, cols);
        if (poset->parsed()) return run_poset(o);
        if (relations->parsed()) return run_relations(o, max_degree);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
