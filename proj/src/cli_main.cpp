#include "abelcenter/casestudy.hpp"
#include "abelcenter/chebyshev.hpp"
#include "abelcenter/decompose.hpp"
#include "abelcenter/errors.hpp"
#include "abelcenter/moments.hpp"
#include "abelcenter/parse.hpp"
#include "abelcenter/poincare.hpp"
#include "abelcenter/reference_tables.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;
using namespace abelcenter;

namespace {

struct Options {
    std::string P = "0";
    std::string Q = "0";
    std::string a = "0";
    std::string b = "1";
    int kmax = -1;
    int order = 12;
    int d = -1;
    std::string output = "text";
};

[[noreturn]] void input_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

Poly parse_poly_flag(const std::string& text, const char* flag) {
    try {
        return parse_poly(text);
    } catch (const ParseError& e) {
        input_error(std::string("--") + flag + ": " + e.what());
    }
}

Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return Rational::from_string(text);
    } catch (const std::invalid_argument& e) {
        input_error(std::string("--") + flag + ": " + e.what());
    }
}

Interval parse_interval(const Options& o) {
    Rational a = parse_rational_flag(o.a, "a");
    Rational b = parse_rational_flag(o.b, "b");
    try {
        return Interval(a, b);
    } catch (const std::invalid_argument& e) {
        input_error(e.what());
    }
}

ordered_json inputs_json(const Poly* P, const Poly* Q, const Interval& iv) {
    ordered_json in;
    if (P) in["P"] = P->to_string();
    if (Q) in["Q"] = Q->to_string();
    in["a"] = iv.a.to_fraction_string();
    in["b"] = iv.b.to_fraction_string();
    return in;
}

int finish(const ordered_json& doc, const std::string& text, const Options& o, int code) {
    if (o.output == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

int cmd_moments(const Options& o) {
    Poly P = parse_poly_flag(o.P, "P");
    Poly Q = parse_poly_flag(o.Q, "Q");
    Interval iv = parse_interval(o);
    MomentVector mv = moment_vector(P, Q, iv, o.kmax);
    int K = static_cast<int>(mv.values.size()) - 1;
    bool all_zero = true;
    for (const Rational& v : mv.values)
        if (!v.is_zero()) all_zero = false;

    ordered_json doc;
    doc["command"] = "moments";
    doc["inputs"] = inputs_json(&P, &Q, iv);
    doc["inputs"]["kmax"] = K;
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    for (int l = 0; l <= K; ++l) {
        const Rational& v = mv.values[static_cast<size_t>(l)];
        doc["results"].push_back({{"l", l}, {"value", v.to_fraction_string()}});
        text << "m_" << l << " = " << v.to_string() << "\n";
    }
    std::string verdict = all_zero ? "all moments vanish through l = " + std::to_string(K)
                                   : "computed through l = " + std::to_string(K);
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, 0);
}

int cmd_melnikov(const Options& o) {
    Poly P = parse_poly_flag(o.P, "P");
    Poly Q = parse_poly_flag(o.Q, "Q");
    Interval iv = parse_interval(o);
    int K = o.kmax < 0 ? 11 : o.kmax;
    if (K < 5) input_error("--kmax must be at least 5");

    ordered_json doc;
    doc["command"] = "melnikov";
    doc["inputs"] = inputs_json(&P, &Q, iv);
    doc["inputs"]["kmax"] = K;
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    for (int k = 5; k <= K; k += 2) {
        Rational s = melnikov_sum(k, P, Q, iv);
        doc["results"].push_back({{"k", k}, {"sum", s.to_fraction_string()}});
        text << "melnikov_sum(" << k << ") = " << s.to_string() << "\n";
    }
    bool on_p = P.eval(iv.a).is_zero() && P.eval(iv.b).is_zero() && Q.eval(iv.a).is_zero() &&
                Q.eval(iv.b).is_zero();
    if (on_p) {
        for (int j = 1; j <= 4; ++j) {
            Rational dj = melnikov_closed(j, P, Q, iv);
            doc["results"].push_back({{"closed_form", j}, {"value", dj.to_fraction_string()}});
            text << "D_" << j << " = " << dj.to_string() << "\n";
        }
    }
    doc["verdict"] = "computed";
    text << "computed\n";
    return finish(doc, text.str(), o, 0);
}

int cmd_center(const Options& o) {
    if (o.order < 2) input_error("--order must be at least 2");
    Poly P = parse_poly_flag(o.P, "P");
    Poly Q = parse_poly_flag(o.Q, "Q");
    Interval iv = parse_interval(o);
    ReturnMapSeries series = return_map(P, Q, iv, o.order);

    ordered_json doc;
    doc["command"] = "center";
    doc["inputs"] = inputs_json(&P, &Q, iv);
    doc["inputs"]["order"] = o.order;
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    int first_nonzero = 0;
    for (int n = 2; n <= o.order; ++n) {
        const Rational& v = series.v[static_cast<size_t>(n)];
        doc["results"].push_back({{"k", n}, {"v", v.to_fraction_string()}});
        text << "v_" << n << " = " << v.to_string() << "\n";
        if (first_nonzero == 0 && !v.is_zero()) first_nonzero = n;
    }
    std::string verdict;
    int code;
    if (first_nonzero == 0) {
        verdict = "center to order " + std::to_string(o.order);
        code = 0;
    } else {
        verdict = "not a center: v_" + std::to_string(first_nonzero) + " = " +
                  series.v[static_cast<size_t>(first_nonzero)].to_string();
        code = 1;
    }
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, code);
}

int cmd_decompose(const Options& o) {
    Poly P = parse_poly_flag(o.P, "P");
    Interval iv = parse_interval(o);
    std::optional<FactorReport> maybe;
    try {
        maybe = factor_report(P, iv);
    } catch (const std::invalid_argument& e) {
        input_error(e.what());
    }
    const FactorReport& rep = *maybe;

    ordered_json doc;
    doc["command"] = "decompose";
    doc["inputs"] = inputs_json(&P, nullptr, iv);
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    for (const FactorEntry& e : rep.right_factors) {
        bool ab = false, indec = false;
        for (const FactorEntry& f : rep.ab_factors)
            if (f.degree == e.degree) ab = true;
        for (const FactorEntry& f : rep.ab_indecomposable)
            if (f.degree == e.degree) indec = true;
        doc["results"].push_back({{"degree", e.degree},
                                  {"W", e.W.to_string()},
                                  {"endpoint_matching", ab},
                                  {"indecomposable", indec}});
        text << "degree " << e.degree << ": W = " << e.W.to_string()
             << (ab ? "  [endpoint-matching]" : "") << (indec ? "  [indecomposable]" : "")
             << "\n";
    }
    std::string verdict;
    if (P.eval(iv.a) == P.eval(iv.b))
        verdict = rep.ab_indecomposable.size() == 1
                      ? "definite"
                      : "non-definite: " + std::to_string(rep.ab_indecomposable.size()) +
                            " indecomposable factors";
    else
        verdict = "computed (endpoint values differ)";
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, 0);
}

int cmd_composition_check(const Options& o) {
    Poly P = parse_poly_flag(o.P, "P");
    Poly Q = parse_poly_flag(o.Q, "Q");
    Interval iv = parse_interval(o);
    std::optional<CompositionWitness> w;
    try {
        w = composition_condition(P, Q, iv);
    } catch (const PreconditionError& e) {
        input_error(std::string("precondition: ") + e.what());
    }

    ordered_json doc;
    doc["command"] = "composition-check";
    doc["inputs"] = inputs_json(&P, &Q, iv);
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    std::string verdict;
    int code;
    if (w) {
        doc["results"].push_back({{"W", w->W.to_string()},
                                  {"P_tilde", w->P_tilde.to_string()},
                                  {"Q_tilde", w->Q_tilde.to_string()}});
        text << "W = " << w->W.to_string() << "\n";
        text << "P_tilde = " << w->P_tilde.to_string() << "\n";
        text << "Q_tilde = " << w->Q_tilde.to_string() << "\n";
        verdict = "composition condition holds";
        code = 0;
    } else {
        verdict = "no common endpoint-matching factor";
        code = 1;
    }
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, code);
}

int cmd_cos_basis(const Options& o) {
    Poly Q = parse_poly_flag(o.Q, "Q");
    Interval iv = parse_interval(o);
    int d = o.d >= 0 ? o.d : std::max(Q.degree(), 2);
    std::vector<SubspaceBasis> bases;
    try {
        bases = composition_set_basis(Q, d, iv);
    } catch (const PreconditionError& e) {
        input_error(std::string("precondition: ") + e.what());
    } catch (const std::invalid_argument& e) {
        input_error(e.what());
    }

    ordered_json doc;
    doc["command"] = "cos-basis";
    doc["inputs"] = inputs_json(nullptr, &Q, iv);
    doc["inputs"]["d"] = d;
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    for (const SubspaceBasis& sb : bases) {
        ordered_json entry;
        entry["W"] = sb.W.to_string();
        entry["dimension"] = sb.basis.size();
        entry["basis"] = ordered_json::array();
        for (const Poly& e : sb.basis) entry["basis"].push_back(e.to_string());
        doc["results"].push_back(entry);
        text << "W = " << sb.W.to_string() << "  (dimension " << sb.basis.size() << ")\n";
        for (const Poly& e : sb.basis) text << "  " << e.to_string() << "\n";
    }
    std::string verdict = "computed: " + std::to_string(bases.size()) + " subspaces";
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, 0);
}

/* One claim checked by verify-paper. */
struct Claim {
    std::string name;
    bool pass;
    ordered_json detail;
};

void add(std::vector<Claim>& claims, const std::string& name, bool pass,
         ordered_json detail = ordered_json::object()) {
    claims.push_back({name, pass, std::move(detail)});
}

std::array<Rational, 4> sample_c() {
    return {Rational(1), Rational(-2), Rational(3), Rational(1, 2)};
}

void claims_linear_forms(std::vector<Claim>& claims) {
    const int ks[5] = {1, 3, 5, 7, 9};
    bool rows_ok = true;
    for (int k : ks) {
        const auto& row = tables::corrected_L_rows().at(k);
        std::array<Rational, 4> got = compute_L_row(k);
        for (int i = 0; i < 4; ++i)
            if (got[static_cast<size_t>(i)] != row.prefactor * row.bracket[static_cast<size_t>(i)])
                rows_ok = false;
    }
    add(claims, "linear forms reproduce the corrected coefficient rows (k = 1,3,5,7,9)",
        rows_ok);

    bool deviation_ok = true;
    for (int k : ks) {
        Rational ratio = tables::printed_L_rows().at(k).prefactor /
                         tables::corrected_L_rows().at(k).prefactor;
        Rational expect = k == 1 ? Rational(20) : k == 3 ? Rational(19, 9) : Rational(1);
        if (ratio != expect) deviation_ok = false;
        if (tables::printed_L_rows().at(k).bracket != tables::corrected_L_rows().at(k).bracket)
            deviation_ok = false;
    }
    add(claims,
        "published prefactors deviate by exactly 20 (k=1) and 19/9 (k=3); brackets agree",
        deviation_ok);
}

void claims_bilinear(std::vector<Claim>& claims) {
    bool cross_ok = true;
    try {
        assemble_system62(Rational(1), Rational(2), sample_c());
        assemble_system62(Rational(-3), Rational(1, 3), {Rational(2), Rational(0),
                                                         Rational(-1), Rational(5)});
    } catch (const std::logic_error&) {
        cross_ok = false;
    }
    add(claims, "bilinear rows cross-check against the closed forms (scalars 2,2,4,2)",
        cross_ok);

    bool even_zero = true;
    try {
        auto rows = assemble_system62(Rational(0), Rational(0), sample_c());
        for (const Rational& r : rows)
            if (!r.is_zero()) even_zero = false;
    } catch (const std::logic_error&) {
        even_zero = false;
    }
    add(claims, "even family members produce zero residuals", even_zero);
}

void claims_reduced_system(std::vector<Claim>& claims) {
    System63Analysis an = system63_analysis();
    add(claims, "each bilinear c2 column equals -4 times its c3 column",
        an.column_collapse_ok);
    bool scalars_ok = an.rows_proportional;
    for (size_t j = 0; j < 4; ++j)
        if (an.row_scalar[j] != tables::system63_row_scalars()[j]) scalars_ok = false;
    add(claims, "derived reduced rows are fixed scalar multiples of the published rows",
        scalars_ok);

    bool d1_ok = true, d2_ok = true;
    for (int i = 0; i < 4; ++i) {
        if (an.delta1.coeff(i) != tables::printed_delta1_coeffs()[static_cast<size_t>(i)])
            d1_ok = false;
        if (an.delta2.coeff(i) != tables::printed_delta2_coeffs()[static_cast<size_t>(i)])
            d2_ok = false;
    }
    add(claims, "determinant Delta_1 matches the published cubic", d1_ok);
    add(claims, "determinant Delta_2 matches the published cubic", d2_ok);

    add(claims, "resultant equals the pinned exact rational",
        an.resultant_value == tables::resultant_exact(),
        {{"exact", an.resultant_value.to_fraction_string()},
         {"approx", an.resultant_value.to_decimal_string(10)}});

    Rational printed = Rational::from_string("2151447438/100000000");
    Rational diff = an.resultant_value - printed;
    if (diff.sign() < 0) diff = -diff;
    add(claims, "resultant renders to the published decimal within 1e-6",
        diff < Rational(1, 1000000),
        {{"printed", tables::printed_resultant_decimal},
         {"approx", an.resultant_value.to_decimal_string(10)}});
}

void claims_classification(std::vector<Claim>& claims) {
    ClassificationReport rep = verify_classification(11, 3, 20240901);
    add(claims, "definiteness fails only at degrees 6 and 10 with the published patterns",
        rep.pass && rep.planted_hits_found);
}

void claims_dimensions(std::vector<Claim>& claims) {
    const int expected[6] = {3, 3, 4, 4, 5, 6};
    bool dims_ok = true;
    for (int d = 4; d <= 9; ++d)
        if (s_space_basis(d).dimension != expected[d - 4]) dims_ok = false;
    add(claims, "subspace dimensions for d = 4..9 are 3,3,4,4,5,6", dims_ok);

    bool formula_ok = true;
    bool statement_fails_somewhere = false, proof_fails_somewhere = false;
    for (int d = 4; d <= 9; ++d) {
        DimensionComparison cmp = s_space_dimension_comparison(d);
        if (cmp.computed != d / 2 + d / 3 - d / 6) formula_ok = false;
        if (!cmp.matches_statement) statement_fails_somewhere = true;
        if (!cmp.matches_proof) proof_fails_somewhere = true;
    }
    add(claims,
        "dimension equals floor(d/2)+floor(d/3)-floor(d/6); both published readings fail "
        "at some d",
        formula_ok && statement_fails_somewhere && proof_fails_somewhere);
}

void claims_routes(std::vector<Claim>& claims) {
    Interval iv(Rational(0), Rational(1));
    /* Endpoint-vanishing pairs for the k = 5 ratio. */
    Poly P1 = parse_poly("x^3 - x^2");
    Poly Q1 = parse_poly("2x^4 - x^3 - x");
    Poly P2 = parse_poly("x^4 - 2x^3 + x");
    Poly Q2 = parse_poly("x^2 - x");
    bool k5_ok = melnikov_sum(5, P1, Q1, iv) == -melnikov_closed(1, P1, Q1, iv) &&
                 melnikov_sum(5, P2, Q2, iv) == -melnikov_closed(1, P2, Q2, iv);
    add(claims, "weighted-sum route at k = 5 equals minus the closed form", k5_ok);

    Poly T6 = shifted_chebyshev(6);
    Poly Qf = family_Q(Rational(1), Rational(1), sample_c());
    bool k79_ok =
        melnikov_sum(7, T6, Qf, iv) == Rational(-2) * melnikov_closed(2, T6, Qf, iv) &&
        melnikov_sum(9, T6, Qf, iv) == Rational(-2) * melnikov_closed(3, T6, Qf, iv);
    add(claims, "family route ratios at k = 7 and k = 9 equal -2 (k = 9 as published)",
        k79_ok);

    Poly Qg = family_Q(Rational(2), Rational(-1), {Rational(1), Rational(1), Rational(0),
                                                   Rational(1)});
    Rational sf = melnikov_sum(11, T6, Qf, iv);
    Rational sg = melnikov_sum(11, T6, Qg, iv);
    Rational df = melnikov_closed(4, T6, Qf, iv);
    Rational dg = melnikov_closed(4, T6, Qg, iv);
    /* Cross-multiplied ratio comparison avoids dividing by a closed form. */
    bool distinct = !df.is_zero() && !dg.is_zero() && sf * dg != sg * df;
    ordered_json detail;
    if (!df.is_zero() && !dg.is_zero()) {
        detail["ratio_1"] = (sf / df).to_fraction_string();
        detail["ratio_2"] = (sg / dg).to_fraction_string();
    }
    add(claims, "no pair-independent route ratio exists at k = 11", distinct, detail);
}

void claims_grading(std::vector<Claim>& claims) {
    Interval iv(Rational(0), Rational(1));
    Poly P = parse_poly("x^3 - x^2");
    Poly Q = parse_poly("2x^4 - x^3 - x");
    bool sigma_ok = true;
    for (const auto& [k, sigma] : tables::grading_sigma()) {
        auto [deg, coeff] = leading_part_at_infinity(P, Q, iv, k);
        (void)deg;
        if (coeff != sigma * moment(P, Q, iv, k / 2 - 1)) sigma_ok = false;
    }
    add(claims, "even-order leading parts equal sigma_k times the moments", sigma_ok);

    Poly T6 = shifted_chebyshev(6);
    Poly Qf = family_Q(Rational(1), Rational(1), sample_c());
    bool odd_ok = true;
    for (int k = 5; k <= 11; k += 2) {
        auto [deg, coeff] = leading_part_at_infinity(T6, Qf, iv, k);
        (void)deg;
        if (coeff != -melnikov_sum(k, T6, Qf, iv)) odd_ok = false;
    }
    add(claims, "odd-order leading parts equal minus the weighted sums on the family",
        odd_ok);
}

void claims_worked_example(std::vector<Claim>& claims) {
    Interval iv(Rational(0), Rational(1));
    Poly T6 = shifted_chebyshev(6);
    Poly Q = shifted_chebyshev(2) + shifted_chebyshev(3);
    bool moments_zero = true;
    for (int l = 0; l <= 20; ++l)
        if (!moment(T6, Q, iv, l).is_zero()) moments_zero = false;
    bool no_witness = !composition_condition(T6, Q, iv).has_value();
    bool structural = moment_vanishing_structural(T6, Q, iv).member;
    add(claims,
        "worked pair: 21 vanishing moments, no common factor, structural decomposition",
        moments_zero && no_witness && structural);

    Poly W = parse_poly("x^2 - x");
    Poly P = compose(parse_poly("x^2 + x"), W);
    Poly Qc = compose(parse_poly("x^3"), W);
    bool center_ok = center_check(P, Qc, iv, 12).center;
    bool closed_zero = true;
    for (int j = 1; j <= 4; ++j)
        if (!melnikov_closed(j, P, Qc, iv).is_zero()) closed_zero = false;
    add(claims, "a composition pair is a center to order 12 with zero closed forms",
        center_ok && closed_zero);
}

int cmd_verify_paper(const Options& o) {
    std::vector<Claim> claims;
    claims_linear_forms(claims);
    claims_bilinear(claims);
    claims_reduced_system(claims);
    claims_classification(claims);
    claims_dimensions(claims);
    claims_routes(claims);
    claims_grading(claims);
    claims_worked_example(claims);

    ordered_json doc;
    doc["command"] = "verify-paper";
    doc["inputs"] = ordered_json::object();
    doc["results"] = ordered_json::array();
    std::ostringstream text;
    int failed = 0;
    for (const Claim& c : claims) {
        ordered_json entry;
        entry["claim"] = c.name;
        entry["pass"] = c.pass;
        for (auto it = c.detail.begin(); it != c.detail.end(); ++it)
            entry[it.key()] = it.value();
        doc["results"].push_back(entry);
        text << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        if (!c.pass) ++failed;
    }
    std::string verdict = failed == 0
                              ? "all " + std::to_string(claims.size()) + " claims verified"
                              : std::to_string(failed) + " claim(s) failed";
    doc["verdict"] = verdict;
    text << verdict << "\n";
    return finish(doc, text.str(), o, failed == 0 ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abel-center: exact computations for the polynomial Abel equation "
                 "y' = p y^3 + q y^2"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool with_P, bool with_Q) {
        if (with_P) sub->add_option("--P", o.P, "Polynomial P");
        if (with_Q) sub->add_option("--Q", o.Q, "Polynomial Q");
        sub->add_option("--a", o.a, "Left endpoint (rational)");
        sub->add_option("--b", o.b, "Right endpoint (rational)");
        sub->add_option("--output", o.output, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* moments_cmd = app.add_subcommand("moments", "Generalized moments m_l");
    add_common(moments_cmd, true, true);
    moments_cmd->add_option("--kmax", o.kmax, "Largest moment index");

    CLI::App* melnikov_cmd =
        app.add_subcommand("melnikov", "Weighted iterated-integral sums and closed forms");
    add_common(melnikov_cmd, true, true);
    melnikov_cmd->add_option("--kmax", o.kmax, "Largest odd order");

    CLI::App* center_cmd = app.add_subcommand("center", "Return-map center check");
    add_common(center_cmd, true, true);
    center_cmd->add_option("--order", o.order, "Series truncation order");

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "Right-factor report for P");
    add_common(decompose_cmd, true, false);

    CLI::App* cc_cmd = app.add_subcommand("composition-check",
                                          "Common endpoint-matching factor of P and Q");
    add_common(cc_cmd, true, true);

    CLI::App* cos_cmd =
        app.add_subcommand("cos-basis", "Composition-set subspace bases for Q");
    add_common(cos_cmd, false, true);
    cos_cmd->add_option("--d", o.d, "Degree bound");

    CLI::App* verify_cmd =
        app.add_subcommand("verify-paper", "Run the full verification suite");
    verify_cmd->add_option("--output", o.output, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (moments_cmd->parsed()) return cmd_moments(o);
    if (melnikov_cmd->parsed()) return cmd_melnikov(o);
    if (center_cmd->parsed()) return cmd_center(o);
    if (decompose_cmd->parsed()) return cmd_decompose(o);
    if (cc_cmd->parsed()) return cmd_composition_check(o);
    if (cos_cmd->parsed()) return cmd_cos_basis(o);
    if (verify_cmd->parsed()) return cmd_verify_paper(o);
    return 2;
}
