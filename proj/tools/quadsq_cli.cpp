#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quadsq/characters.hpp"
#include "quadsq/closedform.hpp"
#include "quadsq/ideal.hpp"
#include "quadsq/repcount.hpp"
#include "quadsq/series.hpp"
#include "quadsq/tables.hpp"

using namespace quadsq;

namespace {

struct Report {
    long total = 0;
    long failed = 0;
    void line(const std::string& suite, const std::string& what, bool ok) {
        ++total;
        if (!ok) ++failed;
        std::cout << suite << " nu=" << what << (ok ? " ok" : " MISMATCH") << "\n";
    }
    int finish() {
        std::cout << (failed ? "FAIL" : "PASS") << " total=" << total << "\n";
        return failed ? 1 : 0;
    }
};

std::vector<QuadInt> squarefree_tp_upto(const Field& F, long T) {
    std::vector<QuadInt> out;
    for (const QuadInt& a : tp_elements_upto(F, T))
        if (is_squarefree(F, a)) out.push_back(a);
    return out;
}

bool k3_in_scope(const Field& F, const QuadInt& nu) {
    if (F.id() != FieldId::Q3) return true;
    for (const auto& [pi, e] : factor(F, nu).primes)
        if (!F.canonical_tp_associate(pi)) return false;
    return true;
}

void suite_r2(const Field& F, long T, Report& rep) {
    for (const QuadInt& nu : tp_elements_upto(F, T)) {
        Int b = r2_brute(F, nu);
        auto cr = r2_criterion(F, nu);
        bool ok = r2_closed(F, nu) == b && cr.count == b && cr.representable == (b > 0);
        rep.line("r2", F.format(nu), ok);
    }
}

void suite_criterion(const Field& F, long T, Report& rep) {
    for (const QuadInt& nu : tp_elements_upto(F, T))
        rep.line("criterion", F.format(nu),
                 representable3(F, nu) == (r3_brute(F, nu) > 0));
}

void suite_cfc(const Field& F, long T, Report& rep) {
    long Ta = std::min(T, 16L);
    for (const QuadInt& alpha : squarefree_tp_upto(F, Ta)) {
        if (F.id() == FieldId::Q3 && F.is_unit(alpha)) continue;
        for (const QuadInt& nu : tp_elements_upto(F, 8)) {
            if (!k3_in_scope(F, nu)) continue;
            auto [lhs, rhs] = verify_cfc(F, alpha, nu);
            rep.line("cfc", F.format(alpha) + "*(" + F.format(nu) + ")^2", lhs == rhs);
        }
    }
}

void suite_theta2(const Field& F, long T, Report& rep) {
    auto r = verify_theta_sq(F, T);
    for (const QuadInt& nu : tp_elements_upto(F, T)) {
        bool ok = true;
        for (const QuadInt& m : r.mismatches)
            if (m == nu) ok = false;
        rep.line("theta2", F.format(nu), ok);
    }
}

void suite_lift(const Field& F, long T, Report& rep) {
    long Tl = std::min(T, 12L);
    for (const QuadInt& alpha : enumerate_alphas(F, 8)) {
        if (F.id() == FieldId::Q3 && F.is_unit(alpha)) continue;
        auto r = verify_lift(F, alpha, Tl);
        rep.line("lift", F.format(alpha), r.pass());
        if (!r.pass() && r.xi_fit)
            std::cout << "  cusp-multiple " << r.xi_multiple << "\n";
    }
}

void suite_elem17(const Field& F, long T, Report& rep) {
    QuadInt p2 = F.pi2(), p2p = F.pi2p();
    QuadInt p2sq = F.mul(p2, p2), p2psq = F.mul(p2p, p2p);
    for (const QuadInt& nu : tp_elements_upto(F, T)) {
        Int r = r3_brute(F, nu);
        bool ok = r3_brute(F, F.mul(p2sq, nu)) == r &&
                  r3_brute(F, F.mul(p2psq, nu)) == r;
        for (const QuadInt& q : {p2, p2p}) {
            if (valuation(F, nu, q) > 0) continue;
            QuadInt q3 = F.mul(q, F.mul(q, q));
            if (F.divides(nu - QuadInt(7, 0), q3) && r != 0) ok = false;
        }
        rep.line("elem17", F.format(nu), ok);
    }
}

int run_verify(const Field& F, const std::string& suite, long T) {
    Report rep;
    bool all = suite == "all";
    if (suite == "r2" || all) suite_r2(F, T, rep);
    if (suite == "criterion" || all) suite_criterion(F, T, rep);
    if (suite == "cfc" || all) suite_cfc(F, T, rep);
    if (suite == "theta2" || all) suite_theta2(F, std::min(T, 30L), rep);
    if (suite == "lift" || all) suite_lift(F, T, rep);
    if (suite == "elem17" || all) {
        if (F.id() == FieldId::Q17) suite_elem17(F, std::min(T, 30L), rep);
        else if (!all) throw InvalidInput("suite elem17 needs --field q17");
    }
    return rep.finish();
}

FourierSeries pick_series(const Field& F, const std::string& name, long T) {
    if (name == "theta3") {
        FourierSeries th = theta(F, T);
        return series_mul(series_mul(th, th), th);
    }
    if (name == "phi")
        return F.id() == FieldId::Q3 ? build_pefe3(F, T) : build_phi17(F, T);
    if (name == "xi")
        return F.id() == FieldId::Q3 ? build_xi3(F, T) : build_xi17(F, T);
    if (name.rfind("eis:", 0) == 0) {
        std::string which = name.substr(4);
        static const std::pair<const char*, EisSeries> names[] = {
            {"g1chi", EisSeries::G1Chi},       {"g1chi-one", EisSeries::G1ChiOne},
            {"g1chi-half", EisSeries::G1ChiOneHalf}, {"g1pair", EisSeries::G1Pair},
            {"g2", EisSeries::G2},             {"g2-p2", EisSeries::G2OneP2},
            {"g2-p2p", EisSeries::G2OneP2p},   {"g2-two", EisSeries::G2One2},
        };
        for (const auto& [n, s] : names)
            if (which == n) return eisenstein(F, s, T);
        throw InvalidInput("unknown eisenstein series: " + which);
    }
    throw InvalidInput("unknown series: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for sums of squares in Q(sqrt 3) and Q(sqrt 17)"};
    app.require_subcommand(1);

    std::string field_name = "q3";
    long long A = 0, B = 0;
    std::string method = "brute";
    long rows = 220;
    std::string format = "csv";
    bool check_golden = false;
    std::string golden_file;
    std::string series_name;
    long trace_bound = 20;
    std::string suite = "all";

    auto add_field = [&](CLI::App* c) {
        c->add_option("--field", field_name, "q3 or q17 (coordinates are in the basis 1, sqrt(3) resp. 1, (1+sqrt(17))/2)")
            ->required()
            ->check(CLI::IsMember({"q3", "q17"}));
    };
    auto add_ab = [&](CLI::App* c) {
        c->add_option("A", A, "first coordinate")->required();
        c->add_option("B", B, "second coordinate")->required();
    };

    CLI::App* c_classify = app.add_subcommand("classify", "ramification case of alpha above 2");
    add_field(c_classify); add_ab(c_classify);

    CLI::App* c_r2 = app.add_subcommand("r2", "number of two-square representations");
    add_field(c_r2); add_ab(c_r2);
    c_r2->add_option("--method", method)->check(CLI::IsMember({"brute", "closed", "criterion"}));

    CLI::App* c_r3 = app.add_subcommand("r3", "number of three-square representations");
    add_field(c_r3); add_ab(c_r3);
    c_r3->add_option("--method", method)->check(CLI::IsMember({"brute", "closed", "criterion"}));

    CLI::App* c_h = app.add_subcommand("h", "class number of K(sqrt(-alpha))");
    add_field(c_h); add_ab(c_h);

    CLI::App* c_table = app.add_subcommand("table", "class number table");
    add_field(c_table);
    c_table->add_option("--rows", rows);
    c_table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    c_table->add_flag("--check-golden", check_golden);
    c_table->add_option("--golden-file", golden_file);

    CLI::App* c_expand = app.add_subcommand("expand", "Fourier coefficient dump");
    add_field(c_expand);
    c_expand->add_option("--series", series_name, "theta3 | phi | xi | eis:<name>")->required();
    c_expand->add_option("--trace-bound", trace_bound);

    CLI::App* c_verify = app.add_subcommand("verify", "oracle verification suites");
    add_field(c_verify);
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"r2", "criterion", "cfc", "theta2", "lift", "elem17", "all"}));
    c_verify->add_option("--trace-bound", trace_bound);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Field& F = Field::by_name(field_name);
        QuadInt z(A, B);
        if (c_classify->parsed()) {
            if (F.id() == FieldId::Q3) {
                std::cout << "case=" << to_string(classify3(F, z)) << "\n";
            } else {
                auto [c, cp] = classify17(F, z);
                std::cout << "case=" << to_string(c) << "," << to_string(cp)
                          << " coarse=" << to_string(coarse17(F, z)) << "\n";
            }
        } else if (c_r2->parsed()) {
            if (!F.is_totally_positive(z)) throw InvalidInput("nu must be totally positive");
            if (method == "brute") std::cout << r2_brute(F, z) << "\n";
            else if (method == "closed") std::cout << r2_closed(F, z) << "\n";
            else std::cout << r2_criterion(F, z).count << "\n";
        } else if (c_r3->parsed()) {
            if (!F.is_totally_positive(z)) throw InvalidInput("nu must be totally positive");
            if (method == "brute") {
                std::cout << r3_brute(F, z) << "\n";
            } else if (method == "closed") {
                auto [alpha, mu] = squarefree_decompose(F, z);
                std::cout << r3_closed(F, alpha, mu) << "\n";
            } else {
                std::cout << (representable3(F, z) ? 1 : 0) << "\n";
            }
        } else if (c_h->parsed()) {
            auto res = class_number(F, z);
            std::cout << "case=" << res.case_label << " h=" << res.h
                      << " r3=" << res.r3_used << "\n";
        } else if (c_table->parsed()) {
            auto generated = generate_table(F, (int)rows);
            if (check_golden) {
                if (golden_file.empty())
                    golden_file = "data/table_" + field_name + ".csv";
                auto golden = load_golden(F, golden_file);
                auto d = diff_table(golden, generated);
                if (d.clean()) {
                    std::cout << golden.size() << "/" << golden.size() << " rows match\n";
                    return 0;
                }
                for (const auto& r : d.missing)
                    std::cout << "missing a=" << r.a << " b=" << r.b << "\n";
                for (const auto& r : d.extra)
                    std::cout << "extra a=" << r.a << " b=" << r.b << "\n";
                for (const auto& [g, r] : d.mismatched)
                    std::cout << "mismatch a=" << g.a << " b=" << g.b << " golden h=" << g.h
                              << " got h=" << r.h << "\n";
                return 1;
            }
            std::cout << (format == "json" ? table_json(F, generated)
                                           : table_csv(F, generated));
        } else if (c_expand->parsed()) {
            std::cout << dump(pick_series(F, series_name, trace_bound));
        } else if (c_verify->parsed()) {
            return run_verify(F, suite, trace_bound);
        }
    } catch (const InvalidInput& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
