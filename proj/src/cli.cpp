#include "dldeg/cli.hpp"

#include "dldeg/multipoly.hpp"
#include "dldeg/partitions.hpp"
#include "dldeg/qpoly.hpp"
#include "dldeg/schubert.hpp"
#include "dldeg/schur.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace dldeg {

namespace {

constexpr int kCoeffMaxD = 5;
constexpr int kSchubertMaxD = 6;
constexpr int kClassMaxD = 5;
constexpr int kSytMaxD = 6;
constexpr int kCauchyMaxD = 4;
constexpr int kVerifyMaxD = 6;

void require_range(const std::string& what, int value, int lo, int hi) {
    if (value < lo || value > hi)
        throw UsageError(what + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                         std::to_string(value));
}

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string method_name(DegreeMethod m) {
    switch (m) {
        case DegreeMethod::closed: return "closed";
        case DegreeMethod::schubert: return "schubert";
        case DegreeMethod::coeff: return "coeff";
        case DegreeMethod::all: return "all";
    }
    return "all";
}

std::string counts_text(const PairCounts& c) {
    return "(" + std::to_string(c.contains) + ", " + std::to_string(c.special_meet) + ", " +
           std::to_string(c.other) + ")";
}

BigInt at_q(const QPoly& p, int q) { return p.eval(BigInt(q)); }

}  // namespace

DegreeMethod parse_method(const std::string& s) {
    if (s == "closed") return DegreeMethod::closed;
    if (s == "schubert") return DegreeMethod::schubert;
    if (s == "coeff") return DegreeMethod::coeff;
    if (s == "all") return DegreeMethod::all;
    throw UsageError("unknown method '" + s + "' (closed|schubert|coeff|all)");
}

RunReport cmd_degree(int d, DegreeMethod method, std::optional<int> max_d_override) {
    Stopwatch clock;
    const bool closed = method == DegreeMethod::closed || method == DegreeMethod::all;
    const bool schubert = method == DegreeMethod::schubert || method == DegreeMethod::all;
    const bool coeff = method == DegreeMethod::coeff || method == DegreeMethod::all;
    if (d < 1) throw UsageError("d must be at least 1");
    if (schubert) require_range("d for the schubert method", d, 1, max_d_override.value_or(kSchubertMaxD));
    if (coeff) require_range("d for the coeff method", d, 1, max_d_override.value_or(kCoeffMaxD));
    if (closed && max_d_override) require_range("d", d, 1, *max_d_override);

    RunReport r;
    r.command = "degree";
    r.inputs = {{"d", std::to_string(d)}, {"method", method_name(method)}};
    std::optional<QPoly> closed_v, schubert_v, coeff_v;
    if (closed) {
        closed_v = q_double_factorial(static_cast<unsigned>(d));
        r.results.push_back(ResultValue::of("closed", *closed_v));
    }
    if (schubert) {
        schubert_v = degree_via_schubert(d);
        r.results.push_back(ResultValue::of("schubert", *schubert_v));
        r.add_check("schubert: skew SYT count = Pieri on dl_class", *schubert_v, degree_via_pieri(d));
    }
    if (coeff) {
        coeff_v = degree_via_coeff(d);
        r.results.push_back(ResultValue::of("coeff", *coeff_v));
    }
    if (closed_v && schubert_v) r.add_check("closed = schubert", *closed_v, *schubert_v);
    if (closed_v && coeff_v) r.add_check("closed = coeff", *closed_v, *coeff_v);
    if (schubert_v && coeff_v) r.add_check("schubert = coeff", *schubert_v, *coeff_v);
    r.elapsed_ms = clock.ms();
    return r;
}

RunReport cmd_class(int d) {
    Stopwatch clock;
    require_range("d", d, 1, kClassMaxD);
    RunReport r;
    r.command = "class";
    r.inputs = {{"d", std::to_string(d)}};
    const SchubertExpr cls = dl_class(d);
    r.results.push_back(ResultValue::of("dl_class", cls.to_string()));
    bool homogeneous = true;
    for (const auto& [a, c] : cls.terms()) homogeneous = homogeneous && a.weight() == d * d;
    r.add_check("homogeneous of codimension d^2", "true", homogeneous ? "true" : "false");
    r.elapsed_ms = clock.ms();
    return r;
}

RunReport cmd_syt(int d, std::optional<int> l) {
    Stopwatch clock;
    require_range("d", d, 1, kSytMaxD);
    if (l) require_range("l", *l, 0, d * d);
    RunReport r;
    r.command = "syt";
    r.inputs = {{"d", std::to_string(d)}};
    if (l) r.inputs.emplace_back("l", std::to_string(*l));

    const int lo = l.value_or(0), hi = l.value_or(d * d);
    QPoly generating;
    for (int weight = lo; weight <= hi; ++weight) {
        const std::string tag = "l=" + std::to_string(weight);
        BigInt total = 0;
        for (const Partition& c : box_partitions(d, weight)) {
            const auto shape = dl_skew_shape(c, d);
            const BigInt n = shape ? count_skew_syt(*shape) : BigInt(0);
            total += n;
            const std::string label =
                shape ? shape->to_string() : dl_outer_shape(c, d).to_string() + "/" + c.to_string() + " (c not contained)";
            r.results.push_back(ResultValue::of(tag + " c=" + c.to_string() + " " + label, n));
        }
        r.results.push_back(ResultValue::of(tag + " total", total));
        r.add_check(tag + " total = ordered partitions", ordered_partition_count(d, weight).get_str(), total.get_str());
        generating += QPoly::monomial(total, static_cast<std::size_t>(weight));
    }
    if (!l) r.add_check("generating function = q-double factorial", q_double_factorial(static_cast<unsigned>(d)), generating);
    r.elapsed_ms = clock.ms();
    return r;
}

RunReport cmd_cauchy(int d, std::optional<int> max_d_override) {
    Stopwatch clock;
    require_range("d", d, 1, max_d_override.value_or(kCauchyMaxD));
    RunReport r;
    r.command = "cauchy";
    r.inputs = {{"d", std::to_string(d)}};
    r.add_check("dual Cauchy identity", "true", verify_dual_cauchy(d) ? "true" : "false");
    r.add_check("S summed over Schur products = product form", "true", build_S(d) == build_S_product_form(d) ? "true" : "false");
    r.elapsed_ms = clock.ms();
    return r;
}

RunReport cmd_finite(int q, const std::string& check, std::optional<int> n, std::optional<int> d,
                     std::uint64_t budget) {
    Stopwatch clock;
    if (q != 2 && q != 3 && q != 4 && q != 5) throw UsageError("q must be one of 2, 3, 4, 5");
    RunReport r;
    r.command = "finite";
    r.inputs = {{"q", std::to_string(q)}, {"check", check}, {"budget", std::to_string(budget)}};

    if (check == "isotropic" || check == "special") {
        if (!n) throw UsageError("--n is required for check " + check);
        if (*n < 1 || *n % 2 == 0) throw UsageError("n must be odd and positive");
        r.inputs.emplace_back("n", std::to_string(*n));
        const BigInt expected = at_q(isotropic_line_count_formula(static_cast<unsigned>(*n)), q);
        if (check == "isotropic") {
            const auto count = count_isotropic_lines(*n, q, budget);
            r.results.push_back(ResultValue::of("isotropic lines", BigInt(static_cast<unsigned long>(count))));
            r.add_check("isotropic lines = formula", expected.get_str(), std::to_string(count));
        } else {
            const HermSpace hs(q, *n);
            const auto specials = enumerate_special_subspaces(1, hs, budget);
            r.results.push_back(
                ResultValue::of("codimension-1 special subspaces", BigInt(static_cast<unsigned long>(specials.size()))));
            r.add_check("codimension-1 special subspaces = formula", expected.get_str(), std::to_string(specials.size()));
            bool perps_ok = true;
            for (const auto& w : specials) {
                const Subspace p = hs.orth_complement(w);
                perps_ok = perps_ok && p.dim() == 1 && hs.is_totally_isotropic(p);
            }
            r.add_check("W^perp totally isotropic of dimension 1", "true", perps_ok ? "true" : "false");
        }
    } else if (check == "dl") {
        if (!d) throw UsageError("--d is required for check dl");
        if (*d < 0) throw UsageError("d must be nonnegative");
        r.inputs.emplace_back("d", std::to_string(*d));
        const auto count = count_dl_points(*d, q, budget);
        r.results.push_back(ResultValue::of("DL points", BigInt(static_cast<unsigned long>(count))));
        if (*d == 0) {
            r.add_check("DL points = 1", "1", std::to_string(count));
        } else if (*d == 1) {
            r.add_check("DL points = 1 + q^3", at_q(isotropic_line_count_formula(3), q).get_str(), std::to_string(count));
            r.add_check("DL points = Fermat curve points", std::to_string(count_fermat_points(q)), std::to_string(count));
        } else {
            r.add_check("DL points = Grassmannian scan", std::to_string(count_dl_points_direct(*d, q, budget)),
                        std::to_string(count));
        }
    } else if (check == "pairs") {
        if (!d) throw UsageError("--d is required for check pairs");
        if (*d < 2) throw UsageError("d must be at least 2 for check pairs");
        r.inputs.emplace_back("d", std::to_string(*d));
        const PairCounts c = classify_pairs(*d, q, budget);
        r.results.push_back(ResultValue::of("counts (a, b, c)", counts_text(c)));
        const auto du = static_cast<unsigned>(*d);
        r.add_check("case a = (1 - q^{2(d-1)})/(1 - q^2)", at_q(containing_special_count_formula(du), q).get_str(),
                    std::to_string(c.contains));
        r.add_check("case b = q^{2(d-1)}(1 + q^3)", at_q(special_intersection_count_formula(du), q).get_str(),
                    std::to_string(c.special_meet));
        r.add_check("a + b + c = isotropic lines", at_q(isotropic_line_count_formula(2 * du + 1), q).get_str(),
                    std::to_string(c.total()));
    } else {
        throw UsageError("unknown check '" + check + "' (isotropic|special|dl|pairs)");
    }
    r.elapsed_ms = clock.ms();
    return r;
}

RunReport cmd_verify(int max_d, bool with_finite, std::uint64_t budget) {
    Stopwatch clock;
    require_range("max-d", max_d, 1, kVerifyMaxD);
    RunReport r;
    r.command = "verify";
    r.inputs = {{"max_d", std::to_string(max_d)}, {"with_finite", with_finite ? "true" : "false"}};

    for (int d = 1; d <= max_d; ++d) {
        const std::string tag = "d=" + std::to_string(d) + " ";
        const QPoly closed = q_double_factorial(static_cast<unsigned>(d));
        const QPoly schubert = degree_via_schubert(d);
        r.add_check(tag + "closed = schubert", closed, schubert);
        r.add_check(tag + "skew SYT = Pieri on dl_class", schubert, degree_via_pieri(d));
        if (d <= kCoeffMaxD) r.add_check(tag + "closed = coeff", closed, degree_via_coeff(d));

        bool palindromic = true;
        const auto& cs = closed.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) palindromic = palindromic && cs[i] == cs[cs.size() - 1 - i];
        r.add_check(tag + "q-double factorial palindromic", "true", palindromic ? "true" : "false");

        if (d <= kCoeffMaxD) {
            bool oracle = true, counts = true;
            for (int l = 0; l <= d * d; ++l) {
                BigInt total = 0;
                for (const Partition& c : box_partitions(d, l)) {
                    const auto shape = dl_skew_shape(c, d);
                    if (!shape) continue;
                    const BigInt n = count_skew_syt(*shape);
                    oracle = oracle && n == count_skew_syt_det(*shape);
                    total += n;
                }
                counts = counts && total == ordered_partition_count(d, l);
            }
            r.add_check(tag + "SYT backtracking = determinant", "true", oracle ? "true" : "false");
            r.add_check(tag + "SYT totals = ordered partitions", "true", counts ? "true" : "false");
        }
        if (d <= kCauchyMaxD)
            r.add_check(tag + "dual Cauchy identity", "true", verify_dual_cauchy(d) ? "true" : "false");
    }

    bool pairing_ok = true;
    for (int m = 1; m <= 6; ++m)
        for (int w = 1; m + w <= 7; ++w) {
            const GrassBox box{m, w};
            for (const Partition& a : rect_partitions(m, w))
                for (const Partition& b : rect_partitions(m, w, box.dimension() - a.weight()))
                    pairing_ok = pairing_ok && pairing(a, b, box) == (b == dual(a, m, w) ? 1 : 0);
        }
    r.add_check("duality pairing, boxes with m + w <= 7", "true", pairing_ok ? "true" : "false");

    if (with_finite) {
        for (int n : {3, 5, 7}) {
            const BigInt expected = at_q(isotropic_line_count_formula(static_cast<unsigned>(n)), 2);
            r.add_check("q=2 n=" + std::to_string(n) + " isotropic lines", expected.get_str(),
                        std::to_string(count_isotropic_lines(n, 2, budget)));
        }
        for (int q : {2, 3})
            r.add_check("q=" + std::to_string(q) + " d=1 DL points", at_q(isotropic_line_count_formula(3), q).get_str(),
                        std::to_string(count_dl_points(1, q, budget)));
        const PairCounts c = classify_pairs(2, 2, budget);
        r.add_check("q=2 d=2 case a", at_q(containing_special_count_formula(2), 2).get_str(), std::to_string(c.contains));
        r.add_check("q=2 d=2 case b", at_q(special_intersection_count_formula(2), 2).get_str(),
                    std::to_string(c.special_meet));
        r.add_check("q=2 d=2 a + b + c", at_q(isotropic_line_count_formula(5), 2).get_str(), std::to_string(c.total()));
    }
    r.elapsed_ms = clock.ms();
    return r;
}

int emit_report(const RunReport& report, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << report.to_json().dump(2) << '\n';
    else
        out << report.to_text();
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degrees of odd unitary Deligne-Lusztig varieties, computed three ways"};
    app.require_subcommand(1);

    std::string format = "text";
    std::uint64_t budget = kDefaultBudget;
    int d = 0, q = 0, n = 0, l = 0, max_d = 0;
    std::string method = "all", check;
    bool with_finite = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* degree = app.add_subcommand("degree", "Degree by closed form, Schubert calculus, and coefficient extraction");
    degree->add_option("--d", d, "Half of dim V - 1")->required();
    degree->add_option("--method", method, "closed|schubert|coeff|all");
    auto* degree_max = degree->add_option("--max-d", max_d, "Override the per-method cap on d");
    add_format(degree);

    auto* cls = app.add_subcommand("class", "Class of DL(V) in the Schubert basis");
    cls->add_option("--d", d)->required();
    add_format(cls);

    auto* syt = app.add_subcommand("syt", "Skew standard Young tableaux versus ordered partitions");
    syt->add_option("--d", d)->required();
    auto* syt_l = syt->add_option("--l", l, "Restrict to |c| = l");
    add_format(syt);

    auto* cauchy = app.add_subcommand("cauchy", "Dual Cauchy identity check");
    cauchy->add_option("--d", d)->required();
    auto* cauchy_max = cauchy->add_option("--max-d", max_d);
    add_format(cauchy);

    auto* finite = app.add_subcommand("finite", "Brute-force hermitian geometry counts over F_{q^2}");
    finite->add_option("--q", q)->required();
    finite->add_option("--check", check, "isotropic|special|dl|pairs")->required();
    auto* finite_n = finite->add_option("--n", n);
    auto* finite_d = finite->add_option("--d", d);
    finite->add_option("--budget", budget, "Maximum enumeration steps");
    add_format(finite);

    auto* verify = app.add_subcommand("verify", "Run every identity check up to max-d");
    verify->add_option("--max-d", max_d)->required();
    verify->add_flag("--with-finite", with_finite, "Include the finite-geometry counts");
    verify->add_option("--budget", budget, "Maximum enumeration steps");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    RunReport report;
    try {
        if (degree->parsed()) {
            report = cmd_degree(d, parse_method(method),
                                degree_max->count() ? std::optional<int>(max_d) : std::nullopt);
        } else if (cls->parsed()) {
            report = cmd_class(d);
        } else if (syt->parsed()) {
            report = cmd_syt(d, syt_l->count() ? std::optional<int>(l) : std::nullopt);
        } else if (cauchy->parsed()) {
            report = cmd_cauchy(d, cauchy_max->count() ? std::optional<int>(max_d) : std::nullopt);
        } else if (finite->parsed()) {
            report = cmd_finite(q, check, finite_n->count() ? std::optional<int>(n) : std::nullopt,
                                finite_d->count() ? std::optional<int>(d) : std::nullopt, budget);
        } else {
            report = cmd_verify(max_d, with_finite, budget);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    return emit_report(report, format, out);
}

}  // namespace dldeg
