#include "doctest.h"

#include "dldeg/multipoly.hpp"
#include "dldeg/schur.hpp"

#include <random>

using dldeg::Exponents;
using dldeg::MultiPoly;
using dldeg::QPoly;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
MultiPoly c(int n, QPoly v) { return MultiPoly::constant(n, std::move(v)); }

MultiPoly random_poly(std::mt19937& rng, int nvars, int max_deg) {
    std::uniform_int_distribution<int> exp(0, max_deg), coef(-3, 3), nterms(0, 4);
    MultiPoly p(nvars);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        int budget = max_deg;
        for (auto& v : e) {
            v = std::min(exp(rng), budget);
            budget -= v;
        }
        p.add_term(e, QPoly{coef(rng), coef(rng)});
    }
    return p;
}

// Negated under every transposition of two variables.
bool alternating(const MultiPoly& p) {
    for (int i = 0; i < p.nvars(); ++i)
        for (int j = i + 1; j < p.nvars(); ++j)
            if (!(p.swapped(i, j) == -p)) return false;
    return true;
}

}  // namespace

TEST_CASE("ring operations") {
    CHECK((x(1, 0) + (-x(1, 0))).is_zero());
    CHECK((x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1)) == x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1));
    CHECK(c(2, QPoly{0, 1}) * x(2, 0) * x(2, 1) == MultiPoly::monomial(2, {1, 1}, QPoly{0, 1}));
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), dldeg::VariableMismatch);
    CHECK_THROWS_AS(x(2, 0) * x(3, 0), dldeg::VariableMismatch);
    CHECK_THROWS_AS(MultiPoly(2).add_term({1}, QPoly{1}), dldeg::VariableMismatch);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(20261019);
    for (int nvars = 1; nvars <= 3; ++nvars)
        for (int trial = 0; trial < 40; ++trial) {
            const MultiPoly a = random_poly(rng, nvars, 4), b = random_poly(rng, nvars, 4),
                            e = random_poly(rng, nvars, 4);
            const MultiPoly ab = a * b;
            CHECK(ab == b * a);
            CHECK((a * b) * e == a * (b * e));
            CHECK(a * (b + e) == a * b + a * e);
            CHECK((a + b) - b == a);
            for (const auto& [ex, co] : ab.terms()) CHECK_FALSE(co.is_zero());
        }
}

TEST_CASE("vandermonde") {
    CHECK(dldeg::vandermonde(1) == c(1, QPoly{1}));
    CHECK(dldeg::vandermonde(2) == x(2, 0) - x(2, 1));
    const MultiPoly v3 = dldeg::vandermonde(3);
    CHECK(v3.size() == 6);
    CHECK(dldeg::coefficient_of(v3, {2, 1, 0}) == QPoly{1});
    CHECK(dldeg::coefficient_of(v3, {1, 2, 0}) == QPoly{-1});
    for (int d = 1; d <= 4; ++d) CHECK(alternating(dldeg::vandermonde(d)));
}

TEST_CASE("coefficient_of") {
    const MultiPoly p = MultiPoly::monomial(1, {2}, QPoly{1, 1});
    CHECK(dldeg::coefficient_of(p, {2}) == QPoly{1, 1});
    CHECK(dldeg::coefficient_of(x(2, 0) * x(2, 1), {2, 0}).is_zero());
    CHECK_THROWS_AS(dldeg::coefficient_of(p, {2, 0}), dldeg::VariableMismatch);
    CHECK(dldeg::coefficient_of(dldeg::build_coeff_poly(2), {4, 3}) == QPoly{1, 2, 2, 2, 1});
}

TEST_CASE("build_coeff_poly matches the displayed small cases") {
    CHECK(dldeg::build_coeff_poly(1) == MultiPoly::monomial(1, {2}, QPoly{1, 1}));

    MultiPoly expected(2);
    expected.add_term({6, 1}, QPoly{0, 1, 2, 1});
    expected.add_term({5, 2}, QPoly{1, 3, 4, 3, 1});
    expected.add_term({4, 3}, QPoly{1, 2, 2, 2, 1});
    expected.add_term({3, 4}, QPoly{-1, -2, -2, -2, -1});
    expected.add_term({2, 5}, QPoly{-1, -3, -4, -3, -1});
    expected.add_term({1, 6}, QPoly{0, -1, -2, -1});
    CHECK(dldeg::build_coeff_poly(2) == expected);

    CHECK(dldeg::coefficient_of(dldeg::build_coeff_poly(3), {6, 5, 4}) == QPoly{1, 3, 5, 7, 8, 8, 7, 5, 3, 1});
}

TEST_CASE("build_coeff_poly structure") {
    for (int d = 1; d <= 3; ++d) {
        const MultiPoly p = dldeg::build_coeff_poly(d);
        CHECK(alternating(p));
        // Homogeneous of x-degree d^2 + d + d(d-1)/2.
        for (const auto& [e, co] : p.terms()) {
            int deg = 0;
            for (int v : e) deg += v;
            CHECK(deg == d * d + d + d * (d - 1) / 2);
        }
    }
}

TEST_CASE("degree_via_coeff agrees with the closed form") {
    CHECK(dldeg::point_class_monomial(3) == Exponents{6, 5, 4});
    CHECK(dldeg::degree_via_coeff(1) == QPoly{1, 1});
    CHECK(dldeg::degree_via_coeff(2) == QPoly{1, 2, 2, 2, 1});
    for (unsigned d = 1; d <= 5; ++d) {
        CAPTURE(d);
        CHECK(dldeg::degree_via_coeff(static_cast<int>(d)) == dldeg::q_double_factorial(d));
    }
}

TEST_CASE("scale_vars_by_q") {
    CHECK(dldeg::scale_vars_by_q(x(1, 0) * x(1, 0)) == MultiPoly::monomial(1, {2}, QPoly{0, 0, 1}));
    CHECK(dldeg::scale_vars_by_q(x(2, 0) * x(2, 1) + c(2, QPoly{1})) ==
          MultiPoly::monomial(2, {1, 1}, QPoly{0, 0, 1}) + c(2, QPoly{1}));
    CHECK(dldeg::scale_vars_by_q(dldeg::schur_bialternant(dldeg::Partition{1}, 2)) ==
          c(2, QPoly{0, 1}) * (x(2, 0) + x(2, 1)));
}

TEST_CASE("exact multivariate division") {
    const MultiPoly a = x(3, 0) + c(3, QPoly{0, 1}) * x(3, 2);
    const MultiPoly v = dldeg::vandermonde(3);
    CHECK(dldeg::exact_div(a * v, v) == a);
    CHECK_THROWS_AS(dldeg::exact_div(a, v), std::logic_error);
    CHECK_THROWS_AS(dldeg::exact_div(a, MultiPoly(3)), std::invalid_argument);
}

TEST_CASE("rendering and specialization") {
    const MultiPoly p = MultiPoly::monomial(2, {2, 0}, QPoly{1, 1}) - x(2, 1);
    CHECK(p.to_string() == "(1 + q)*x1^2 + (-1)*x2");
    CHECK(MultiPoly(2).to_string() == "0");
    CHECK(p.drop_last_at_zero() == MultiPoly::monomial(1, {2}, QPoly{1, 1}));
    CHECK(p.embedded(4, 2) == MultiPoly::monomial(4, {0, 0, 2, 0}, QPoly{1, 1}) - x(4, 3));
    CHECK(p.total_degree() == 2);
}
