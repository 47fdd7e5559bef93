#include "doctest.h"

#include "dldeg/qpoly.hpp"

using dldeg::BigInt;
using dldeg::QPoly;

TEST_CASE("q_int") {
    CHECK(dldeg::q_int(0).is_zero());
    CHECK(dldeg::q_int(1) == QPoly{1});
    CHECK(dldeg::q_int(2) == QPoly{1, 1});
    for (unsigned m = 0; m <= 12; ++m) CHECK(dldeg::q_int(m).eval(1) == m);
}

TEST_CASE("q_double_factorial values") {
    CHECK(dldeg::q_double_factorial(0) == QPoly{1});
    CHECK(dldeg::q_double_factorial(1) == QPoly{1, 1});
    CHECK(dldeg::q_double_factorial(2) == QPoly{1, 2, 2, 2, 1});
    CHECK(dldeg::q_double_factorial(3) == QPoly{1, 3, 5, 7, 8, 8, 7, 5, 3, 1});
}

TEST_CASE("q_double_factorial shape for d <= 8") {
    BigInt two_pow_fact = 1;
    for (unsigned d = 0; d <= 8; ++d) {
        if (d > 0) two_pow_fact *= 2 * d;
        const QPoly p = dldeg::q_double_factorial(d);
        CAPTURE(d);
        CHECK(p.degree() == static_cast<long>(d * d));
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c[i] > 0);
            CHECK(c[i] == c[c.size() - 1 - i]);
        }
        CHECK(p.eval(1) == two_pow_fact);
        // Same product assembled from (1 - q^{2i})/(1 - q).
        QPoly alt{1};
        for (unsigned i = 1; i <= d; ++i) alt *= dldeg::exact_div(QPoly{1} - QPoly::q_power(2 * i), QPoly{1, -1});
        CHECK(alt == p);
    }
}

TEST_CASE("isotropic_line_count_formula") {
    CHECK(dldeg::isotropic_line_count_formula(1).is_zero());
    CHECK(dldeg::isotropic_line_count_formula(3) == QPoly{1, 0, 0, 1});
    CHECK(dldeg::isotropic_line_count_formula(5) == QPoly{1, 0, 1, 0, 0, 1, 0, 1});
    CHECK(dldeg::isotropic_line_count_formula(5).eval(2) == 165);
    CHECK_THROWS_AS(dldeg::isotropic_line_count_formula(4), std::invalid_argument);
}

TEST_CASE("case count formulas") {
    CHECK(dldeg::containing_special_count_formula(1).is_zero());
    CHECK(dldeg::containing_special_count_formula(2) == QPoly{1});
    CHECK(dldeg::containing_special_count_formula(3) == QPoly{1, 0, 1});
    CHECK(dldeg::special_intersection_count_formula(2).eval(2) == 36);
}

TEST_CASE("exact_div") {
    CHECK(dldeg::exact_div(QPoly{1, 0, -1}, QPoly{1, -1}) == QPoly{1, 1});
    CHECK(dldeg::exact_div(QPoly{1, 0, 0, 0, -1}, QPoly{1, 0, -1}) == QPoly{1, 0, 1});
    CHECK(dldeg::exact_div(QPoly{}, QPoly{1, -1}).is_zero());
    CHECK_THROWS_AS(dldeg::exact_div(QPoly{1, 1}, QPoly{1, -1}), dldeg::InexactDivision);
    CHECK_THROWS_AS(dldeg::exact_div(QPoly{1}, QPoly{}), std::invalid_argument);
    // Division is over Z[q], not Q[q].
    CHECK_THROWS_AS(dldeg::exact_div(QPoly{1, 1}, QPoly{2, 2}), dldeg::InexactDivision);
    CHECK(dldeg::exact_div(QPoly{2, 2}, QPoly{1, 1}) == QPoly{2});
    try {
        (void)dldeg::exact_div(QPoly{1, 1}, QPoly{1, -1});
    } catch (const dldeg::InexactDivision& e) {
        CHECK(e.remainder() == QPoly{2});
    }
}

TEST_CASE("rendering") {
    CHECK(QPoly{}.to_string() == "0");
    CHECK(QPoly{1, 2, 1}.to_string() == "1 + 2*q + q^2");
    CHECK(QPoly{0, -1, 0, 3}.to_string() == "-q + 3*q^3");
    CHECK(QPoly{-1, -2}.to_string() == "-1 - 2*q");
    const QPoly p{1, 3, 5, 7, 8, 8, 7, 5, 3, 1};
    CHECK(QPoly::from_decimal_strings(p.to_decimal_strings()) == p);
    CHECK_THROWS(QPoly::from_decimal_strings({"1", "x"}));
}

TEST_CASE("big coefficients stay exact") {
    QPoly p = QPoly{1, 1};
    for (int i = 0; i < 7; ++i) p *= p;  // (1+q)^128
    BigInt central;
    mpz_bin_uiui(central.get_mpz_t(), 128, 64);
    CHECK(p.coeff(64) == central);
    CHECK(p.eval(1) == BigInt(1) << 128);
}
