#include "doctest.h"

#include "dldeg/multipoly.hpp"
#include "dldeg/schubert.hpp"
#include "dldeg/schur.hpp"

using dldeg::GrassBox;
using dldeg::Partition;
using dldeg::QPoly;
using dldeg::SchubertExpr;

namespace {

// Schur expansion of S_a * S_b in m variables, truncated to width w: the
// coefficient of s_nu is the coefficient of x^{nu + staircase} in
// S_a S_b times the Vandermonde. Independent of the LR tableau code.
SchubertExpr lr_via_schur(const Partition& a, const Partition& b, GrassBox box) {
    const int m = box.m;
    const dldeg::MultiPoly prod =
        dldeg::schur_ssyt(a, m) * dldeg::schur_ssyt(b, m) * dldeg::vandermonde(m);
    SchubertExpr out(box);
    for (const auto& nu : dldeg::rect_partitions(m, box.w, a.weight() + b.weight())) {
        dldeg::Exponents e = nu.padded(m);
        for (int i = 0; i < m; ++i) e[i] += m - 1 - i;
        out.add(nu, dldeg::coefficient_of(prod, e));
    }
    return out;
}

}  // namespace

TEST_CASE("pieri examples") {
    CHECK(dldeg::pieri(Partition{}, {3, 2}) == SchubertExpr::single({3, 2}, Partition{1}));
    CHECK(dldeg::pieri(Partition{1}, {2, 1}) == SchubertExpr::single({2, 1}, Partition{1, 1}));
    SchubertExpr two(GrassBox{2, 2});
    two.add(Partition{2}, QPoly{1});
    two.add(Partition{1, 1}, QPoly{1});
    CHECK(dldeg::pieri(Partition{1}, {2, 2}) == two);
    CHECK(dldeg::pieri(Partition{2, 2}, {2, 2}).is_zero());
    CHECK_THROWS_AS(dldeg::pieri(Partition{3}, {2, 2}), dldeg::OutOfBox);
}

TEST_CASE("lr_product examples") {
    const GrassBox box{2, 2};
    CHECK(dldeg::lr_product(Partition{}, Partition{2, 1}, box) == SchubertExpr::single(box, Partition{2, 1}));
    CHECK(dldeg::lr_product(Partition{1}, Partition{1}, box) == dldeg::pieri(Partition{1}, box));
    CHECK(dldeg::lr_product(Partition{2}, Partition{2}, box) == SchubertExpr::single(box, Partition{2, 2}));
    CHECK(dldeg::lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK_THROWS_AS(dldeg::lr_product(Partition{1, 1, 1}, Partition{}, box), dldeg::OutOfBox);
}

TEST_CASE("pieri equals LR with a single box") {
    for (int m = 1; m < 8; ++m)
        for (int w = 1; m + w <= 8; ++w)
            for (const auto& a : dldeg::rect_partitions(m, w))
                CHECK(dldeg::pieri(a, {m, w}) == dldeg::lr_product(a, Partition{1}, {m, w}));
}

TEST_CASE("LR products match Schur polynomial multiplication") {
    for (auto [m, w] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 3}}) {
        const GrassBox box{m, w};
        const auto all = dldeg::rect_partitions(m, w);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (a.weight() + b.weight() > 8) continue;
                CAPTURE(a.to_string());
                CAPTURE(b.to_string());
                CHECK(dldeg::lr_product(a, b, box) == lr_via_schur(a, b, box));
            }
    }
}

TEST_CASE("LR product is commutative and associative in the 3x3 box") {
    const GrassBox box{3, 3};
    std::vector<Partition> small;
    for (const auto& p : dldeg::rect_partitions(3, 3))
        if (p.weight() <= 4) small.push_back(p);
    for (const auto& a : small)
        for (const auto& b : small) {
            const SchubertExpr ab = dldeg::lr_product(a, b, box);
            CHECK(ab == dldeg::lr_product(b, a, box));
            for (const auto& c : small) {
                const SchubertExpr sc = SchubertExpr::single(box, c);
                CHECK(dldeg::multiply(ab, sc) ==
                      dldeg::multiply(SchubertExpr::single(box, a), dldeg::lr_product(b, c, box)));
            }
        }
}

TEST_CASE("pairing") {
    CHECK(dldeg::pairing(Partition{2, 1}, Partition{1}, {2, 2}) == 1);
    CHECK(dldeg::pairing(Partition{2}, Partition{2}, {2, 2}) == 1);
    CHECK(dldeg::pairing(Partition{2}, Partition{1, 1}, {2, 2}) == 0);
    CHECK(dldeg::pairing(Partition{3, 1}, Partition{3, 3, 2}, {4, 3}) == 1);
    CHECK_THROWS_AS(dldeg::pairing(Partition{1}, Partition{1}, {2, 2}), dldeg::DegreeMismatch);
    for (int m = 1; m < 7; ++m)
        for (int w = 1; m + w <= 7; ++w) {
            const GrassBox box{m, w};
            for (const auto& a : dldeg::rect_partitions(m, w))
                for (const auto& b : dldeg::rect_partitions(m, w, box.dimension() - a.weight()))
                    CHECK(dldeg::pairing(a, b, box) == (b == dldeg::dual(a, m, w) ? 1 : 0));
        }
}

TEST_CASE("dl_class") {
    CHECK(dldeg::dl_class(1) == SchubertExpr::single({2, 1}, Partition{1}, QPoly{1, 1}));
    CHECK(dldeg::dl_class(1).to_string() == "(1 + q)*s[1]");

    // sigma_{2,2} + sigma_1 sigma_{2,1} q + sigma_2 sigma_{1,1} q^2 + sigma_{1,1} sigma_2 q^2
    // + sigma_{2,1} sigma_1 q^3 + sigma_{2,2} q^4, expanded by hand in the 3x2 box.
    SchubertExpr two(GrassBox{3, 2});
    two.add(Partition{2, 2}, QPoly{1, 1, 0, 1, 1});
    two.add(Partition{2, 1, 1}, QPoly{0, 1, 2, 1});
    CHECK(dldeg::dl_class(2) == two);

    for (int d = 1; d <= 4; ++d) {
        const SchubertExpr cls = dldeg::dl_class(d);
        CHECK(cls.box() == GrassBox{d + 1, d});
        for (const auto& [a, c] : cls.terms()) CHECK(a.weight() == d * d);
    }
}

TEST_CASE("degree via Schubert calculus") {
    CHECK(dldeg::degree_via_schubert(1) == QPoly{1, 1});
    CHECK(dldeg::degree_via_schubert(2) == QPoly{1, 2, 2, 2, 1});
    CHECK(dldeg::degree_via_schubert(3).coeff(4) == 8);
    dldeg::BigInt expected_at_one = 1;
    for (int d = 1; d <= 6; ++d) {
        CAPTURE(d);
        expected_at_one *= 2 * d;
        const QPoly syt = dldeg::degree_via_schubert(d);
        CHECK(syt == dldeg::degree_via_pieri(d));
        CHECK(syt == dldeg::q_double_factorial(static_cast<unsigned>(d)));
        CHECK(syt.eval(1) == expected_at_one);
    }
}
