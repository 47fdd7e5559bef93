#include "dldeg/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dldeg {

namespace {

void check_rows(const Partition& lam, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (lam.rows() > d)
        throw std::invalid_argument("too many rows: " + lam.to_string() + " in " + std::to_string(d) + " variables");
}

int inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

}  // namespace

MultiPoly schur_bialternant(const Partition& lam, int d) {
    check_rows(lam, d);
    std::vector<int> shifted = lam.padded(d);
    for (int j = 0; j < d; ++j) shifted[j] += d - 1 - j;

    MultiPoly alternant(d);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Exponents e(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) e[i] = shifted[perm[i]];
        alternant.add_term(e, QPoly(inversions(perm) % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    return exact_div(alternant, vandermonde(d));
}

MultiPoly schur_ssyt(const Partition& lam, int d) {
    check_rows(lam, d);
    MultiPoly out(d);
    const int rows = lam.rows();
    if (rows == 0) return MultiPoly::constant(d, QPoly(1));

    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(static_cast<std::size_t>(lam[r]), 0);
    Exponents content(static_cast<std::size_t>(d), 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            out.add_term(content, QPoly(1));
            return;
        }
        if (c == lam[r]) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        // Column strictness forces row r to hold entries >= r + 1.
        for (int v = lo; v <= d; ++v) {
            t[r][c] = v;
            ++content[v - 1];
            fill(r, c + 1);
            --content[v - 1];
        }
    };
    fill(0, 0);
    return out;
}

bool verify_dual_cauchy(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const int n = 2 * d;
    MultiPoly lhs(n);
    for (const Partition& c : box_partitions(d)) {
        MultiPoly sx = schur_bialternant(c, d).embedded(n, 0);
        MultiPoly sy = schur_bialternant(conjugate(complement(c, d)), d).embedded(n, d);
        lhs += sx * sy;
    }
    MultiPoly rhs = MultiPoly::constant(n, QPoly(1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) rhs *= MultiPoly::variable(n, i) + MultiPoly::variable(n, d + j);
    return lhs == rhs;
}

MultiPoly build_S(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    MultiPoly sum(d);
    for (const Partition& c : box_partitions(d))
        sum += scale_vars_by_q(schur_bialternant(c, d)) * schur_bialternant(conjugate(complement(c, d)), d);
    return sum * pow(schur_bialternant(Partition{1}, d), static_cast<unsigned>(d));
}

MultiPoly build_S_product_form(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const MultiPoly q_const = MultiPoly::constant(d, QPoly::q_power(1));
    MultiPoly r = MultiPoly::constant(d, QPoly(1));
    MultiPoly linear(d);
    for (int i = 0; i < d; ++i) {
        linear += MultiPoly::variable(d, i);
        for (int j = 0; j < d; ++j) r *= q_const * MultiPoly::variable(d, i) + MultiPoly::variable(d, j);
    }
    return r * pow(linear, static_cast<unsigned>(d));
}

}  // namespace dldeg
