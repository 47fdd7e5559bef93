#pragma once

#include "dldeg/qpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dldeg {

using Exponents = std::vector<int>;

/// Graded lexicographic order, largest first: higher total degree first,
/// then lexicographically larger exponent vector first.
struct GrlexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class VariableMismatch : public std::invalid_argument {
public:
    VariableMismatch() : std::invalid_argument("variable count mismatch") {}
};

/// Sparse polynomial in x_1..x_n with QPoly coefficients. No zero
/// coefficient is ever stored; every key has length nvars().
class MultiPoly {
public:
    using Terms = std::map<Exponents, QPoly, GrlexDescending>;

    explicit MultiPoly(int nvars = 0);

    static MultiPoly constant(int nvars, QPoly c);
    /// x_{index+1}, with index 0-based.
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, Exponents exps, QPoly c = QPoly(1));

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    /// Largest total x-degree among terms; -1 for zero.
    int total_degree() const;

    /// Adds c * x^exps in place.
    void add_term(const Exponents& exps, const QPoly& c);

    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly& operator*=(const MultiPoly& rhs);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Same polynomial with x_i and x_j exchanged.
    MultiPoly swapped(int i, int j) const;
    /// Specialize the last variable to zero and drop it.
    MultiPoly drop_last_at_zero() const;
    /// Re-index into a ring with total_vars variables, x_i -> x_{i+offset}.
    MultiPoly embedded(int total_vars, int offset) const;

    /// "(1 + q)*x1^2 + (-1)*x2"; zero renders as "0".
    std::string to_string() const;

private:
    void check_same(const MultiPoly& rhs) const;
    int nvars_;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned k);

/// Stored coefficient of the monomial, or zero.
QPoly coefficient_of(const MultiPoly& p, const Exponents& mono);

/// Exact quotient num/den, by repeated cancellation of leading terms.
/// Throws std::logic_error when den does not divide num.
MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den);

/// x_i -> q x_i for every i.
MultiPoly scale_vars_by_q(const MultiPoly& p);

/// prod_{i<j} (x_i - x_j).
MultiPoly vandermonde(int d);

/// (prod_{i,j} (q x_i + x_j)) (x_1 + ... + x_d)^d prod_{i<j} (x_i - x_j).
MultiPoly build_coeff_poly(int d);

/// The staircase-shifted exponent (2d, 2d-1, ..., d+1).
Exponents point_class_monomial(int d);

/// Coefficient of x_1^{2d} x_2^{2d-1} ... x_d^{d+1} in build_coeff_poly(d).
QPoly degree_via_coeff(int d);

}  // namespace dldeg
