#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dldeg {

using BigInt = mpz_class;

/// Dense univariate polynomial in q with exact integer coefficients.
///
/// coeffs()[i] is the coefficient of q^i. Trailing zeros are always stripped,
/// so the zero polynomial is the empty sequence and equality is structural.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);                                   // constant
    explicit QPoly(BigInt c);
    explicit QPoly(std::vector<BigInt> coeffs);
    QPoly(std::initializer_list<long> coeffs);

    static QPoly monomial(BigInt c, std::size_t power);
    static QPoly q_power(std::size_t power) { return monomial(1, power); }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of q^i, zero beyond the stored range.
    BigInt coeff(std::size_t i) const;
    BigInt eval(const BigInt& q) const;

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    /// Multiply by q^k.
    QPoly shifted(std::size_t k) const;
    QPoly operator-() const;

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// "1 + 2*q + q^2"; zero renders as "0".
    std::string to_string() const;
    /// Ascending coefficients as decimal strings.
    std::vector<std::string> to_decimal_strings() const;
    static QPoly from_decimal_strings(const std::vector<std::string>& digits);

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

class InexactDivision : public std::domain_error {
public:
    explicit InexactDivision(QPoly remainder);
    const QPoly& remainder() const { return remainder_; }

private:
    QPoly remainder_;
};

/// Quotient of num by den when the division is exact over the integers.
/// Throws InexactDivision carrying the remainder otherwise, and
/// std::invalid_argument for a zero divisor.
QPoly exact_div(const QPoly& num, const QPoly& den);

/// [n]_q = 1 + q + ... + q^{n-1}.
QPoly q_int(unsigned n);

/// prod_{i=1}^{d} [2i]_q, the degree of the odd unitary Deligne-Lusztig variety.
QPoly q_double_factorial(unsigned d);

/// (1 + q^{2d+1})(1 - q^{2d})/(1 - q^2) for n = 2d+1: isotropic lines in a
/// hermitian space of odd dimension n.
QPoly isotropic_line_count_formula(unsigned n);

/// (1 - q^{2(d-1)})/(1 - q^2): codimension-1 special subspaces containing a
/// fixed codimension-(d-1) special subspace.
QPoly containing_special_count_formula(unsigned d);

/// q^{2(d-1)}(1 + q^3): codimension-1 special W not containing W' whose
/// intersection with W' is special.
QPoly special_intersection_count_formula(unsigned d);

}  // namespace dldeg
