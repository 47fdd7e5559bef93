#include "dldeg/qpoly.hpp"

#include <sstream>

namespace dldeg {

QPoly::QPoly(long c) : coeffs_{BigInt(c)} { normalize(); }

QPoly::QPoly(BigInt c) : coeffs_{std::move(c)} { normalize(); }

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

QPoly QPoly::monomial(BigInt c, std::size_t power) {
    std::vector<BigInt> v(power + 1);
    v[power] = std::move(c);
    return QPoly(std::move(v));
}

void QPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt QPoly::eval(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly QPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> out(k + coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + k] = coeffs_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

std::vector<std::string> QPoly::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

QPoly QPoly::from_decimal_strings(const std::vector<std::string>& digits) {
    std::vector<BigInt> v;
    v.reserve(digits.size());
    for (const auto& s : digits) {
        BigInt c;
        if (c.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
        v.push_back(std::move(c));
    }
    return QPoly(std::move(v));
}

InexactDivision::InexactDivision(QPoly remainder)
    : std::domain_error("inexact division, remainder " + remainder.to_string()),
      remainder_(std::move(remainder)) {}

QPoly exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (num.is_zero()) return {};
    std::vector<BigInt> rem = num.coeffs();
    const auto& dc = den.coeffs();
    const std::size_t dn = dc.size();
    const BigInt& lead = dc.back();
    if (rem.size() < dn) throw InexactDivision(num);

    std::vector<BigInt> quot(rem.size() - dn + 1);
    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt& top = rem[k + dn - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw InexactDivision(QPoly(rem));
        BigInt t = top / lead;
        for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= t * dc[j];
        quot[k] = std::move(t);
    }
    QPoly r(std::move(rem));
    if (!r.is_zero()) throw InexactDivision(std::move(r));
    return QPoly(std::move(quot));
}

QPoly q_int(unsigned n) {
    return QPoly(std::vector<BigInt>(n, BigInt(1)));
}

QPoly q_double_factorial(unsigned d) {
    QPoly r(1);
    for (unsigned i = 1; i <= d; ++i) r *= q_int(2 * i);
    return r;
}

namespace {
// 1 - q^k
QPoly one_minus_q_pow(std::size_t k) { return QPoly(1) - QPoly::q_power(k); }
}  // namespace

QPoly isotropic_line_count_formula(unsigned n) {
    if (n % 2 == 0) throw std::invalid_argument("isotropic line formula needs odd n");
    const unsigned d = (n - 1) / 2;
    QPoly num = (QPoly(1) + QPoly::q_power(2 * d + 1)) * one_minus_q_pow(2 * d);
    return exact_div(num, one_minus_q_pow(2));
}

QPoly containing_special_count_formula(unsigned d) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    return exact_div(one_minus_q_pow(2 * (d - 1)), one_minus_q_pow(2));
}

QPoly special_intersection_count_formula(unsigned d) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    return QPoly::q_power(2 * (d - 1)) * (QPoly(1) + QPoly::q_power(3));
}

}  // namespace dldeg
