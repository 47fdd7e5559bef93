#include "dldeg/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dldeg {

namespace {
int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

bool GrlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree_of(a), db = degree_of(b);
    if (da != db) return da > db;
    return a > b;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, QPoly c) {
    return monomial(nvars, Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[index] = 1;
    return monomial(nvars, std::move(e));
}

MultiPoly MultiPoly::monomial(int nvars, Exponents exps, QPoly c) {
    MultiPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
    return best;
}

void MultiPoly::add_term(const Exponents& exps, const QPoly& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw VariableMismatch();
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; }))
        throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void MultiPoly::check_same(const MultiPoly& rhs) const {
    if (nvars_ != rhs.nvars_) throw VariableMismatch();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    check_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    check_same(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly out(a.nvars_);
    Exponents e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, inserted] = out.terms_.try_emplace(e);
            it->second += ca * cb;
        }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly MultiPoly::swapped(int i, int j) const {
    if (i < 0 || j < 0 || i >= nvars_ || j >= nvars_) throw std::out_of_range("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[i], f[j]);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::drop_last_at_zero() const {
    if (nvars_ == 0) throw std::invalid_argument("no variable to drop");
    MultiPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        if (e.back() != 0) continue;
        r.terms_.emplace(Exponents(e.begin(), e.end() - 1), c);
    }
    return r;
}

MultiPoly MultiPoly::embedded(int total_vars, int offset) const {
    if (offset < 0 || offset + nvars_ > total_vars) throw std::out_of_range("embedding does not fit");
    MultiPoly r(total_vars);
    for (const auto& [e, c] : terms_) {
        Exponents f(static_cast<std::size_t>(total_vars), 0);
        std::copy(e.begin(), e.end(), f.begin() + offset);
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly r = MultiPoly::constant(p.nvars(), QPoly(1));
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

QPoly coefficient_of(const MultiPoly& p, const Exponents& mono) {
    if (static_cast<int>(mono.size()) != p.nvars()) throw VariableMismatch();
    auto it = p.terms().find(mono);
    return it == p.terms().end() ? QPoly() : it->second;
}

MultiPoly exact_div(const MultiPoly& num, const MultiPoly& den) {
    if (num.nvars() != den.nvars()) throw VariableMismatch();
    if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const auto& [dlead_e, dlead_c] = *den.terms().begin();
    MultiPoly rem = num;
    MultiPoly quot(num.nvars());
    while (!rem.is_zero()) {
        const auto& [rlead_e, rlead_c] = *rem.terms().begin();
        Exponents e(rlead_e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = rlead_e[i] - dlead_e[i];
            if (e[i] < 0) throw std::logic_error("inexact multivariate division");
        }
        QPoly c;
        try {
            c = exact_div(rlead_c, dlead_c);
        } catch (const InexactDivision&) {
            throw std::logic_error("inexact multivariate division");
        }
        MultiPoly t = MultiPoly::monomial(num.nvars(), std::move(e), std::move(c));
        rem -= t * den;
        quot += t;
    }
    return quot;
}

MultiPoly scale_vars_by_q(const MultiPoly& p) {
    MultiPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.shifted(static_cast<std::size_t>(degree_of(e))));
    return r;
}

namespace {
MultiPoly x_minus_x(int d, int i, int j) { return MultiPoly::variable(d, i) - MultiPoly::variable(d, j); }
}  // namespace

MultiPoly vandermonde(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    MultiPoly r = MultiPoly::constant(d, QPoly(1));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) r *= x_minus_x(d, i, j);
    return r;
}

MultiPoly build_coeff_poly(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const MultiPoly q_const = MultiPoly::constant(d, QPoly::q_power(1));
    MultiPoly r = MultiPoly::constant(d, QPoly(1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r *= q_const * MultiPoly::variable(d, i) + MultiPoly::variable(d, j);
    MultiPoly linear(d);
    for (int i = 0; i < d; ++i) linear += MultiPoly::variable(d, i);
    for (int k = 0; k < d; ++k) r *= linear;
    // Vandermonde one factor at a time keeps the intermediate support small.
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) r *= x_minus_x(d, i, j);
    return r;
}

Exponents point_class_monomial(int d) {
    Exponents e(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) e[i] = 2 * d - i;
    return e;
}

QPoly degree_via_coeff(int d) { return coefficient_of(build_coeff_poly(d), point_class_monomial(d)); }

}  // namespace dldeg
