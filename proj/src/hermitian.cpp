#include "dldeg/hermitian.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dldeg {

namespace {

struct FieldParams {
    int p;
    int degree;             // [F_{q^2} : F_p]
    std::vector<int> conway;  // monic, low degree first
};

FieldParams params_for(int q) {
    switch (q) {
        case 2: return {2, 2, {1, 1, 1}};        // x^2 + x + 1
        case 3: return {3, 2, {2, 2, 1}};        // x^2 + 2x + 2
        case 4: return {2, 4, {1, 1, 0, 0, 1}};  // x^4 + x + 1
        case 5: return {5, 2, {2, 4, 1}};        // x^2 + 4x + 2
        default: throw std::invalid_argument("unsupported q = " + std::to_string(q) + " (supported: 2, 3, 4, 5)");
    }
}

std::vector<int> digits(int a, int p, int k) {
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i, a /= p) out[i] = a % p;
    return out;
}

int undigits(const std::vector<int>& d, int p) {
    int a = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
    return a;
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void charge(std::uint64_t& spent, std::uint64_t amount, std::uint64_t budget, const std::string& what) {
    spent += amount;
    if (spent > budget)
        throw BudgetExceeded("budget exceeded: " + what + " needs more than " + std::to_string(budget) +
                             " enumeration steps");
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
    const FieldParams s = params_for(q);
    p_ = s.p;
    order_ = q * q;
    const int k = s.degree;
    const std::size_t sq = static_cast<std::size_t>(order_) * order_;
    add_.resize(sq);
    mul_.resize(sq);
    neg_.resize(order_);
    inv_.assign(order_, 0);
    conj_.resize(order_);

    for (int a = 0; a < order_; ++a) {
        const auto da = digits(a, p_, k);
        std::vector<int> dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(undigits(dn, p_));
        for (int b = 0; b < order_; ++b) {
            const auto db = digits(b, p_, k);
            std::vector<int> sum(k);
            for (int i = 0; i < k; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * order_ + b] = static_cast<Elem>(undigits(sum, p_));

            std::vector<int> prod(static_cast<std::size_t>(2 * k - 1), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int deg = 2 * k - 2; deg >= k; --deg) {
                const int c = prod[deg];
                if (c == 0) continue;
                for (int i = 0; i <= k; ++i)
                    prod[deg - k + i] = ((prod[deg - k + i] - c * s.conway[i]) % p_ + p_) % p_;
            }
            prod.resize(k);
            mul_[a * order_ + b] = static_cast<Elem>(undigits(prod, p_));
        }
    }
    for (int a = 1; a < order_; ++a)
        for (int b = 1; b < order_; ++b)
            if (mul_[a * order_ + b] == 1) inv_[a] = static_cast<Elem>(b);
    for (int a = 0; a < order_; ++a) conj_[a] = pow(static_cast<Elem>(a), static_cast<unsigned>(q));
    verify_axioms();
}

FiniteField::Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no inverse");
    return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned e) const {
    Elem r = 1;
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::vector<FiniteField::Elem> FiniteField::fixed_field() const {
    std::vector<Elem> out;
    for (int a = 0; a < order_; ++a)
        if (conj_[a] == a) out.push_back(static_cast<Elem>(a));
    return out;
}

void FiniteField::verify_axioms() const {
    auto fail = [this](const std::string& what) {
        throw std::logic_error("F_" + std::to_string(order_) + " tables violate " + what);
    };
    for (int a = 0; a < order_; ++a) {
        const Elem ea = static_cast<Elem>(a);
        if (add(ea, 0) != ea || mul(ea, 1) != ea) fail("identities");
        if (add(ea, neg(ea)) != 0) fail("additive inverses");
        if (a != 0 && mul(ea, inv_[a]) != 1) fail("multiplicative inverses (modulus not irreducible)");
        if (conj(conj(ea)) != ea) fail("involutive conjugation");
        for (int b = 0; b < order_; ++b) {
            const Elem eb = static_cast<Elem>(b);
            if (add(ea, eb) != add(eb, ea) || mul(ea, eb) != mul(eb, ea)) fail("commutativity");
            if (conj(add(ea, eb)) != add(conj(ea), conj(eb)) || conj(mul(ea, eb)) != mul(conj(ea), conj(eb)))
                fail("conjugation is a field automorphism");
            for (int c = 0; c < order_; ++c) {
                const Elem ec = static_cast<Elem>(c);
                if (add(add(ea, eb), ec) != add(ea, add(eb, ec))) fail("additive associativity");
                if (mul(mul(ea, eb), ec) != mul(ea, mul(eb, ec))) fail("multiplicative associativity");
                if (mul(ea, add(eb, ec)) != add(mul(ea, eb), mul(ea, ec))) fail("distributivity");
            }
        }
    }
    if (static_cast<int>(fixed_field().size()) != q_) fail("conjugation fixing exactly F_q");
}

std::vector<Vec> rref(const FiniteField& f, std::vector<Vec> rows) {
    if (rows.empty()) return rows;
    const std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const auto s = f.inv(rows[r][col]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            const auto factor = rows[i][col];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

Subspace::Subspace(const FiniteField& f, int n, std::vector<Vec> vectors) : n_(n) {
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n) throw std::invalid_argument("vector length does not match ambient dimension");
    rows_ = rref(f, std::move(vectors));
}

bool Subspace::contains_vector(const FiniteField& f, const Vec& v) const {
    std::vector<Vec> rows = rows_;
    rows.push_back(v);
    return static_cast<int>(rref(f, std::move(rows)).size()) == dim();
}

bool Subspace::contains(const FiniteField& f, const Subspace& other) const {
    if (other.dim() > dim()) return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const Vec& v) { return contains_vector(f, v); });
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        os << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << static_cast<int>(rows_[i][j]);
        os << ']';
    }
    os << ']';
    return os.str();
}

HermSpace::HermSpace(int q, int n) : field_(std::make_shared<const FiniteField>(q)), n_(n) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
}

FiniteField::Elem HermSpace::form(const Vec& x, const Vec& y) const {
    const auto& f = *field_;
    FiniteField::Elem acc = 0;
    for (int i = 0; i < n_; ++i) acc = f.add(acc, f.mul(x[i], f.conj(y[i])));
    return acc;
}

Subspace HermSpace::whole() const {
    std::vector<Vec> rows;
    for (int i = 0; i < n_; ++i) {
        Vec e(static_cast<std::size_t>(n_), 0);
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    return span(std::move(rows));
}

Subspace HermSpace::orth_complement(const Subspace& u) const {
    const auto& f = *field_;
    // h(x, u) = sum_i conj(u_i) x_i, so U^perp is the null space of conj(U).
    std::vector<Vec> a;
    for (const auto& row : u.basis()) {
        Vec c(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) c[i] = f.conj(row[i]);
        a.push_back(std::move(c));
    }
    a = rref(f, std::move(a));
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
    for (const auto& row : a) {
        int col = 0;
        while (row[col] == 0) ++col;
        pivot_of_row.push_back(col);
        is_pivot[col] = true;
    }
    std::vector<Vec> null;
    for (int free = 0; free < n_; ++free) {
        if (is_pivot[free]) continue;
        Vec x(static_cast<std::size_t>(n_), 0);
        x[free] = 1;
        for (std::size_t r = 0; r < a.size(); ++r) x[pivot_of_row[r]] = f.neg(a[r][free]);
        null.push_back(std::move(x));
    }
    return span(std::move(null));
}

Subspace HermSpace::sum(const Subspace& a, const Subspace& b) const {
    std::vector<Vec> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return span(std::move(rows));
}

Subspace HermSpace::intersection(const Subspace& a, const Subspace& b) const {
    return orth_complement(sum(orth_complement(a), orth_complement(b)));
}

bool HermSpace::is_totally_isotropic(const Subspace& u) const {
    for (const auto& x : u.basis())
        for (const auto& y : u.basis())
            if (form(x, y) != 0) return false;
    return true;
}

bool HermSpace::is_special(const Subspace& w) const { return w.contains(*field_, orth_complement(w)); }

std::uint64_t projective_point_count(int q, int n) {
    const std::uint64_t big_q = static_cast<std::uint64_t>(q) * q;
    return (ipow(big_q, n) - 1) / (big_q - 1);
}

std::uint64_t grassmannian_count(int q, int n, int k) {
    if (k < 0 || k > n) return 0;
    const std::uint64_t big_q = static_cast<std::uint64_t>(q) * q;
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= ipow(big_q, n - i) - 1;
        den *= ipow(big_q, i + 1) - 1;
    }
    return num / den;
}

namespace {

// Points of the span of an echelon basis: combinations whose first nonzero
// coefficient is 1, which are normalized vectors because of the pivots.
std::vector<Vec> points_of(const FiniteField& f, const Subspace& s) {
    const int k = s.dim();
    const int order = f.order();
    const int n = s.ambient();
    std::vector<Vec> out;
    for (int lead = 0; lead < k; ++lead) {
        const std::uint64_t tail = ipow(static_cast<std::uint64_t>(order), k - 1 - lead);
        for (std::uint64_t code = 0; code < tail; ++code) {
            Vec coeffs(static_cast<std::size_t>(k), 0);
            coeffs[lead] = 1;
            std::uint64_t c = code;
            for (int i = lead + 1; i < k; ++i, c /= order) coeffs[i] = static_cast<FiniteField::Elem>(c % order);
            Vec v(static_cast<std::size_t>(n), 0);
            for (int i = lead; i < k; ++i) {
                if (coeffs[i] == 0) continue;
                for (int j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coeffs[i], s.basis()[i][j]));
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace

std::vector<Vec> HermSpace::projective_points(std::uint64_t budget) const {
    std::uint64_t spent = 0;
    charge(spent, projective_point_count(field_->q(), n_), budget, "projective point enumeration");
    return points_of(*field_, whole());
}

std::vector<Subspace> HermSpace::grassmannian(int k, std::uint64_t budget) const {
    if (k < 0 || k > n_) throw std::invalid_argument("subspace dimension out of range");
    std::uint64_t spent = 0;
    charge(spent, grassmannian_count(field_->q(), n_, k), budget, "Grassmannian enumeration");
    const auto& f = *field_;
    const int order = f.order();
    std::vector<Subspace> out;

    std::vector<int> pivots(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots[i] = i;
    while (true) {
        // Free slots: (row, col) with col > pivot[row] and col not a pivot.
        std::vector<std::pair<int, int>> free;
        for (int r = 0; r < k; ++r)
            for (int c = pivots[r] + 1; c < n_; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
        const std::uint64_t combos = ipow(static_cast<std::uint64_t>(order), static_cast<int>(free.size()));
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::vector<Vec> rows(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(n_), 0));
            for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
            std::uint64_t c = code;
            for (const auto& [r, col] : free) {
                rows[r][col] = static_cast<FiniteField::Elem>(c % order);
                c /= order;
            }
            out.push_back(span(std::move(rows)));
        }
        // Next pivot set in lexicographic order.
        int i = k - 1;
        while (i >= 0 && pivots[i] == n_ - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

std::vector<Subspace> HermSpace::totally_isotropic(int r, std::uint64_t budget) const {
    if (r < 0 || r > n_) throw std::invalid_argument("subspace dimension out of range");
    if (r == 0) return {zero()};
    const auto& f = *field_;
    std::uint64_t spent = 0;
    charge(spent, projective_point_count(f.q(), n_), budget, "isotropic subspace enumeration");

    std::set<Subspace> level;
    for (auto& p : points_of(f, whole()))
        if (form(p, p) == 0) level.insert(span({std::move(p)}));

    for (int s = 2; s <= r; ++s) {
        std::set<Subspace> next;
        for (const auto& t : level) {
            const Subspace perp = orth_complement(t);
            charge(spent, projective_point_count(f.q(), perp.dim()), budget, "isotropic subspace enumeration");
            for (auto& p : points_of(f, perp)) {
                if (form(p, p) != 0 || t.contains_vector(f, p)) continue;
                std::vector<Vec> rows = t.basis();
                rows.push_back(std::move(p));
                next.insert(span(std::move(rows)));
            }
        }
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

std::uint64_t count_isotropic_lines(int n, int q, std::uint64_t budget) {
    const HermSpace hs(q, n);
    std::uint64_t count = 0;
    for (const auto& p : hs.projective_points(budget))
        if (hs.form(p, p) == 0) ++count;
    return count;
}

std::vector<Subspace> enumerate_special_subspaces(int r, const HermSpace& hs, std::uint64_t budget) {
    if (r < 0 || r > hs.dim()) throw std::invalid_argument("codimension out of range");
    std::vector<Subspace> out;
    for (const auto& t : hs.totally_isotropic(r, budget)) out.push_back(hs.orth_complement(t));
    return out;
}

std::uint64_t count_dl_points_direct(int d, int q, std::uint64_t budget) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    const HermSpace hs(q, 2 * d + 1);
    std::uint64_t count = 0;
    for (const auto& u : hs.grassmannian(d + 1, budget))
        if (hs.is_special(u)) ++count;
    return count;
}

std::uint64_t count_dl_points(int d, int q, std::uint64_t budget) {
    if (d < 0) throw std::invalid_argument("d must be nonnegative");
    if (d <= 1) return count_dl_points_direct(d, q, budget);
    const HermSpace hs(q, 2 * d + 1);
    std::uint64_t count = 0;
    for (const auto& u : enumerate_special_subspaces(d, hs, budget)) {
        if (!hs.is_special(u)) throw std::logic_error("perp of a totally isotropic subspace is not special");
        ++count;
    }
    return count;
}

std::uint64_t count_fermat_points(int q) {
    const FiniteField f(q);
    const auto order = static_cast<FiniteField::Elem>(f.order());
    const unsigned e = static_cast<unsigned>(q) + 1;
    std::uint64_t count = 0;
    for (FiniteField::Elem x = 0; x < order; ++x)
        for (FiniteField::Elem y = 0; y < order; ++y)
            for (FiniteField::Elem z = 0; z < order; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (f.add(f.add(f.pow(x, e), f.pow(y, e)), f.pow(z, e)) == 0) ++count;
            }
    // Each projective point has order - 1 affine representatives.
    return count / (f.order() - 1);
}

PairCounts classify_against(const HermSpace& hs, const Subspace& w_prime, const std::vector<Subspace>& codim1) {
    const auto& f = hs.field();
    PairCounts out;
    for (const auto& w : codim1) {
        if (w.contains(f, w_prime)) {
            ++out.contains;
        } else if (hs.is_special(hs.intersection(w, w_prime))) {
            ++out.special_meet;
        } else {
            ++out.other;
        }
    }
    return out;
}

PairCounts classify_pairs(int d, int q, std::uint64_t budget) {
    if (d < 2) throw std::invalid_argument("classify_pairs needs d >= 2");
    const HermSpace hs(q, 2 * d + 1);
    const auto w_primes = enumerate_special_subspaces(d - 1, hs, budget);
    const auto codim1 = enumerate_special_subspaces(1, hs, budget);
    return classify_against(hs, w_primes.front(), codim1);
}

}  // namespace dldeg
