#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace dldeg {

/// F_{q^2} for q in {2, 3, 4, 5}, elements encoded as 0..q^2-1 (base-p
/// digits are coordinates in the power basis of a Conway polynomial root).
/// All arithmetic is table lookup; the tables are checked against the
/// field axioms on construction.
class FiniteField {
public:
    using Elem = std::uint8_t;

    explicit FiniteField(int q);

    int q() const { return q_; }
    /// Number of elements, q^2.
    int order() const { return order_; }
    int characteristic() const { return p_; }

    Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * order_ + neg_[b]]; }
    Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    /// Multiplicative inverse; throws for zero.
    Elem inv(Elem a) const;
    /// Frobenius x -> x^q, the nontrivial automorphism over F_q.
    Elem conj(Elem a) const { return conj_[a]; }
    Elem pow(Elem a, unsigned e) const;
    /// Elements fixed by conj, i.e. the subfield F_q.
    std::vector<Elem> fixed_field() const;

private:
    void verify_axioms() const;

    int q_;
    int p_;
    int order_;
    std::vector<Elem> add_, mul_, neg_, inv_, conj_;
};

using Vec = std::vector<FiniteField::Elem>;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap on enumerated candidates for the brute-force counts.
inline constexpr std::uint64_t kDefaultBudget = 100000;

/// Subspace of F_{q^2}^n stored as its reduced row echelon basis, which is
/// the canonical representative.
class Subspace {
public:
    Subspace() = default;
    /// The span of the given vectors (any spanning set).
    Subspace(const FiniteField& f, int n, std::vector<Vec> vectors);

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    bool contains_vector(const FiniteField& f, const Vec& v) const;
    /// this contains other
    bool contains(const FiniteField& f, const Subspace& other) const;
    /// Row list like "[[1,0,2],[0,1,3]]".
    std::string to_string() const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) {
        if (a.n_ != b.n_) return a.n_ <=> b.n_;
        return a.rows_ <=> b.rows_;
    }

private:
    int n_ = 0;
    std::vector<Vec> rows_;
};

/// Reduced row echelon form; zero rows dropped.
std::vector<Vec> rref(const FiniteField& f, std::vector<Vec> rows);

/// F_{q^2}^n with the standard hermitian form h(x, y) = sum x_i conj(y_i).
class HermSpace {
public:
    HermSpace(int q, int n);

    const FiniteField& field() const { return *field_; }
    int dim() const { return n_; }

    FiniteField::Elem form(const Vec& x, const Vec& y) const;
    Subspace whole() const;
    Subspace zero() const { return Subspace(*field_, n_, {}); }
    Subspace span(std::vector<Vec> vectors) const { return Subspace(*field_, n_, std::move(vectors)); }

    /// {x : h(x, u) = 0 for all u in U}.
    Subspace orth_complement(const Subspace& u) const;
    Subspace sum(const Subspace& a, const Subspace& b) const;
    Subspace intersection(const Subspace& a, const Subspace& b) const;
    bool is_totally_isotropic(const Subspace& u) const;
    /// W^perp contained in W.
    bool is_special(const Subspace& w) const;

    /// Representatives of all lines: vectors whose first nonzero entry is 1.
    std::vector<Vec> projective_points(std::uint64_t budget = kDefaultBudget) const;
    /// All k-dimensional subspaces, by enumerating echelon forms.
    std::vector<Subspace> grassmannian(int k, std::uint64_t budget = kDefaultBudget) const;
    /// Totally isotropic subspaces of dimension r, sorted.
    std::vector<Subspace> totally_isotropic(int r, std::uint64_t budget = kDefaultBudget) const;

private:
    std::shared_ptr<const FiniteField> field_;
    int n_;
};

/// Number of points of P^{n-1}(F_{q^2}), as a budget estimate.
std::uint64_t projective_point_count(int q, int n);

/// Number of k-subspaces of F_{q^2}^n.
std::uint64_t grassmannian_count(int q, int n, int k);

std::uint64_t count_isotropic_lines(int n, int q, std::uint64_t budget = kDefaultBudget);

/// Codimension-r subspaces W with W^perp in W, as perps of totally
/// isotropic r-subspaces.
std::vector<Subspace> enumerate_special_subspaces(int r, const HermSpace& hs,
                                                  std::uint64_t budget = kDefaultBudget);

/// (d+1)-subspaces U of F_{q^2}^{2d+1} with U^perp in U.
std::uint64_t count_dl_points(int d, int q, std::uint64_t budget = kDefaultBudget);

/// Same count by scanning the whole Grassmannian of (d+1)-subspaces.
std::uint64_t count_dl_points_direct(int d, int q, std::uint64_t budget = kDefaultBudget);

/// Projective solutions of x^{q+1} + y^{q+1} + z^{q+1} = 0 over F_{q^2}.
std::uint64_t count_fermat_points(int q);

struct PairCounts {
    std::uint64_t contains = 0;      // W' in W
    std::uint64_t special_meet = 0;  // W' not in W, W cap W' special
    std::uint64_t other = 0;
    std::uint64_t total() const { return contains + special_meet + other; }
    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Classifies every codimension-1 special W against a fixed codimension-(d-1)
/// special W'.
PairCounts classify_against(const HermSpace& hs, const Subspace& w_prime, const std::vector<Subspace>& codim1);

/// classify_against for n = 2d+1 with W' the first codimension-(d-1) special
/// subspace in enumeration order.
PairCounts classify_pairs(int d, int q, std::uint64_t budget = kDefaultBudget);

}  // namespace dldeg
