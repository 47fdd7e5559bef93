#pragma once

#include "dldeg/partitions.hpp"
#include "dldeg/qpoly.hpp"

#include <map>
#include <string>

namespace dldeg {

/// The m x w rectangle indexing Schubert classes of Gr_m of an (m+w)-space.
struct GrassBox {
    int m = 0;
    int w = 0;

    bool holds(const Partition& a) const { return a.fits(m, w); }
    /// The point class (w, ..., w) with m rows.
    Partition full() const { return Partition(std::vector<int>(static_cast<std::size_t>(m), w)); }
    int dimension() const { return m * w; }
    friend bool operator==(const GrassBox&, const GrassBox&) = default;
};

/// QPoly-linear combination of Schubert classes inside a box.
class SchubertExpr {
public:
    using Terms = std::map<Partition, QPoly, GradedLex>;

    explicit SchubertExpr(GrassBox box);
    static SchubertExpr single(GrassBox box, const Partition& a, QPoly c = QPoly(1));

    const GrassBox& box() const { return box_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    QPoly coefficient(const Partition& a) const;

    /// Adds c * sigma_a; throws OutOfBox if a leaves the box.
    void add(const Partition& a, const QPoly& c);
    SchubertExpr& operator+=(const SchubertExpr& rhs);
    SchubertExpr scaled(const QPoly& c) const;
    friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) {
        return a.box_ == b.box_ && a.terms_ == b.terms_;
    }

    /// "(1 + q)*s[1] + ..." in graded lexicographic order; zero renders "0".
    std::string to_string() const;

private:
    GrassBox box_;
    Terms terms_;
};

/// sigma_a * sigma_1: every single-box extension of a that stays in the box.
SchubertExpr pieri(const Partition& a, GrassBox box);

/// Number of LR tableaux of shape outer/inner and content content.
BigInt lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content);

/// sigma_a * sigma_b truncated to the box, via LR tableau enumeration.
SchubertExpr lr_product(const Partition& a, const Partition& b, GrassBox box);

/// Bilinear extension of lr_product.
SchubertExpr multiply(const SchubertExpr& x, const SchubertExpr& y);

/// Linear extension of pieri.
SchubertExpr multiply_by_sigma1(const SchubertExpr& x);

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Intersection number of sigma_a and sigma_b in complementary degrees,
/// read off the point class coefficient of their product.
int pairing(const Partition& a, const Partition& b, GrassBox box);

/// sum_c q^{|c|} sigma_c sigma_{c-hat'} in the (d+1) x d box.
SchubertExpr dl_class(int d);

/// sum_c q^{|c|} #SYT((c-hat')^*/c).
QPoly degree_via_schubert(int d);

/// dl_class(d) * sigma_1^d by repeated Pieri, read at the point class.
QPoly degree_via_pieri(int d);

}  // namespace dldeg
