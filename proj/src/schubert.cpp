#include "dldeg/schubert.hpp"

#include <functional>
#include <sstream>

namespace dldeg {

namespace {

void require_in_box(const Partition& a, const GrassBox& box) {
    if (box.m < 1 || box.w < 1) throw std::invalid_argument("box dimensions must be positive");
    if (!box.holds(a))
        throw OutOfBox(a.to_string() + " does not fit in the " + std::to_string(box.m) + "x" +
                       std::to_string(box.w) + " box");
}

}  // namespace

SchubertExpr::SchubertExpr(GrassBox box) : box_(box) {
    if (box.m < 1 || box.w < 1) throw std::invalid_argument("box dimensions must be positive");
}

SchubertExpr SchubertExpr::single(GrassBox box, const Partition& a, QPoly c) {
    SchubertExpr e(box);
    e.add(a, c);
    return e;
}

QPoly SchubertExpr::coefficient(const Partition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? QPoly() : it->second;
}

void SchubertExpr::add(const Partition& a, const QPoly& c) {
    require_in_box(a, box_);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SchubertExpr& SchubertExpr::operator+=(const SchubertExpr& rhs) {
    if (!(box_ == rhs.box_)) throw std::invalid_argument("Schubert expressions live in different boxes");
    for (const auto& [a, c] : rhs.terms_) add(a, c);
    return *this;
}

SchubertExpr SchubertExpr::scaled(const QPoly& c) const {
    SchubertExpr r(box_);
    for (const auto& [a, x] : terms_) r.add(a, x * c);
    return r;
}

std::string SchubertExpr::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ")*s" << a.to_string();
    }
    return os.str();
}

SchubertExpr pieri(const Partition& a, GrassBox box) {
    require_in_box(a, box);
    SchubertExpr out(box);
    std::vector<int> parts = a.padded(box.m);
    for (int i = 0; i < box.m; ++i) {
        if (parts[i] == box.w) continue;
        if (i > 0 && parts[i] == parts[i - 1]) continue;
        ++parts[i];
        out.add(Partition(parts), QPoly(1));
        --parts[i];
    }
    return out;
}

BigInt lr_coefficient(const Partition& outer, const Partition& inner, const Partition& content) {
    if (!outer.contains(inner)) return 0;
    if (outer.weight() - inner.weight() != content.weight()) return 0;
    const int rows = outer.rows();
    const int letters = content.rows();
    if (rows == 0) return 1;

    // Cells in reverse reading order: rows top to bottom, right to left.
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = outer[r] - 1; c >= inner[r]; --c) cells.push_back({r, c});

    std::vector<std::vector<int>> t(rows, std::vector<int>(static_cast<std::size_t>(outer[0]), 0));
    std::vector<int> used(static_cast<std::size_t>(letters) + 1, 0);
    BigInt count = 0;

    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int hi = letters;
        if (c + 1 < outer[r]) hi = std::min(hi, t[r][c + 1]);  // weak row increase
        int lo = 1;
        if (r > 0 && c >= inner[r - 1]) lo = t[r - 1][c] + 1;  // strict column increase
        for (int v = lo; v <= hi; ++v) {
            if (used[v] == content[v - 1]) continue;
            if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice word
            ++used[v];
            t[r][c] = v;
            fill(k + 1);
            --used[v];
        }
        t[r][c] = 0;
    };
    fill(0);
    return count;
}

SchubertExpr lr_product(const Partition& a, const Partition& b, GrassBox box) {
    require_in_box(a, box);
    require_in_box(b, box);
    SchubertExpr out(box);
    for (const Partition& nu : rect_partitions(box.m, box.w, a.weight() + b.weight())) {
        if (!nu.contains(a) || !nu.contains(b)) continue;
        BigInt c = lr_coefficient(nu, a, b);
        if (c != 0) out.add(nu, QPoly(c));
    }
    return out;
}

SchubertExpr multiply(const SchubertExpr& x, const SchubertExpr& y) {
    if (!(x.box() == y.box())) throw std::invalid_argument("Schubert expressions live in different boxes");
    SchubertExpr out(x.box());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) out += lr_product(a, b, x.box()).scaled(ca * cb);
    return out;
}

SchubertExpr multiply_by_sigma1(const SchubertExpr& x) {
    SchubertExpr out(x.box());
    for (const auto& [a, c] : x.terms()) out += pieri(a, x.box()).scaled(c);
    return out;
}

int pairing(const Partition& a, const Partition& b, GrassBox box) {
    require_in_box(a, box);
    require_in_box(b, box);
    if (a.weight() + b.weight() != box.dimension())
        throw DegreeMismatch("degree mismatch: |a| + |b| must equal " + std::to_string(box.dimension()));
    const QPoly c = lr_product(a, b, box).coefficient(box.full());
    return static_cast<int>(c.coeff(0).get_si());
}

SchubertExpr dl_class(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const GrassBox box{d + 1, d};
    SchubertExpr out(box);
    for (const Partition& c : box_partitions(d)) {
        const Partition partner = conjugate(complement(c, d));
        out += lr_product(c, partner, box).scaled(QPoly::q_power(static_cast<std::size_t>(c.weight())));
    }
    return out;
}

QPoly degree_via_schubert(int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    QPoly out;
    for (const Partition& c : box_partitions(d)) {
        if (const auto shape = dl_skew_shape(c, d))
            out += QPoly::monomial(count_skew_syt(*shape), static_cast<std::size_t>(c.weight()));
    }
    return out;
}

QPoly degree_via_pieri(int d) {
    SchubertExpr x = dl_class(d);
    for (int i = 0; i < d; ++i) x = multiply_by_sigma1(x);
    return x.coefficient(x.box().full());
}

}  // namespace dldeg
