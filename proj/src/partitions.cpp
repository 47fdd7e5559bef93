#include "dldeg/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace dldeg {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(int height, int width) const {
    return rows() <= height && (parts_.empty() || parts_.front() <= width);
}

std::vector<int> Partition::padded(int height) const {
    std::vector<int> out(static_cast<std::size_t>(std::max(height, 0)), 0);
    for (std::size_t i = 0; i < out.size() && i < parts_.size(); ++i) out[i] = parts_[i];
    return out;
}

bool Partition::contains(const Partition& other) const {
    if (other.rows() > rows()) return false;
    for (int i = 0; i < other.rows(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must look like [3,1]: " + text);
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition part '" + item + "' in " + text);
        parts.push_back(std::stoi(item));
    }
    return Partition(std::move(parts));
}

bool GradedLex::operator()(const Partition& a, const Partition& b) const {
    const int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() < b.parts();
}

SkewShape::SkewShape(Partition outer_, Partition inner_) : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!outer.contains(inner))
        throw std::invalid_argument("inner shape " + inner.to_string() + " not contained in " + outer.to_string());
}

Partition conjugate(const Partition& a) {
    if (a.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(a[0]), 0);
    for (int part : a.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

Partition dual(const Partition& a, int m, int w) {
    if (m < 0 || w < 0 || !a.fits(m, w))
        throw OutOfBox(a.to_string() + " does not fit in the " + std::to_string(m) + "x" + std::to_string(w) + " box");
    std::vector<int> pad = a.padded(m);
    std::vector<int> out(pad.size());
    for (std::size_t i = 0; i < pad.size(); ++i) out[i] = w - pad[pad.size() - 1 - i];
    return Partition(std::move(out));
}

Partition complement(const Partition& c, int d) { return dual(c, d, d); }

namespace {

void rect_rec(int m, int w, std::optional<int> weight, std::vector<int>& cur, int remaining_rows,
              std::vector<Partition>& out) {
    if (remaining_rows == 0) {
        Partition p(cur);
        if (!weight || p.weight() == *weight) out.push_back(std::move(p));
        return;
    }
    const int cap = cur.empty() ? w : cur.back();
    int sofar = std::accumulate(cur.begin(), cur.end(), 0);
    for (int v = cap; v >= 0; --v) {
        if (weight) {
            if (sofar + v > *weight) continue;
            if (sofar + v * remaining_rows < *weight) break;
        }
        cur.push_back(v);
        rect_rec(m, w, weight, cur, remaining_rows - 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> rect_partitions(int m, int w, std::optional<int> weight) {
    if (m < 0 || w < 0) throw std::invalid_argument("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    rect_rec(m, w, weight, cur, m, out);
    return out;
}

std::vector<Partition> box_partitions(int d, std::optional<int> weight) {
    if (d < 1) throw std::invalid_argument("box size must be positive");
    return rect_partitions(d, d, weight);
}

BigInt count_skew_syt(const SkewShape& shape) {
    // Cells in row-major order; grid holds the entry or 0 for unfilled / inner.
    const int rows = shape.outer.rows();
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = shape.inner[r]; c < shape.outer[r]; ++c) cells.push_back({r, c});
    const int n = static_cast<int>(cells.size());
    if (n == 0) return 1;

    const int width = shape.outer[0];
    std::vector<std::vector<int>> grid(rows, std::vector<int>(width, 0));
    std::vector<bool> used(n + 1, false);
    BigInt count = 0;

    std::function<void(int)> fill = [&](int k) {
        if (k == n) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int lo = 0;
        if (c > shape.inner[r]) lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c >= shape.inner[r - 1]) lo = std::max(lo, grid[r - 1][c]);
        for (int v = lo + 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = true;
            grid[r][c] = v;
            fill(k + 1);
            used[v] = false;
        }
        grid[r][c] = 0;
    };
    fill(0);
    return count;
}

namespace {

BigInt factorial(int k) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

// Bareiss fraction-free elimination; exact for integer matrices.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

BigInt count_skew_syt_det(const SkewShape& shape) {
    const int l = shape.outer.rows();
    const int n = shape.cells();
    if (l == 0) return 1;
    // Entry (i,j) is 1/k! with k = outer_i - inner_j - i + j, zero for k < 0.
    int kmax = 0;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) kmax = std::max(kmax, shape.outer[i] - shape.inner[j] - i + j);
    const BigInt scale = factorial(kmax);
    std::vector<std::vector<BigInt>> m(l, std::vector<BigInt>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            const int k = shape.outer[i] - shape.inner[j] - i + j;
            m[i][j] = k < 0 ? BigInt(0) : BigInt(scale / factorial(k));
        }
    BigInt num = factorial(n) * bareiss_det(std::move(m));
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(l));
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::logic_error("skew determinant is not an integer for " + shape.to_string());
    return num / den;
}

BigInt ordered_partition_count(int d, int l) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (l < 0) return 0;
    // ways[s] after processing i parts.
    std::vector<BigInt> ways(static_cast<std::size_t>(l) + 1, 0);
    ways[0] = 1;
    for (int i = 1; i <= d; ++i) {
        std::vector<BigInt> next(ways.size(), 0);
        for (int s = 0; s <= l; ++s) {
            if (ways[s] == 0) continue;
            for (int li = 0; li <= 2 * i - 1 && s + li <= l; ++li) next[s + li] += ways[s];
        }
        ways = std::move(next);
    }
    return ways[l];
}

Partition dl_outer_shape(const Partition& c, int d) { return dual(conjugate(complement(c, d)), d + 1, d); }

std::optional<SkewShape> dl_skew_shape(const Partition& c, int d) {
    Partition outer = dl_outer_shape(c, d);
    if (!outer.contains(c)) return std::nullopt;
    return SkewShape(std::move(outer), c);
}

}  // namespace dldeg
