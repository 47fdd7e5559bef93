#pragma once

#include "dldeg/qpoly.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dldeg {

class OutOfBox : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weakly decreasing tuple of nonnegative integers with trailing zeros
/// stripped, so (3,1) and (3,1,0) compare equal.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of nonzero parts.
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Part i (0-based), zero past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    bool fits(int height, int width) const;
    /// The first `height` parts, zero padded.
    std::vector<int> padded(int height) const;
    /// Cell-wise containment: other[i] <= (*this)[i] for all i.
    bool contains(const Partition& other) const;

    /// "[3,1]"; "[]" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Graded lexicographic order: by weight, then lexicographically on parts.
struct GradedLex {
    bool operator()(const Partition& a, const Partition& b) const;
};

struct SkewShape {
    SkewShape(Partition outer, Partition inner);

    Partition outer;
    Partition inner;

    int cells() const { return outer.weight() - inner.weight(); }
    std::string to_string() const { return outer.to_string() + "/" + inner.to_string(); }
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

Partition conjugate(const Partition& a);

/// (d - c_d, ..., d - c_1) in the d x d box.
Partition complement(const Partition& c, int d);

/// (w - a_m, ..., w - a_1) in the m x w box.
Partition dual(const Partition& a, int m, int w);

/// All partitions in the d x d box, optionally of a fixed weight, in
/// lexicographically descending order of the zero-padded part tuples.
std::vector<Partition> box_partitions(int d, std::optional<int> weight = std::nullopt);

/// All partitions in the m x w box, same ordering as box_partitions.
std::vector<Partition> rect_partitions(int m, int w, std::optional<int> weight = std::nullopt);

/// Standard Young tableaux of a skew shape, by backtracking.
BigInt count_skew_syt(const SkewShape& shape);

/// Same count from the Aitken determinant N! det[1/(outer_i - inner_j - i + j)!],
/// evaluated fraction-free.
BigInt count_skew_syt_det(const SkewShape& shape);

/// Tuples (l_1..l_d) with sum l and 0 <= l_i <= 2i - 1.
BigInt ordered_partition_count(int d, int l);

/// (c-hat')^*: complement of c in the d x d box, conjugated, then dualized
/// in the (d+1) x d box. Always d cells heavier than c.
Partition dl_outer_shape(const Partition& c, int d);

/// The skew shape dl_outer_shape(c, d)/c, or nullopt when c is not contained
/// in it (no chain of single-box additions exists, so it contributes zero).
std::optional<SkewShape> dl_skew_shape(const Partition& c, int d);

}  // namespace dldeg
