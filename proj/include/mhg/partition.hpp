#ifndef MHG_PARTITION_HPP
#define MHG_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mhg {

/// An integer partition kappa = (kappa_1 >= kappa_2 >= ... >= 1) together
/// with its conjugate. Trailing zeros are never stored. Rows and columns are
/// 1-based in every accessor that takes a box coordinate.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::span<const int> conjugate_parts() const { return conj_; }

    /// Number of nonzero parts.
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    /// kappa_i, or 0 when i exceeds the length.
    int part(int i) const;
    /// kappa'_j, or 0 when j exceeds kappa_1.
    int conjugate_part(int j) const;

    bool contains_box(int i, int j) const;

    Partition conjugate() const;

    /// kappa -> kappa with part i raised by one. Requires i == 1 or
    /// kappa_{i-1} > kappa_i, and i <= length + 1.
    void increment(int i);
    /// kappa -> kappa_(i). Requires kappa_i > kappa_{i+1}.
    void decrement(int i);

    std::string to_string() const;

    friend bool operator==(const Partition& lhs, const Partition& rhs) {
        return lhs.parts_ == rhs.parts_;
    }

private:
    std::vector<int> parts_;
    std::vector<int> conj_;
    int weight_ = 0;
};

Partition conjugate(const Partition& kappa);

/// kappa/mu is a horizontal strip: kappa_1 >= mu_1 >= kappa_2 >= mu_2 >= ...
bool is_horizontal_strip(const Partition& kappa, const Partition& mu);

/// P_{mn}: number of nonempty partitions of weight <= m with at most n
/// parts. Throws UsageError for m < 0 or n < 1 and ResourceError when the
/// count does not fit in 64 bits.
std::uint64_t count_partitions_bounded(int m, int n);

/// What an enumeration visit sees. `changed_row` is the 1-based row i such
/// that the current partition is obtained from its chain predecessor
/// kappa_(i) (visited earlier) by raising part i.
struct PartitionView {
    std::span<const int> parts;
    std::span<const int> conjugate;
    int weight;
    int changed_row;
};

/// Iterative depth-first walk over the m-tree: kappa_1 runs over 1..m and
/// each further part over 1..min(previous part, m - |prefix|), children
/// before the next sibling. Uses O(min(m, n)) memory and no recursion.
class PartitionWalker {
public:
    PartitionWalker(int m, int n);

    /// Advances to the next partition; false once the walk is exhausted.
    /// The empty partition is never produced.
    bool next();

    PartitionView view() const;
    std::span<const int> parts() const { return {parts_.data(), static_cast<std::size_t>(length_)}; }
    std::span<const int> conjugate() const {
        return {conj_.data(), static_cast<std::size_t>(length_ ? parts_[0] : 0)};
    }
    int length() const { return length_; }
    int weight() const { return weight_; }
    int changed_row() const { return changed_; }

private:
    int m_;
    int n_;
    int length_ = 0;
    int weight_ = 0;
    int changed_ = 0;
    bool started_ = false;
    std::vector<int> parts_;
    std::vector<int> conj_;
};

template <class Visit>
void enumerate_partitions(int m, int n, Visit&& visit) {
    PartitionWalker walker(m, n);
    while (walker.next()) visit(walker.view());
}

/// The linearized m-tree. Every partition with |kappa| <= m and at most n
/// parts gets a dense index in {0..count()}; 0 is the empty partition and
/// (i) maps to i. Children of a node occupy a consecutive block whose first
/// index is child(node). Immutable once built.
class PartitionTable {
public:
    using Index = std::uint32_t;

    static PartitionTable build(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t count() const { return count_; }

    /// N_kappa via N_(k1..ki) = D(N_(k1..k{i-1})) + k_i - 1.
    Index index_of(std::span<const int> parts) const;
    Index index_of(const Partition& kappa) const { return index_of(kappa.parts()); }

    /// D(N): index of (kappa, 1), or 0 when kappa has no children.
    Index child(Index idx) const { return child_[idx]; }
    std::span<const Index> child_array() const { return child_; }

    /// Nonempty indices in walk order, the order every series sweep uses.
    std::span<const Index> walk_order() const { return order_; }

    std::span<const int> parts(Index idx) const {
        return {pool_.data() + offset_[idx], static_cast<std::size_t>(length_[idx])};
    }
    Partition partition(Index idx) const { return Partition(std::vector<int>(parts(idx).begin(), parts(idx).end())); }
    int length(Index idx) const { return length_[idx]; }
    int weight(Index idx) const { return weight_[idx]; }
    /// Row raised to reach idx from its chain predecessor.
    int changed_row(Index idx) const { return changed_[idx]; }
    /// Index of the chain predecessor kappa_(i), i = changed_row(idx).
    Index predecessor(Index idx) const { return pred_[idx]; }

private:
    int m_ = 0;
    int n_ = 1;
    std::size_t count_ = 0;
    std::vector<Index> child_;
    std::vector<Index> order_;
    std::vector<std::size_t> offset_;
    std::vector<int> length_;
    std::vector<int> pool_;
    std::vector<int> weight_;
    std::vector<int> changed_;
    std::vector<Index> pred_;
};

}  // namespace mhg

#endif  // MHG_PARTITION_HPP
