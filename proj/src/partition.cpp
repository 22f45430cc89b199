#include "mhg/partition.hpp"

#include <algorithm>
#include <limits>
#include <new>

#include "mhg/errors.hpp"

namespace mhg {

namespace {

std::vector<int> conjugate_of(std::span<const int> parts) {
    if (parts.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return conj;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw UsageError("partition parts must be nonincreasing");
        weight_ += parts_[i];
    }
    conj_ = conjugate_of(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::conjugate_part(int j) const {
    return (j >= 1 && j <= static_cast<int>(conj_.size())) ? conj_[static_cast<std::size_t>(j - 1)] : 0;
}

bool Partition::contains_box(int i, int j) const { return i >= 1 && j >= 1 && j <= part(i); }

Partition Partition::conjugate() const { return Partition(conj_); }

void Partition::increment(int i) {
    if (i < 1 || i > length() + 1 || (i > 1 && part(i - 1) <= part(i)))
        throw UsageError("cannot raise part " + std::to_string(i) + " of " + to_string());
    if (i == length() + 1) parts_.push_back(0);
    int& v = parts_[static_cast<std::size_t>(i - 1)];
    ++v;
    if (static_cast<int>(conj_.size()) < v) conj_.push_back(0);
    ++conj_[static_cast<std::size_t>(v - 1)];
    ++weight_;
}

void Partition::decrement(int i) {
    if (i < 1 || i > length() || part(i) <= part(i + 1))
        throw UsageError("cannot lower part " + std::to_string(i) + " of " + to_string());
    int& v = parts_[static_cast<std::size_t>(i - 1)];
    if (--conj_[static_cast<std::size_t>(v - 1)] == 0) conj_.pop_back();
    --v;
    if (v == 0) parts_.pop_back();
    --weight_;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ')';
}

Partition conjugate(const Partition& kappa) { return kappa.conjugate(); }

bool is_horizontal_strip(const Partition& kappa, const Partition& mu) {
    const int len = std::max(kappa.length(), mu.length());
    for (int i = 1; i <= len; ++i) {
        if (mu.part(i) > kappa.part(i)) return false;
        if (mu.part(i) < kappa.part(i + 1)) return false;
    }
    return true;
}

std::uint64_t count_partitions_bounded(int m, int n) {
    if (m < 0 || n < 1) throw UsageError("count_partitions_bounded requires m >= 0 and n >= 1");
    const int kmax = std::min(m, n);
    // p[k][i]: partitions of i into exactly k parts.
    std::vector<std::vector<std::uint64_t>> p(static_cast<std::size_t>(kmax) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(m) + 1, 0));
    p[0][0] = 1;
    const auto limit = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    for (int i = 1; i <= m; ++i) {
        for (int k = 1; k <= std::min(kmax, i); ++k) {
            std::uint64_t v = p[k - 1][i - 1];
            const std::uint64_t w = p[k][i - k];
            if (v > limit - w) throw ResourceError("partition count overflows 64 bits");
            v += w;
            p[k][i] = v;
            if (total > limit - v) throw ResourceError("partition count overflows 64 bits");
            total += v;
        }
    }
    return total;
}

PartitionWalker::PartitionWalker(int m, int n) : m_(m), n_(n) {
    if (m < 0 || n < 1) throw UsageError("partition walk requires m >= 0 and n >= 1");
    parts_.assign(static_cast<std::size_t>(std::min(m, n)) + 1, 0);
    conj_.assign(static_cast<std::size_t>(m) + 1, 0);
}

bool PartitionWalker::next() {
    const bool can_descend = started_ ? (length_ < n_ && weight_ < m_) : m_ > 0;
    started_ = true;
    if (can_descend) {
        parts_[static_cast<std::size_t>(length_++)] = 1;
        ++conj_[0];
        ++weight_;
        changed_ = length_;
        return true;
    }
    while (length_ > 0) {
        int& v = parts_[static_cast<std::size_t>(length_ - 1)];
        const int cap = length_ == 1 ? m_ : parts_[static_cast<std::size_t>(length_ - 2)];
        if (v < cap && weight_ < m_) {
            ++conj_[static_cast<std::size_t>(v)];
            ++v;
            ++weight_;
            changed_ = length_;
            return true;
        }
        for (int j = 0; j < v; ++j) --conj_[static_cast<std::size_t>(j)];
        weight_ -= v;
        v = 0;
        --length_;
    }
    return false;
}

PartitionView PartitionWalker::view() const { return {parts(), conjugate(), weight_, changed_}; }

PartitionTable PartitionTable::build(int m, int n) {
    const std::uint64_t total = count_partitions_bounded(m, n);
    if (total >= std::numeric_limits<Index>::max())
        throw ResourceError("partition table too large: P_mn = " + std::to_string(total));

    PartitionTable t;
    t.m_ = m;
    t.n_ = n;
    t.count_ = static_cast<std::size_t>(total);
    const std::size_t slots = t.count_ + 1;
    try {
        t.child_.assign(slots, 0);
        t.order_.reserve(t.count_);
        t.offset_.assign(slots, 0);
        t.length_.assign(slots, 0);
        t.weight_.assign(slots, 0);
        t.changed_.assign(slots, 0);
        t.pred_.assign(slots, 0);
        t.pool_.reserve(t.count_ * 2);
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate partition table: P_mn = " + std::to_string(total));
    }

    // prefix[i]: index of (kappa_1..kappa_i) for the current walk position.
    std::vector<Index> prefix(static_cast<std::size_t>(std::min(m, n)) + 1, 0);
    Index next_free = static_cast<Index>(m) + 1;
    PartitionWalker walker(m, n);
    while (walker.next()) {
        const auto parts = walker.parts();
        const int i = walker.changed_row();
        Index idx;
        Index pred;
        if (i == 1) {
            idx = static_cast<Index>(parts[0]);
            pred = idx - 1;
        } else if (parts[static_cast<std::size_t>(i - 1)] == 1) {
            const Index parent = prefix[static_cast<std::size_t>(i - 1)];
            pred = parent;
            const int room = m - (walker.weight() - 1);
            const int siblings = std::min(parts[static_cast<std::size_t>(i - 2)], room);
            t.child_[parent] = next_free;
            idx = next_free;
            next_free += static_cast<Index>(siblings);
        } else {
            pred = prefix[static_cast<std::size_t>(i)];
            idx = pred + 1;
        }
        prefix[static_cast<std::size_t>(i)] = idx;

        t.order_.push_back(idx);
        t.offset_[idx] = t.pool_.size();
        t.length_[idx] = walker.length();
        t.weight_[idx] = walker.weight();
        t.changed_[idx] = i;
        t.pred_[idx] = pred;
        t.pool_.insert(t.pool_.end(), parts.begin(), parts.end());
    }
    return t;
}

PartitionTable::Index PartitionTable::index_of(std::span<const int> parts) const {
    if (parts.empty()) return 0;
    if (static_cast<int>(parts.size()) > n_)
        throw UsageError("partition has more than n = " + std::to_string(n_) + " parts");
    int w = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1]))
            throw UsageError("not a partition");
        w += parts[i];
    }
    if (w > m_) throw UsageError("partition weight exceeds m = " + std::to_string(m_));
    Index idx = static_cast<Index>(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        idx = child_[idx] + static_cast<Index>(parts[i]) - 1;
    return idx;
}

}  // namespace mhg
