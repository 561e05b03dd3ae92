#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace gas {

/// Dense node index in 0..p-1, stable within one graph instance.
using NodeId = int;

using Seed = std::uint64_t;

/// Sorted, deduplicated set of node ids. This canonical form makes
/// equality, ordering and hashing of conditioning sets well defined.
class NodeSet {
  public:
    NodeSet() = default;

    NodeSet(std::initializer_list<NodeId> ids) : items_(ids) { normalize(); }

    explicit NodeSet(std::vector<NodeId> ids) : items_(std::move(ids)) { normalize(); }

    /// The full node set {0, ..., p-1}.
    static NodeSet range(int p) {
        NodeSet s;
        s.items_.resize(p > 0 ? p : 0);
        std::iota(s.items_.begin(), s.items_.end(), 0);
        return s;
    }

    bool contains(NodeId v) const {
        return std::binary_search(items_.begin(), items_.end(), v);
    }

    bool contains_all(const NodeSet& other) const {
        return std::includes(items_.begin(), items_.end(), other.items_.begin(),
                             other.items_.end());
    }

    void insert(NodeId v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it == items_.end() || *it != v) items_.insert(it, v);
    }

    void erase(NodeId v) {
        auto it = std::lower_bound(items_.begin(), items_.end(), v);
        if (it != items_.end() && *it == v) items_.erase(it);
    }

    int size() const { return static_cast<int>(items_.size()); }
    bool empty() const { return items_.empty(); }
    void clear() { items_.clear(); }

    NodeId operator[](int i) const { return items_[static_cast<std::size_t>(i)]; }

    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    const std::vector<NodeId>& items() const { return items_; }

    friend bool operator==(const NodeSet&, const NodeSet&) = default;
    friend std::strong_ordering operator<=>(const NodeSet&, const NodeSet&) = default;

  private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }

    std::vector<NodeId> items_;
};

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    out.reserve(static_cast<std::size_t>(a.size() + b.size()));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

inline NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

inline NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return NodeSet(std::move(out));
}

/// Visits every k-subset of `candidates` in lexicographic order of the
/// sorted member lists. Stops as soon as `fn` returns true; the return
/// value tells whether such an early stop happened.
template <typename Fn>
bool for_each_k_subset(const NodeSet& candidates, int k, Fn&& fn) {
    const int n = candidates.size();
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<NodeId> buf(static_cast<std::size_t>(k));
    while (true) {
        for (int i = 0; i < k; ++i) buf[static_cast<std::size_t>(i)] = candidates[idx[static_cast<std::size_t>(i)]];
        if (fn(NodeSet(buf))) return true;
        // advance the combination
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace gas
