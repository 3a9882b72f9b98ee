#pragma once

// Bucket queue over non-negative residual degrees. Supports the two operations
// Havel-Hakimi style constructions need: remove an arbitrary node, and take the
// h active nodes of highest positive residual and decrement each by one.
// Both run in time proportional to the number of nodes touched; non-empty
// buckets are threaded on a doubly linked list so empty ones are never scanned.

#include <gdp/graph.hpp>

#include <algorithm>
#include <cassert>
#include <span>
#include <vector>

namespace gdp::detail {

class ResidualBuckets {
public:
    explicit ResidualBuckets(std::span<const degree_t> residual)
        : residual_(residual.begin(), residual.end()), position_(residual.size()),
          active_(residual.size(), 1) {
        degree_t max_value = 0;
        for (degree_t r : residual_) {
            assert(r >= 0);
            max_value = std::max(max_value, r);
        }
        buckets_.resize(static_cast<std::size_t>(max_value) + 1);
        lower_.assign(buckets_.size(), kNone);
        higher_.assign(buckets_.size(), kNone);
        // Descending insertion so that the lowest id sits at the back of each bucket.
        for (std::size_t v = residual_.size(); v-- > 0;) {
            auto& bucket = buckets_[static_cast<std::size_t>(residual_[v])];
            position_[v] = bucket.size();
            bucket.push_back(static_cast<node_t>(v));
            if (residual_[v] > 0) ++positive_;
        }
        std::size_t previous = kNone;
        for (std::size_t b = 1; b < buckets_.size(); ++b) {
            if (buckets_[b].empty()) continue;
            lower_[b] = previous;
            if (previous != kNone) higher_[previous] = b;
            previous = b;
        }
        top_ = previous;
    }

    degree_t residual(node_t v) const { return residual_[v]; }
    bool active(node_t v) const { return active_[v] != 0; }

    /// Active nodes with residual > 0.
    std::size_t positive_count() const noexcept { return positive_; }

    /// Active node of largest residual; requires positive_count() > 0.
    node_t top() const {
        assert(top_ != kNone);
        return buckets_[top_].back();
    }

    void remove(node_t v) {
        assert(active(v));
        erase(v);
        active_[v] = 0;
    }

    /// Picks min(h, positive_count()) active nodes of highest residual,
    /// decrements each and appends them to `out`.
    void take_and_decrement(std::size_t h, std::vector<node_t>& out) {
        const std::size_t first = out.size();
        for (std::size_t b = top_; h > 0 && b != kNone; b = lower_[b]) {
            const auto& bucket = buckets_[b];
            const std::size_t t = std::min(h, bucket.size());
            for (std::size_t i = 0; i < t; ++i) out.push_back(bucket[bucket.size() - 1 - i]);
            h -= t;
        }
        for (std::size_t i = first; i < out.size(); ++i) {
            const node_t v = out[i];
            const auto old = static_cast<std::size_t>(residual_[v]);
            const std::size_t slot = position_[v];
            --residual_[v];
            push(v); // into old - 1, linked below `old`
            erase_at(v, old, slot);
        }
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void push(node_t v) {
        const auto b = static_cast<std::size_t>(residual_[v]);
        auto& bucket = buckets_[b];
        if (b > 0 && bucket.empty()) link(b);
        position_[v] = bucket.size();
        bucket.push_back(v);
        if (b > 0) ++positive_;
    }

    void erase(node_t v) { erase_at(v, static_cast<std::size_t>(residual_[v]), position_[v]); }

    // Removes v from slot p of bucket b; position_[v] is left alone.
    void erase_at(node_t v, std::size_t b, std::size_t p) {
        auto& bucket = buckets_[b];
        const node_t last = bucket.back();
        bucket[p] = last;
        if (last != v) position_[last] = p;
        bucket.pop_back();
        if (b > 0) {
            --positive_;
            if (bucket.empty()) unlink(b);
        }
    }

    // A bucket only becomes non-empty by receiving a node from the bucket
    // directly above it, so it is linked immediately below that one.
    void link(std::size_t b) {
        const std::size_t above = b + 1;
        assert(above < buckets_.size() && !buckets_[above].empty());
        const std::size_t below = lower_[above];
        higher_[b] = above;
        lower_[b] = below;
        lower_[above] = b;
        if (below != kNone) higher_[below] = b;
    }

    void unlink(std::size_t b) {
        const std::size_t above = higher_[b];
        const std::size_t below = lower_[b];
        if (above == kNone) top_ = below; else lower_[above] = below;
        if (below != kNone) higher_[below] = above;
        higher_[b] = lower_[b] = kNone;
    }

    std::vector<degree_t> residual_;
    std::vector<std::size_t> position_;
    std::vector<char> active_;
    std::vector<std::vector<node_t>> buckets_;
    std::vector<std::size_t> lower_;
    std::vector<std::size_t> higher_;
    std::size_t top_ = kNone;
    std::size_t positive_ = 0;
};

} // namespace gdp::detail
