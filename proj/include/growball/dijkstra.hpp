#pragma once

#include <optional>
#include <vector>

#include "growball/graph.hpp"

namespace growball {

namespace detail {

// Scratch state for one partial search. Discovered vertices get stable
// slots (best distance + settled flag) reached through an open-addressed
// index; the heap is a lazy 4-ary min-heap whose entries carry the slot id,
// so stale entries are filtered with one indexed load. Memory stays
// proportional to the explored region.
class SearchCore {
  public:
    struct Slot {
        VertexId vertex;
        bool done;
        Weight dist;
    };
    struct HeapEntry {
        Weight dist;
        VertexId vertex;
        std::uint32_t slot;
    };

    SearchCore() { rehash(512); }

    Slot* find(VertexId key) {
        std::size_t i = probe(key);
        while (index_[i].vertex != kEmpty) {
            if (index_[i].vertex == key) return &slots_[index_[i].slot];
            i = (i + 1) & mask_;
        }
        return nullptr;
    }

    // Pre: key is absent. Invalidates slot pointers from earlier calls.
    void insert(VertexId key, Weight dist) {
        if ((size_ + 1) * 10 > index_.size() * 7) rehash(index_.size() * 2);
        std::size_t i = probe(key);
        while (index_[i].vertex != kEmpty) i = (i + 1) & mask_;
        const auto slot = static_cast<std::uint32_t>(slots_.size());
        index_[i] = {key, slot};
        ++size_;
        slots_.push_back({key, false, dist});
        push({dist, key, slot});
    }

    void improve(Slot& slot, Weight dist) {
        slot.dist = dist;
        push({dist, slot.vertex, static_cast<std::uint32_t>(&slot - slots_.data())});
    }

    // Settles and returns the (dist, vertex)-minimal open vertex, or
    // nullptr when the search is exhausted.
    Slot* pop_min() {
        while (!heap_.empty()) {
            HeapEntry top = pop();
            Slot& slot = slots_[top.slot];
            if (slot.done || top.dist != slot.dist) continue; // stale
            slot.done = true;
            return &slot;
        }
        return nullptr;
    }

    bool exhausted() const { return heap_.empty(); }

  private:
    struct IndexEntry {
        VertexId vertex;
        std::uint32_t slot;
    };
    static constexpr VertexId kEmpty = 0xFFFFFFFFu;

    std::size_t probe(VertexId key) const {
        return (static_cast<std::size_t>(key) * 0x9E3779B97F4A7C15ull >> 32) & mask_;
    }

    void rehash(std::size_t capacity) {
        index_.assign(capacity, {kEmpty, 0});
        mask_ = capacity - 1;
        for (std::uint32_t s = 0; s < slots_.size(); ++s) {
            std::size_t i = probe(slots_[s].vertex);
            while (index_[i].vertex != kEmpty) i = (i + 1) & mask_;
            index_[i] = {slots_[s].vertex, s};
        }
    }

    static bool entry_less(const HeapEntry& a, const HeapEntry& b) {
        const auto order = compare(a.dist, b.dist);
        if (order != std::strong_ordering::equal) return order < 0;
        return a.vertex < b.vertex;
    }

    void push(HeapEntry entry) {
        std::size_t i = heap_.size();
        heap_.push_back(entry);
        while (i > 0) {
            const std::size_t parent = (i - 1) / 4;
            if (!entry_less(entry, heap_[parent])) break;
            heap_[i] = heap_[parent];
            i = parent;
        }
        heap_[i] = entry;
    }

    HeapEntry pop() {
        const HeapEntry top = heap_.front();
        const HeapEntry moving = heap_.back();
        heap_.pop_back();
        if (!heap_.empty()) {
            std::size_t i = 0;
            while (true) {
                const std::size_t first = 4 * i + 1;
                if (first >= heap_.size()) break;
                const std::size_t last = std::min(first + 4, heap_.size());
                std::size_t best = first;
                for (std::size_t c = first + 1; c < last; ++c)
                    if (entry_less(heap_[c], heap_[best])) best = c;
                if (!entry_less(heap_[best], moving)) break;
                heap_[i] = heap_[best];
                i = best;
            }
            heap_[i] = moving;
        }
        return top;
    }

    std::vector<Slot> slots_;
    std::vector<HeapEntry> heap_;
    std::vector<IndexEntry> index_;
    std::size_t size_ = 0;
    std::size_t mask_ = 0;
};

} // namespace detail

// Exact distances from one source. Unreachable vertices have no entry in
// dist and do not appear in settle_order. settle_order is strictly
// increasing under the (distance, vertex id) total order.
struct DistanceTable {
    VertexId source = 0;
    std::vector<std::optional<Weight>> dist;
    std::vector<VertexId> settle_order;
};

DistanceTable dijkstra(const Graph& g, VertexId source);

// Incremental Dijkstra: each step() settles the next-closest reachable
// vertex under (distance, vertex id) order. Single-owner mutable state;
// the graph must outlive it. Distinct instances are independent.
class PartialDijkstra {
  public:
    struct Step {
        VertexId vertex;
        Weight dist;
    };

    PartialDijkstra(const Graph& g, VertexId source);

    // Returns the next settled vertex, or nullopt once the reachable
    // component is exhausted.
    std::optional<Step> step();

    const std::vector<Step>& settled() const { return settled_; }
    bool exhausted() const { return core_.exhausted(); }
    VertexId source() const { return source_; }

  private:
    const Graph* graph_;
    VertexId source_;
    detail::SearchCore core_;
    std::vector<Step> settled_;
};

} // namespace growball
