#pragma once

#include <compare>
#include <cstdint>

namespace growball {

struct WeightOpCounts {
    std::uint64_t adds = 0;
    std::uint64_t compares = 0;
};

namespace detail {
inline thread_local WeightOpCounts* active_weight_counter = nullptr;
inline void count_add() {
    if (detail::active_weight_counter) ++detail::active_weight_counter->adds;
}
inline void count_compare() {
    if (detail::active_weight_counter) ++detail::active_weight_counter->compares;
}
} // namespace detail

// Edge length in the comparison-addition model: the only operations the
// algorithms may apply are addition and comparison. Construction and raw()
// are reserved for I/O and reporting code.
class Weight {
  public:
    constexpr Weight() = default;

    static constexpr Weight of(std::uint64_t value) { return Weight(value); }
    static constexpr Weight zero() { return Weight(0); }
    constexpr std::uint64_t raw() const { return value_; }

    friend Weight operator+(Weight a, Weight b) {
        detail::count_add();
        return Weight(a.value_ + b.value_);
    }
    // Three-way form so heap comparators pay for one comparison, not two.
    friend std::strong_ordering compare(Weight a, Weight b) {
        detail::count_compare();
        return a.value_ <=> b.value_;
    }
    friend bool operator<(Weight a, Weight b) {
        detail::count_compare();
        return a.value_ < b.value_;
    }
    friend bool operator==(Weight a, Weight b) {
        detail::count_compare();
        return a.value_ == b.value_;
    }
    friend bool operator!=(Weight a, Weight b) { return !(a == b); }
    friend bool operator>(Weight a, Weight b) { return b < a; }
    friend bool operator<=(Weight a, Weight b) { return !(b < a); }
    friend bool operator>=(Weight a, Weight b) { return !(a < b); }

  private:
    explicit constexpr Weight(std::uint64_t value) : value_(value) {}
    std::uint64_t value_ = 0;
};

// Counts every weight addition and comparison performed on this thread
// while alive. Scopes may nest; the innermost one collects.
class WeightAudit {
  public:
    WeightAudit() : previous_(detail::active_weight_counter) {
        detail::active_weight_counter = &counts_;
    }
    ~WeightAudit() { detail::active_weight_counter = previous_; }
    WeightAudit(const WeightAudit&) = delete;
    WeightAudit& operator=(const WeightAudit&) = delete;

    const WeightOpCounts& counts() const { return counts_; }

  private:
    WeightOpCounts counts_;
    WeightOpCounts* previous_;
};

} // namespace growball
