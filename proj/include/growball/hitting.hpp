#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace growball {

using ElementId = std::uint32_t;
using BallId = std::uint32_t;

// The adversary side of the center-selection game: a family of balls over a
// universe of elements, each ball growable one element at a time. A grow
// call must add an element the ball does not already contain; it may be
// refused (nullopt) only when the ball cannot grow any further, i.e. it
// already spans every element it can ever reach.
class GrowableBallSystem {
  public:
    virtual ~GrowableBallSystem() = default;
    virtual std::size_t universe_size() const = 0;
    virtual std::size_t ball_count() const = 0;
    virtual std::optional<ElementId> grow(BallId ball) = 0;
    // Informs the adversary of each selected center, in selection order.
    virtual void note_center(ElementId center) { (void)center; }
};

// Per-element counts of unhit balls plus doubly linked buckets of elements
// sharing a count, so each update is O(1) and find-max amortizes to O(1)
// walks. Ties at the maximal count resolve to the smallest element id.
class BucketMaxTracker {
  public:
    struct OpCounts {
        std::uint64_t increments = 0;
        std::uint64_t decrements = 0;
        std::uint64_t find_max_calls = 0;
    };

    BucketMaxTracker(std::size_t element_count, std::size_t max_count);

    void increment(ElementId e);
    void decrement(ElementId e);
    // Smallest element id among those with the maximal count, or nullopt if
    // every count is zero.
    std::optional<ElementId> find_max();

    std::uint32_t count_of(ElementId e) const { return count_[e]; }
    const OpCounts& ops() const { return ops_; }

  private:
    static constexpr std::uint32_t kNil = 0xFFFFFFFFu;

    void unlink(ElementId e);
    void link(ElementId e, std::uint32_t bucket);

    std::vector<std::uint32_t> count_;
    std::vector<std::uint32_t> next_;
    std::vector<std::uint32_t> prev_;
    std::vector<std::uint32_t> head_; // head_[k] = first element with count k
    std::uint32_t max_nonempty_ = 0;
    OpCounts ops_;
};

struct RoundRecord {
    std::uint32_t index;          // 1-based round number
    std::uint64_t size_target;    // min{b, N} in effect during this round's selection
    std::size_t unhit_at_start;   // the m' snapshot
    std::size_t centers_added;
};

struct CenterSelection {
    std::vector<ElementId> centers; // in selection order
    std::vector<RoundRecord> rounds;
    std::vector<std::uint32_t> ball_sizes; // final size per ball
    std::vector<std::vector<ElementId>> members; // filled under record_members
    std::size_t universe_size = 0;
    std::size_t ball_count = 0;
    std::size_t r = 0;
    int p = 1;
    BucketMaxTracker::OpCounts ops;

    std::uint64_t sum_sizes() const;
    unsigned __int128 sum_size_power(int exponent) const;
    double sum_xlogx() const; // log base 2, f(1) = 0
};

struct CostFunction {
    enum class Kind { Power, XLogX };
    Kind kind = Kind::Power;
    int p = 1;

    static CostFunction power(int p);
    static CostFunction xlogx() { return {Kind::XLogX, 0}; }
};

// Total cost Sum f(|B_i|) over final ball sizes, as a real number.
double evaluate_cost(const CenterSelection& selection, const CostFunction& f);

// Mutable state of one selection run: ball memberships, hit flags and the
// bucket tracker, kept consistent under growth and center picks. Exposed so
// the greedy phase can be driven directly (tests, fixed-ball baselines).
class HittingState {
  public:
    HittingState(std::size_t universe, std::size_t balls);

    // Records one grown element. Pre: the ball is unhit. Marks the ball hit
    // immediately if the element is already a center.
    void add_member(BallId ball, ElementId element);
    void reserve_ball(BallId ball, std::size_t capacity) { members_[ball].reserve(capacity); }
    void make_center(ElementId element);

    // Repeatedly picks the element hitting the most unhit balls (ties to the
    // smallest id) until at most target_unhit balls remain unhit. With
    // exhaustive_check, every pick is re-verified against a full scan.
    std::vector<ElementId> greedy_phase(std::size_t target_unhit, bool exhaustive_check = false);

    std::size_t unhit_count() const { return unhit_; }
    bool is_hit(BallId ball) const { return hit_[ball] != 0; }
    bool is_center(ElementId e) const { return is_center_[e] != 0; }
    std::size_t ball_size(BallId ball) const { return members_[ball].size(); }
    const std::vector<ElementId>& members(BallId ball) const { return members_[ball]; }
    std::vector<std::vector<ElementId>> release_members() { return std::move(members_); }
    const BucketMaxTracker& tracker() const { return tracker_; }

  private:
    void mark_hit(BallId ball);

    std::size_t universe_;
    BucketMaxTracker tracker_;
    std::vector<std::vector<ElementId>> members_;
    std::vector<std::vector<BallId>> balls_containing_;
    std::vector<std::uint8_t> hit_;
    std::vector<std::uint8_t> is_center_;
    std::size_t unhit_;
};

struct SelectOptions {
    // Re-verify every greedy pick against an exhaustive argmax scan.
    bool exhaustive_argmax_check = false;
    // Keep final ball memberships in the result (costs Sum|B_i| memory).
    bool record_members = false;
};

// Deterministic center selection over adversarially growable balls:
// grows every ball to b = ceil(2^{p+2} N / r), then alternates greedy
// selection (until the unhit count falls below m'/2^{p+1}) with doubling
// the size target for the surviving balls. For a system that never refuses
// a legal grow, at most r centers are selected and
// Sum |B_i|^p <= 2^{(p+1)^2} * M * (N/r)^p.
CenterSelection select_centers(GrowableBallSystem& system, std::size_t r, int p,
                               const SelectOptions& options = {});

struct TrackerAudit {
    BucketMaxTracker::OpCounts counts;
    std::uint64_t sum_sizes = 0;
    bool growth_bound_ok = false;   // increments + decrements <= 2 * Sum|B_i|
    bool find_max_bound_ok = false; // find-max calls <= centers + rounds
    bool ok() const { return growth_bound_ok && find_max_bound_ok; }
};

TrackerAudit tracker_ops_audit(const CenterSelection& selection);

struct RoundAccounting {
    bool unhit_bounds_ok = false;   // unhit at round i start <= M / 2^{(i-1)(p+1)}
    bool centers_bounds_ok = false; // centers in round i <= r / 2^i (uncapped rounds)
    bool ok() const { return unhit_bounds_ok && centers_bounds_ok; }
};

// Checks the per-round guarantees from the selection proof. Rounds whose
// size target already reached N are exempt from the r/2^i rule (such a
// round ends the run with a single center) and must satisfy centers <= 1.
RoundAccounting round_accounting(const CenterSelection& selection);

// Exact integer check of Sum |B_i|^p <= 2^{(p+1)^2} * M * N^p / r^p.
bool cost_bound_holds(const CenterSelection& selection);

// Real-valued bound on Sum |B_i| log2 |B_i| after a p = 2 run, via Jensen:
// measured <= 2^9 * M * (N/r) * log2(N/r). Requires N/r >= 2.
double xlogx_bound(std::size_t ball_count, std::size_t universe, std::size_t r);

} // namespace growball
