#include "growball/hitting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "growball/errors.hpp"

namespace growball {

BucketMaxTracker::BucketMaxTracker(std::size_t element_count, std::size_t max_count)
    : count_(element_count, 0),
      next_(element_count, kNil),
      prev_(element_count, kNil),
      head_(max_count + 1, kNil) {
    for (ElementId e = 0; e < element_count; ++e) link(e, 0);
}

void BucketMaxTracker::unlink(ElementId e) {
    const std::uint32_t bucket = count_[e];
    if (prev_[e] == kNil)
        head_[bucket] = next_[e];
    else
        next_[prev_[e]] = next_[e];
    if (next_[e] != kNil) prev_[next_[e]] = prev_[e];
    next_[e] = prev_[e] = kNil;
}

void BucketMaxTracker::link(ElementId e, std::uint32_t bucket) {
    count_[e] = bucket;
    prev_[e] = kNil;
    next_[e] = head_[bucket];
    if (head_[bucket] != kNil) prev_[head_[bucket]] = e;
    head_[bucket] = e;
}

void BucketMaxTracker::increment(ElementId e) {
    ++ops_.increments;
    unlink(e);
    link(e, count_[e] + 1);
    if (count_[e] > max_nonempty_) max_nonempty_ = count_[e];
}

void BucketMaxTracker::decrement(ElementId e) {
    ++ops_.decrements;
    if (count_[e] == 0) throw ContractError("bucket tracker decrement below zero");
    unlink(e);
    link(e, count_[e] - 1);
}

std::optional<ElementId> BucketMaxTracker::find_max() {
    ++ops_.find_max_calls;
    while (max_nonempty_ > 0 && head_[max_nonempty_] == kNil) --max_nonempty_;
    if (max_nonempty_ == 0) return std::nullopt;
    ElementId best = head_[max_nonempty_];
    for (std::uint32_t cur = next_[best]; cur != kNil; cur = next_[cur])
        if (cur < best) best = cur;
    return best;
}

std::uint64_t CenterSelection::sum_sizes() const {
    std::uint64_t total = 0;
    for (std::uint32_t s : ball_sizes) total += s;
    return total;
}

unsigned __int128 CenterSelection::sum_size_power(int exponent) const {
    unsigned __int128 total = 0;
    for (std::uint32_t s : ball_sizes) {
        unsigned __int128 term = 1;
        for (int i = 0; i < exponent; ++i) term *= s;
        total += term;
    }
    return total;
}

double CenterSelection::sum_xlogx() const {
    double total = 0;
    for (std::uint32_t s : ball_sizes)
        if (s > 1) total += static_cast<double>(s) * std::log2(static_cast<double>(s));
    return total;
}

CostFunction CostFunction::power(int p) {
    if (p < 1) throw ParameterError("cost exponent must be >= 1");
    return {Kind::Power, p};
}

double evaluate_cost(const CenterSelection& selection, const CostFunction& f) {
    if (f.kind == CostFunction::Kind::XLogX) return selection.sum_xlogx();
    long double total = 0;
    for (std::uint32_t s : selection.ball_sizes)
        total += std::pow(static_cast<long double>(s), f.p);
    return static_cast<double>(total);
}

HittingState::HittingState(std::size_t universe, std::size_t balls)
    : universe_(universe),
      tracker_(universe, balls),
      members_(balls),
      balls_containing_(universe),
      hit_(balls, 0),
      is_center_(universe, 0),
      unhit_(balls) {}

void HittingState::add_member(BallId ball, ElementId element) {
    if (hit_[ball]) throw ContractError("growing a ball that is already hit");
    if (element >= universe_) throw ContractError("grown element out of universe");
    members_[ball].push_back(element);
    balls_containing_[element].push_back(ball);
    tracker_.increment(element);
    if (is_center_[element]) mark_hit(ball);
}

void HittingState::mark_hit(BallId ball) {
    hit_[ball] = 1;
    --unhit_;
    for (ElementId e : members_[ball]) tracker_.decrement(e);
}

void HittingState::make_center(ElementId element) {
    if (is_center_[element]) throw ContractError("element selected as center twice");
    is_center_[element] = 1;
    for (BallId ball : balls_containing_[element])
        if (!hit_[ball]) mark_hit(ball);
}

std::vector<ElementId> HittingState::greedy_phase(std::size_t target_unhit,
                                                  bool exhaustive_check) {
    std::vector<ElementId> picked;
    while (unhit_ > target_unhit) {
        auto choice = tracker_.find_max();
        if (!choice)
            throw ContractError("unhit balls remain but no element hits any of them");
        if (exhaustive_check) {
            std::uint32_t chosen_count = tracker_.count_of(*choice);
            for (ElementId e = 0; e < universe_; ++e) {
                std::uint32_t c = tracker_.count_of(e);
                if (c > chosen_count || (c == chosen_count && e < *choice))
                    throw ContractError("greedy pick is not the exhaustive argmax");
            }
        }
        make_center(*choice);
        picked.push_back(*choice);
    }
    return picked;
}

CenterSelection select_centers(GrowableBallSystem& system, std::size_t r, int p,
                               const SelectOptions& options) {
    const std::size_t universe = system.universe_size();
    const std::size_t balls = system.ball_count();
    if (r < 1 || r > universe) throw ParameterError("center budget r must be in [1, N]");
    if (p < 1 || p > 30) throw ParameterError("cost exponent p must be in [1, 30]");
    if (universe == 0 && balls > 0) throw ParameterError("balls without a universe");

    CenterSelection out;
    out.universe_size = universe;
    out.ball_count = balls;
    out.r = r;
    out.p = p;

    HittingState state(universe, balls);
    std::vector<std::uint8_t> frozen(balls, 0); // refused a grow; cannot grow further

    auto grow_ball_to = [&](BallId ball, std::uint64_t target) {
        state.reserve_ball(ball, target);
        while (!state.is_hit(ball) && !frozen[ball] && state.ball_size(ball) < target) {
            auto element = system.grow(ball);
            if (!element) {
                if (state.ball_size(ball) == 0)
                    throw ContractError("system refused to grow an empty ball");
                frozen[ball] = 1;
                return;
            }
            state.add_member(ball, *element);
        }
    };

    const unsigned __int128 numerator =
        (static_cast<unsigned __int128>(1) << (p + 2)) * universe;
    unsigned __int128 b_initial = balls == 0 ? 0 : (numerator + r - 1) / r;
    // Targets are min{b, N} throughout, so b never needs to exceed N.
    if (b_initial > universe) b_initial = universe;
    std::uint64_t b = static_cast<std::uint64_t>(b_initial);

    auto size_target = [&] { return std::min<std::uint64_t>(b, universe); };

    for (BallId ball = 0; ball < balls; ++ball) grow_ball_to(ball, size_target());

    std::uint32_t round = 0;
    while (state.unhit_count() > 0) {
        ++round;
        for (BallId ball = 0; ball < balls; ++ball)
            if (!state.is_hit(ball) && !frozen[ball] && state.ball_size(ball) != size_target())
                throw ContractError("unhit ball missed its size target");
        const std::size_t snapshot = state.unhit_count();
        const std::size_t target =
            (p + 1 >= 64) ? 0 : snapshot >> static_cast<unsigned>(p + 1);
        const std::uint64_t round_size = size_target();

        auto picked = state.greedy_phase(target, options.exhaustive_argmax_check);
        for (ElementId e : picked) {
            out.centers.push_back(e);
            system.note_center(e);
        }
        out.rounds.push_back({round, round_size, snapshot, picked.size()});

        if (state.unhit_count() == 0) break;
        if (b < universe) b = b * 2;
        for (BallId ball = 0; ball < balls; ++ball)
            if (!state.is_hit(ball)) grow_ball_to(ball, size_target());
    }

    out.ball_sizes.reserve(balls);
    for (BallId ball = 0; ball < balls; ++ball)
        out.ball_sizes.push_back(static_cast<std::uint32_t>(state.ball_size(ball)));
    out.ops = state.tracker().ops();
    if (options.record_members) out.members = state.release_members();
    return out;
}

TrackerAudit tracker_ops_audit(const CenterSelection& selection) {
    TrackerAudit audit;
    audit.counts = selection.ops;
    audit.sum_sizes = selection.sum_sizes();
    audit.growth_bound_ok =
        audit.counts.increments + audit.counts.decrements <= 2 * audit.sum_sizes;
    audit.find_max_bound_ok = audit.counts.find_max_calls <=
                              selection.centers.size() + selection.rounds.size();
    return audit;
}

RoundAccounting round_accounting(const CenterSelection& selection) {
    RoundAccounting acc;
    acc.unhit_bounds_ok = true;
    acc.centers_bounds_ok = true;
    const unsigned p = static_cast<unsigned>(selection.p);
    for (const RoundRecord& round : selection.rounds) {
        const unsigned shift = (round.index - 1) * (p + 1);
        if (shift >= 120 ||
            (static_cast<unsigned __int128>(round.unhit_at_start) << shift) >
                selection.ball_count)
            acc.unhit_bounds_ok = false;
        if (round.size_target >= selection.universe_size) {
            if (round.centers_added > 1) acc.centers_bounds_ok = false;
        } else if (round.index >= 120 ||
                   (static_cast<unsigned __int128>(round.centers_added) << round.index) >
                       selection.r) {
            acc.centers_bounds_ok = false;
        }
    }
    return acc;
}

bool cost_bound_holds(const CenterSelection& selection) {
    const int p = selection.p;
    const int shift = (p + 1) * (p + 1);
    const int nbits = std::bit_width(std::max<std::uint64_t>(1, selection.universe_size));
    const int mbits = std::bit_width(std::max<std::uint64_t>(1, selection.ball_count));
    if (shift + p * nbits + mbits < 120 && 2 * p * nbits + mbits < 120) {
        // Cross-multiplied exact form: Sum|B|^p * r^p <= 2^{(p+1)^2} * M * N^p.
        unsigned __int128 lhs = selection.sum_size_power(p);
        for (int i = 0; i < p; ++i) lhs *= selection.r;
        unsigned __int128 rhs = selection.ball_count;
        rhs <<= shift;
        for (int i = 0; i < p; ++i) rhs *= selection.universe_size;
        return lhs <= rhs;
    }
    long double lhs = 0;
    for (std::uint32_t s : selection.ball_sizes) lhs += std::pow(static_cast<long double>(s), p);
    long double rhs = std::pow(2.0L, shift) * static_cast<long double>(selection.ball_count) *
                      std::pow(static_cast<long double>(selection.universe_size) /
                                   static_cast<long double>(selection.r),
                               p);
    return lhs <= rhs;
}

double xlogx_bound(std::size_t ball_count, std::size_t universe, std::size_t r) {
    const double ratio = static_cast<double>(universe) / static_cast<double>(r);
    if (ratio < 2.0) throw ParameterError("xlogx bound requires N/r >= 2");
    return 512.0 * static_cast<double>(ball_count) * ratio * std::log2(ratio);
}

} // namespace growball
