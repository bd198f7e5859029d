#pragma once

#include <vector>

#include "growball/generators.hpp"
#include "growball/graph.hpp"
#include "growball/hitting.hpp"

namespace growball {

// The proof's worst-case adversary: ball i's t-th growth (t = 1, 2, ...)
// adds element (i + t) mod N.
class CyclicBallSystem final : public GrowableBallSystem {
  public:
    CyclicBallSystem(std::size_t universe, std::size_t balls)
        : universe_(universe), sizes_(balls, 0) {}

    std::size_t universe_size() const override { return universe_; }
    std::size_t ball_count() const override { return sizes_.size(); }
    std::optional<ElementId> grow(BallId ball) override {
        if (sizes_[ball] == universe_) return std::nullopt;
        ++sizes_[ball];
        return static_cast<ElementId>((ball + sizes_[ball]) % universe_);
    }

  private:
    std::size_t universe_;
    std::vector<std::uint32_t> sizes_;
};

// Oblivious random grower: each grow adds a uniform not-yet-member element.
class RandomBallSystem final : public GrowableBallSystem {
  public:
    RandomBallSystem(std::size_t universe, std::size_t balls, std::uint64_t seed)
        : universe_(universe), member_(balls, std::vector<bool>(universe, false)),
          sizes_(balls, 0), rng_(seed) {}

    std::size_t universe_size() const override { return universe_; }
    std::size_t ball_count() const override { return sizes_.size(); }
    std::optional<ElementId> grow(BallId ball) override {
        if (sizes_[ball] == universe_) return std::nullopt;
        std::uint64_t e;
        do {
            e = rng_.below(universe_);
        } while (member_[ball][e]);
        member_[ball][e] = true;
        ++sizes_[ball];
        return static_cast<ElementId>(e);
    }
    bool contains(BallId ball, ElementId e) const { return member_[ball][e]; }

  private:
    std::size_t universe_;
    std::vector<std::vector<bool>> member_;
    std::vector<std::uint32_t> sizes_;
    Rng rng_;
};

struct BaselineStats {
    std::size_t centers_used = 0;
    std::vector<std::uint32_t> ball_sizes;
    bool all_hit = true;

    std::uint64_t sum_sizes() const;
    double sum_xlogx() const;
};

// Uniform random centers; each ball grows by partial Dijkstra until it
// settles a center (or exhausts its component). Comparison baseline only;
// no bound is asserted.
BaselineStats run_baseline_random(const Graph& g, std::size_t r, std::uint64_t seed);

// Folklore derandomization: fix every ball to its ceil(n/r) nearest
// vertices, then plain greedy until all balls are hit. The number of
// centers used may exceed r by the expected log factor.
BaselineStats run_baseline_folklore(const Graph& g, std::size_t r);

} // namespace growball
