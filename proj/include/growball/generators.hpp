#pragma once

#include <cstdint>
#include <string>

#include "growball/graph.hpp"

namespace growball {

// Deterministic stream generator (splitmix64); the same seed always yields
// the same sequence on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (0xFFFFFFFFFFFFFFFFull / bound);
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return draw % bound;
    }

    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

struct GeneratorSpec {
    enum class Family { Path, Cycle, Grid, RandomGnm, RandomGeometric };
    Family family = Family::Path;
    std::size_t n = 0;
    std::size_t m = 0; // gnm and geometric only
    std::uint64_t weight_min = 1;
    std::uint64_t weight_max = 100;
    std::uint64_t seed = 1;
};

// Pure function of its parameters. random-gnm lays a random spanning tree
// first, so it is always connected; random-geometric links the m
// geometrically closest point pairs and may be disconnected.
Graph generate(const GeneratorSpec& spec);

GeneratorSpec::Family parse_family(const std::string& name);
std::string family_name(GeneratorSpec::Family family);
std::string spec_id(const GeneratorSpec& spec);

} // namespace growball
