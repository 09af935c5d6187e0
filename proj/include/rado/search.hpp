#pragma once

#include <cstdint>
#include <vector>

#include "rado/domain.hpp"
#include "rado/equation.hpp"
#include "rado/rational.hpp"

namespace rado {

struct SearchConfig {
    std::uint64_t seed = 1;
    int restarts = 20;
    /// Cap on accepted flips per restart.
    int max_passes = 1 << 20;
    std::int64_t n = 100;
};

/// Incremental monochromatic counting under single-element flips.
/// Solutions are indexed once; flipping element t costs O(solutions through
/// t). gain(t) is the change in the monochromatic count if t flips.
class FlipEngine {
  public:
    FlipEngine(const LinearEquation& eq, std::int64_t n);

    void set_coloring(const Coloring& f);
    const Coloring& coloring() const { return coloring_; }

    std::int64_t total() const { return static_cast<std::int64_t>(solution_elems_.size() / k_); }
    std::int64_t monochromatic() const { return mono_; }
    std::int64_t gain(std::int64_t t) const { return gains_[static_cast<std::size_t>(t - 1)]; }

    void flip(std::int64_t t);

    /// Element with the most negative gain (smallest index on ties), or 0
    /// when no flip strictly decreases the count.
    std::int64_t best_flip() const;

    /// From-scratch recount; equals monochromatic() after any flip sequence.
    std::int64_t recount() const;

  private:
    void rebuild();

    std::size_t k_;
    std::int64_t n_;
    Coloring coloring_;
    std::vector<std::int64_t> solution_elems_;   // flat k-tuples
    std::vector<std::int32_t> red_count_;        // red entries per solution
    // per-element adjacency over distinct (solution, multiplicity) pairs
    std::vector<std::size_t> adj_start_;
    std::vector<std::uint32_t> adj_solution_;
    std::vector<std::int32_t> adj_mult_;
    std::vector<std::int64_t> gains_;
    std::int64_t mono_ = 0;
};

struct LocalSearchResult {
    Rational mu{0, 1};
    Coloring witness;
    std::int64_t monochromatic = 0;
    std::int64_t total = 0;
    std::int64_t flips = 0;          // accepted flips in the best restart
    std::int64_t total_flips = 0;    // across all restarts
    bool improved = false;           // improve_coloring: any strict decrease
};

/// Steepest-descent single-flip minimization of the monochromatic count from
/// seeded random starts; best over cfg.restarts restarts. Deterministic for
/// a fixed (eq, cfg). Restarts may run in parallel without changing the
/// result.
LocalSearchResult local_search(const LinearEquation& eq, const SearchConfig& cfg, int threads = 1);

/// Same descent from a supplied starting coloring; reports whether any
/// strict improvement was found.
LocalSearchResult improve_coloring(const LinearEquation& eq, const Coloring& start, const SearchConfig& cfg);

}  // namespace rado
