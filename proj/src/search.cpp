#include "rado/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "rado/colorings.hpp"
#include "rado/parallel.hpp"
#include "rado/solutions.hpp"

namespace rado {

FlipEngine::FlipEngine(const LinearEquation& eq, std::int64_t n)
    : k_(static_cast<std::size_t>(eq.k())), n_(n), coloring_(Coloring::constant(Domain::interval(n), kRed)) {
    for_each_solution(eq, Domain::interval(n), [&](const std::vector<std::int64_t>& x) {
        solution_elems_.insert(solution_elems_.end(), x.begin(), x.end());
    });
    const std::size_t total = solution_elems_.size() / k_;
    red_count_.assign(total, 0);
    gains_.assign(static_cast<std::size_t>(n), 0);

    // adjacency: distinct (solution, multiplicity) per element
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
    auto each_distinct = [&](std::size_t s, auto&& fn) {
        const std::int64_t* tuple = solution_elems_.data() + s * k_;
        for (std::size_t i = 0; i < k_; ++i) {
            bool seen = false;
            for (std::size_t j = 0; j < i; ++j) seen = seen || tuple[j] == tuple[i];
            if (seen) continue;
            std::int32_t mult = 1;
            for (std::size_t j = i + 1; j < k_; ++j) mult += tuple[j] == tuple[i] ? 1 : 0;
            fn(tuple[i], mult);
        }
    };
    for (std::size_t s = 0; s < total; ++s)
        each_distinct(s, [&](std::int64_t t, std::int32_t) { ++counts[static_cast<std::size_t>(t)]; });
    adj_start_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (std::int64_t t = 1; t <= n; ++t)
        adj_start_[static_cast<std::size_t>(t) + 1] =
            adj_start_[static_cast<std::size_t>(t)] + counts[static_cast<std::size_t>(t)];
    adj_solution_.assign(adj_start_[static_cast<std::size_t>(n) + 1], 0);
    adj_mult_.assign(adj_solution_.size(), 0);
    std::vector<std::size_t> cursor(adj_start_.begin(), adj_start_.end());
    for (std::size_t s = 0; s < total; ++s) {
        each_distinct(s, [&](std::int64_t t, std::int32_t mult) {
            std::size_t& at = cursor[static_cast<std::size_t>(t)];
            adj_solution_[at] = static_cast<std::uint32_t>(s);
            adj_mult_[at] = mult;
            ++at;
        });
    }
    rebuild();
}

namespace {
inline bool is_mono(std::int32_t red, std::int32_t k) { return red == 0 || red == k; }
}  // namespace

void FlipEngine::set_coloring(const Coloring& f) {
    if (!f.domain.is_interval() || f.domain.size != n_)
        throw std::invalid_argument("coloring does not match the search domain");
    coloring_ = f;
    rebuild();
}

void FlipEngine::rebuild() {
    const std::int32_t k = static_cast<std::int32_t>(k_);
    const std::size_t total = red_count_.size();
    mono_ = 0;
    for (std::size_t s = 0; s < total; ++s) {
        const std::int64_t* tuple = solution_elems_.data() + s * k_;
        std::int32_t red = 0;
        for (std::size_t i = 0; i < k_; ++i) red += coloring_.values[static_cast<std::size_t>(tuple[i] - 1)] == kRed;
        red_count_[s] = red;
        mono_ += is_mono(red, k);
    }
    std::fill(gains_.begin(), gains_.end(), 0);
    for (std::int64_t t = 1; t <= n_; ++t) {
        std::int64_t g = 0;
        bool red_t = coloring_.values[static_cast<std::size_t>(t - 1)] == kRed;
        for (std::size_t e = adj_start_[static_cast<std::size_t>(t)]; e < adj_start_[static_cast<std::size_t>(t) + 1]; ++e) {
            std::int32_t r = red_count_[adj_solution_[e]];
            std::int32_t after = red_t ? r - adj_mult_[e] : r + adj_mult_[e];
            g += is_mono(after, k) - is_mono(r, k);
        }
        gains_[static_cast<std::size_t>(t - 1)] = g;
    }
}

void FlipEngine::flip(std::int64_t t) {
    const std::int32_t k = static_cast<std::int32_t>(k_);
    const bool was_red = coloring_.values[static_cast<std::size_t>(t - 1)] == kRed;
    const std::size_t lo = adj_start_[static_cast<std::size_t>(t)];
    const std::size_t hi = adj_start_[static_cast<std::size_t>(t) + 1];

    auto adjust_gains = [&](int sign) {
        for (std::size_t e = lo; e < hi; ++e) {
            std::size_t s = adj_solution_[e];
            std::int32_t r = red_count_[s];
            const std::int64_t* tuple = solution_elems_.data() + s * k_;
            for (std::size_t i = 0; i < k_; ++i) {
                bool seen = false;
                for (std::size_t j = 0; j < i; ++j) seen = seen || tuple[j] == tuple[i];
                if (seen) continue;
                std::int32_t mult = 1;
                for (std::size_t j = i + 1; j < k_; ++j) mult += tuple[j] == tuple[i] ? 1 : 0;
                std::int64_t u = tuple[i];
                bool red_u = coloring_.values[static_cast<std::size_t>(u - 1)] == kRed;
                std::int32_t after = red_u ? r - mult : r + mult;
                gains_[static_cast<std::size_t>(u - 1)] +=
                    sign * (is_mono(after, k) - is_mono(r, k));
            }
        }
    };

    adjust_gains(-1);
    coloring_.values[static_cast<std::size_t>(t - 1)] = was_red ? kBlue : kRed;
    for (std::size_t e = lo; e < hi; ++e) {
        std::size_t s = adj_solution_[e];
        std::int32_t before = red_count_[s];
        std::int32_t after = was_red ? before - adj_mult_[e] : before + adj_mult_[e];
        red_count_[s] = after;
        mono_ += is_mono(after, k) - is_mono(before, k);
    }
    adjust_gains(+1);
}

std::int64_t FlipEngine::best_flip() const {
    std::int64_t best_t = 0, best_gain = 0;
    for (std::int64_t t = 1; t <= n_; ++t) {
        std::int64_t g = gains_[static_cast<std::size_t>(t - 1)];
        if (g < best_gain) {
            best_gain = g;
            best_t = t;
        }
    }
    return best_t;
}

std::int64_t FlipEngine::recount() const {
    const std::int32_t k = static_cast<std::int32_t>(k_);
    std::int64_t mono = 0;
    for (std::size_t s = 0; s < red_count_.size(); ++s) {
        const std::int64_t* tuple = solution_elems_.data() + s * k_;
        std::int32_t red = 0;
        for (std::size_t i = 0; i < k_; ++i)
            red += coloring_.values[static_cast<std::size_t>(tuple[i] - 1)] == kRed;
        mono += is_mono(red, k);
    }
    return mono;
}

namespace {

std::int64_t descend(FlipEngine& engine, int max_flips) {
    std::int64_t flips = 0;
    while (flips < max_flips) {
        std::int64_t t = engine.best_flip();
        if (t == 0) break;
        engine.flip(t);
        ++flips;
    }
    return flips;
}

}  // namespace

LocalSearchResult local_search(const LinearEquation& eq, const SearchConfig& cfg, int threads) {
    if (cfg.restarts < 1 || cfg.max_passes < 1 || cfg.n < 1)
        throw std::invalid_argument("search config values must be positive");
    const std::int64_t total = count_solutions(eq, Domain::interval(cfg.n));
    if (total == 0) throw std::domain_error("equation has no solutions over this domain");

    struct RestartOutcome {
        std::int64_t mono = -1;
        std::int64_t flips = 0;
        Coloring witness;
    };
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));

    parallel_chunks(cfg.restarts, threads, [&](int, std::int64_t begin, std::int64_t end) {
        FlipEngine engine(eq, cfg.n);
        for (std::int64_t r = begin; r < end; ++r) {
            std::uint64_t seed =
                detail::splitmix64(cfg.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(r + 1));
            engine.set_coloring(random_coloring(Domain::interval(cfg.n), seed));
            std::int64_t flips = descend(engine, cfg.max_passes);
            outcomes[static_cast<std::size_t>(r)] = {engine.monochromatic(), flips, engine.coloring()};
        }
    });

    LocalSearchResult best;
    best.monochromatic = -1;
    for (const RestartOutcome& o : outcomes) {
        best.total_flips += o.flips;
        if (best.monochromatic < 0 || o.mono < best.monochromatic) {
            best.monochromatic = o.mono;
            best.flips = o.flips;
            best.witness = o.witness;
        }
    }
    best.total = total;
    best.mu = Rational{best.monochromatic, best.total};
    best.improved = true;
    return best;
}

LocalSearchResult improve_coloring(const LinearEquation& eq, const Coloring& start, const SearchConfig& cfg) {
    FlipEngine engine(eq, cfg.n);
    engine.set_coloring(start);
    std::int64_t before = engine.monochromatic();
    std::int64_t flips = descend(engine, cfg.max_passes);
    LocalSearchResult res;
    res.monochromatic = engine.monochromatic();
    res.total = engine.total();
    res.mu = res.total == 0 ? Rational{0, 1} : Rational{res.monochromatic, res.total};
    res.witness = engine.coloring();
    res.flips = res.total_flips = flips;
    res.improved = engine.monochromatic() < before;
    return res;
}

}  // namespace rado
