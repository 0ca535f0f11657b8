#include "phs/borel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "phs/errors.hpp"
#include "phs/rng.hpp"

namespace phs {

FiniteUniverse::FiniteUniverse(int dim_, std::vector<PureState> points_)
    : dim(dim_), points(std::move(points_)) {
    if (points.empty()) throw InvalidArgument("universe must be nonempty");
    for (const PureState& p : points)
        if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw InvalidArgument("universe points " + std::to_string(i) + " and " +
                                      std::to_string(j) + " lie on the same ray");
}

FiniteUniverse FiniteUniverse::random(int dim, int count, std::uint64_t seed) {
    if (count < 1) throw InvalidArgument("count must be >= 1");
    std::vector<PureState> pts;
    pts.reserve(static_cast<std::size_t>(count));
    std::uint64_t draw = 0;
    while (static_cast<int>(pts.size()) < count) {
        PureState candidate = PureState::random(dim, derive_seed(seed, "universe", draw++));
        bool duplicate = false;
        for (const PureState& p : pts) duplicate = duplicate || p == candidate;
        if (!duplicate) pts.push_back(std::move(candidate));
    }
    return FiniteUniverse(dim, std::move(pts));
}

GeneratorFamily merge(GeneratorFamily a, const GeneratorFamily& b) {
    a.sets.insert(a.sets.end(), b.sets.begin(), b.sets.end());
    if (a.provenance.empty())
        a.provenance = b.provenance;
    else if (!b.provenance.empty() && a.provenance != b.provenance)
        a.provenance += "+" + b.provenance;
    return a;
}

FinitePartition atoms(const FiniteUniverse& universe, const GeneratorFamily& gen) {
    const int n = universe.size();
    for (const std::vector<int>& set : gen.sets)
        for (int id : set)
            if (id < 0 || id >= n) throw InvalidArgument("generator id out of range");

    // Signature refinement: the membership pattern of a point across all
    // generators determines its atom.
    std::vector<std::vector<bool>> signature(static_cast<std::size_t>(n),
                                             std::vector<bool>(gen.sets.size(), false));
    for (std::size_t s = 0; s < gen.sets.size(); ++s)
        for (int id : gen.sets[s]) signature[static_cast<std::size_t>(id)][s] = true;

    std::map<std::vector<bool>, std::vector<int>> by_signature;
    for (int i = 0; i < n; ++i) by_signature[signature[static_cast<std::size_t>(i)]].push_back(i);

    FinitePartition partition;
    partition.universe_size = n;
    partition.blocks.reserve(by_signature.size());
    for (auto& [sig, block] : by_signature) partition.blocks.push_back(std::move(block));
    std::sort(partition.blocks.begin(), partition.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return partition;
}

bool refines(const FinitePartition& fine, const FinitePartition& coarse) {
    if (fine.universe_size != coarse.universe_size) return false;
    std::vector<int> coarse_block_of(static_cast<std::size_t>(coarse.universe_size), -1);
    for (std::size_t b = 0; b < coarse.blocks.size(); ++b)
        for (int id : coarse.blocks[b]) coarse_block_of[static_cast<std::size_t>(id)] = static_cast<int>(b);
    for (const std::vector<int>& block : fine.blocks) {
        const int home = coarse_block_of[static_cast<std::size_t>(block.front())];
        for (int id : block)
            if (coarse_block_of[static_cast<std::size_t>(id)] != home) return false;
    }
    return true;
}

GeneratorFamily ball_generators(const FiniteUniverse& universe,
                                const std::vector<PureState>& centers,
                                const std::vector<double>& radii) {
    for (double r : radii)
        if (!(r > 0.0)) throw InvalidArgument("ball radius must be > 0");
    GeneratorFamily family;
    family.provenance = "metric-balls";
    for (const PureState& center : centers) {
        for (double r : radii) {
            std::vector<int> set;
            for (int i = 0; i < universe.size(); ++i)
                if (rho_n(universe.points[static_cast<std::size_t>(i)], center) < r)
                    set.push_back(i);
            if (!set.empty()) family.sets.push_back(std::move(set));
        }
    }
    return family;
}

GeneratorFamily h_generators(const FiniteUniverse& universe,
                             const std::vector<PureState>& probes,
                             const std::vector<double>& thresholds, int m) {
    if (m < 1) throw InvalidArgument("window index m must be >= 1");
    for (double q : thresholds)
        if (q < 0.0 || q > 1.0) throw InvalidArgument("threshold must lie in [0,1]");
    const double window = 1.0 / static_cast<double>(m);
    GeneratorFamily family;
    family.provenance = "h-preimages";
    for (const PureState& probe : probes) {
        for (double q : thresholds) {
            std::vector<int> set;
            for (int i = 0; i < universe.size(); ++i) {
                const double h =
                    transition_probability(universe.points[static_cast<std::size_t>(i)], probe);
                if (std::abs(h - q) < window) set.push_back(i);
            }
            if (!set.empty()) family.sets.push_back(std::move(set));
        }
    }
    return family;
}

const char* refinement_name(RefinementVerdict v) {
    switch (v) {
        case RefinementVerdict::equal: return "equal";
        case RefinementVerdict::sigma_coarser: return "sigma-coarser";
        case RefinementVerdict::sigma_finer: return "sigma-finer";
        case RefinementVerdict::incomparable: return "incomparable";
    }
    return "?";
}

MisraResult misra_check(const FiniteUniverse& universe, const GeneratorFamily& xi_gen,
                        const GeneratorFamily& sigma_gen) {
    FinitePartition xi = atoms(universe, xi_gen);
    FinitePartition sigma = atoms(universe, sigma_gen);
    const bool equal = xi == sigma;
    RefinementVerdict verdict;
    if (equal)
        verdict = RefinementVerdict::equal;
    else if (refines(xi, sigma))
        verdict = RefinementVerdict::sigma_coarser;
    else if (refines(sigma, xi))
        verdict = RefinementVerdict::sigma_finer;
    else
        verdict = RefinementVerdict::incomparable;
    return {std::move(xi), std::move(sigma), equal, verdict};
}

}  // namespace phs
