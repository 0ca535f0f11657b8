#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phs/projector.hpp"

namespace phs {

/// Finite sampled state universe standing in for P(H) as a sample space.
/// Points are pairwise distinct as rays; ids are their positions.
struct FiniteUniverse {
    FiniteUniverse(int dim, std::vector<PureState> points);

    int dim;
    std::vector<PureState> points;

    int size() const { return static_cast<int>(points.size()); }

    /// Seeded universe of `count` Haar-random distinct states.
    static FiniteUniverse random(int dim, int count, std::uint64_t seed);
};

/// Family of generator subsets (given as sorted id lists) of a universe.
struct GeneratorFamily {
    std::vector<std::vector<int>> sets;
    std::string provenance;
};

/// Merge two families over the same universe, keeping both provenances.
GeneratorFamily merge(GeneratorFamily a, const GeneratorFamily& b);

/// Atoms of the σ-algebra generated by a family: on a finite universe the
/// generated σ-algebra is exactly the set of unions of these blocks, so the
/// partition *is* the σ-algebra (|σ-algebra| = 2^blocks). Blocks are listed
/// by their smallest member, members ascending.
struct FinitePartition {
    int universe_size = 0;
    std::vector<std::vector<int>> blocks;

    friend bool operator==(const FinitePartition& a, const FinitePartition& b) = default;
};

/// Two points share an atom iff no generator set separates them.
/// Generator order and duplication never change the result.
FinitePartition atoms(const FiniteUniverse& universe, const GeneratorFamily& gen);

/// True iff every block of `fine` is contained in some block of `coarse`.
bool refines(const FinitePartition& fine, const FinitePartition& coarse);

/// Finite trace of metric-ball opens: one set {i : rho_n(point_i, c) < r}
/// per (center, radius) pair; empty sets are dropped.
GeneratorFamily ball_generators(const FiniteUniverse& universe,
                                const std::vector<PureState>& centers,
                                const std::vector<double>& radii);

/// Σ-side generators from the countable base: one set
/// {i : |h_Q(point_i) - q| < 1/m} per (probe, q) pair at window index m;
/// empty sets are dropped.
GeneratorFamily h_generators(const FiniteUniverse& universe,
                             const std::vector<PureState>& probes,
                             const std::vector<double>& thresholds, int m);

enum class RefinementVerdict {
    equal,          // identical atoms
    sigma_coarser,  // xi atoms refine sigma atoms (the provable Σ ⊆ Ξ direction)
    sigma_finer,    // sigma atoms refine xi atoms (would contradict Σ ⊆ Ξ)
    incomparable,
};

const char* refinement_name(RefinementVerdict v);

struct MisraResult {
    FinitePartition xi_atoms;
    FinitePartition sigma_atoms;
    bool equal;
    RefinementVerdict refinement;
};

/// Finite echo of Ξ = Σ: generate both σ-algebras and compare their atoms.
/// With matched generator resolutions the partitions must coincide; an
/// impoverished Σ family may only come out coarser, never finer.
MisraResult misra_check(const FiniteUniverse& universe, const GeneratorFamily& xi_gen,
                        const GeneratorFamily& sigma_gen);

}  // namespace phs
