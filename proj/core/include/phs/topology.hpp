#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "phs/projector.hpp"

namespace phs {

/// Weak-topology base set U(P; Q₁,…,Q_n; ε): all P̃ with
/// |tr{P̃Q_i} - tr{PQ_i}| < ε for every probe Q_i.
struct WeakNeighborhood {
    WeakNeighborhood(PureState center, std::vector<PureState> probes, double epsilon);

    PureState center;
    std::vector<PureState> probes;
    double epsilon;
};

/// Metric-topology base set K_ε(P): all P̃ with ‖P̃ - P‖ < ε.
struct MetricBall {
    MetricBall(PureState center, double epsilon);

    PureState center;
    double epsilon;
};

/// Index (k,l,m) of the countable base: U_klm = {P : |tr{PQ_k} - q_l| < 1/m}.
struct BaseSetIndex {
    BaseSetIndex(PureState probe, double q, int m);

    PureState probe;  // Q_k
    double q;         // q_l, rational grid point in [0,1]
    int m;
};

bool in_ball(const PureState& p, const MetricBall& ball);
bool in_weak_nbhd(const PureState& p, const WeakNeighborhood& nbhd);
bool in_base_set(const PureState& p, const BaseSetIndex& idx);

/// Disjoint open neighborhoods of two distinct rays, built from the single
/// probe Q = P₁ with window ε/2 where ε = 1 - h_{P₁}(P₂): membership in the
/// first forces h_{P₁} > 1 - ε/2, in the second h_{P₁} < 1 - ε/2. Throws
/// EqualStates when the inputs lie on one ray.
std::pair<WeakNeighborhood, WeakNeighborhood> separate(const PureState& p1,
                                                       const PureState& p2);

struct MembershipReport {
    int checked = 0;
    int agreed = 0;
    std::vector<int> violations;
};

/// Samples random states and asserts the exact neighborhood-base identity
/// U(P; P; ε²) = K_ε(P) sample by sample: both membership predicates must
/// agree on every draw (the center itself is always draw 0).
MembershipReport verify_ball_identity(const PureState& center, double epsilon, int samples,
                                      std::uint64_t seed);

/// Samples random states inside K_ε(P) and asserts each lies in
/// U(P; probes; ε). `checked` counts the draws that the ball predicate
/// confirmed; violations index draws that escaped the weak neighborhood.
MembershipReport inclusion_check(const PureState& center, const std::vector<PureState>& probes,
                                 double epsilon, int samples, std::uint64_t seed);

/// Finite sample of the countable base: k_max random probe states, the
/// rational grid q = l/l_max (l = 0..l_max), and window indices m = 1..m_max.
std::vector<BaseSetIndex> sample_base(int dim, int k_max, int l_max, int m_max,
                                      std::uint64_t seed);

/// Random state at rho_n-distance < epsilon from the center (epsilon <= 1);
/// uniform Haar draw when the ball covers the whole space.
PureState random_state_in_ball(const PureState& center, double epsilon, std::uint64_t seed);

}  // namespace phs
