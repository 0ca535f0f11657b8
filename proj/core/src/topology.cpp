#include "phs/topology.hpp"

#include <cmath>

#include "phs/errors.hpp"
#include "phs/rng.hpp"

namespace phs {

WeakNeighborhood::WeakNeighborhood(PureState center_, std::vector<PureState> probes_,
                                   double epsilon_)
    : center(std::move(center_)), probes(std::move(probes_)), epsilon(epsilon_) {
    if (probes.empty()) throw EmptyProbes();
    if (!(epsilon > 0.0)) throw InvalidArgument("neighborhood epsilon must be > 0");
}

MetricBall::MetricBall(PureState center_, double epsilon_)
    : center(std::move(center_)), epsilon(epsilon_) {
    if (!(epsilon > 0.0)) throw InvalidArgument("ball epsilon must be > 0");
}

BaseSetIndex::BaseSetIndex(PureState probe_, double q_, int m_)
    : probe(std::move(probe_)), q(q_), m(m_) {
    if (q < 0.0 || q > 1.0) throw InvalidArgument("base-set q must lie in [0,1]");
    if (m < 1) throw InvalidArgument("base-set m must be >= 1");
}

bool in_ball(const PureState& p, const MetricBall& ball) {
    return rho_n(p, ball.center) < ball.epsilon;
}

bool in_weak_nbhd(const PureState& p, const WeakNeighborhood& nbhd) {
    for (const PureState& q : nbhd.probes) {
        const double deviation =
            std::abs(transition_probability(p, q) - transition_probability(nbhd.center, q));
        if (!(deviation < nbhd.epsilon)) return false;
    }
    return true;
}

bool in_base_set(const PureState& p, const BaseSetIndex& idx) {
    return std::abs(transition_probability(p, idx.probe) - idx.q) < 1.0 / idx.m;
}

std::pair<WeakNeighborhood, WeakNeighborhood> separate(const PureState& p1,
                                                       const PureState& p2) {
    if (p1 == p2) throw EqualStates();
    const double eps = 1.0 - transition_probability(p1, p2);
    std::vector<PureState> probe{p1};
    WeakNeighborhood u1(p1, probe, eps / 2.0);
    WeakNeighborhood u2(p2, probe, eps / 2.0);
    return {std::move(u1), std::move(u2)};
}

PureState random_state_in_ball(const PureState& center, double epsilon, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw InvalidArgument("ball epsilon must be > 0");
    Rng rng(seed);
    const int n = center.dim();
    if (epsilon > 1.0 || n == 1) {
        // The ball is all of P(H) (rho_n never exceeds 1), or the space is a
        // single ray; a plain Haar draw covers it.
        if (n == 1) return center;
        std::vector<cplx> c(static_cast<std::size_t>(n));
        for (cplx& x : c) x = rng.complex_gaussian();
        return PureState(normalize(StateVector(std::move(c))));
    }
    const StateVector& phi = center.vec().vec();
    while (true) {
        std::vector<cplx> c(static_cast<std::size_t>(n));
        for (cplx& x : c) x = rng.complex_gaussian();
        StateVector g(std::move(c));
        g = g - (inner(phi, g) * phi);
        const double gn = norm(g);
        if (gn < 1e-8) continue;
        // On the geodesic cos(θ)φ + sin(θ)ĝ the distance to the center is
        // exactly |sin θ|, so s < ε keeps the draw inside the ball.
        const double s = epsilon * rng.uniform();
        StateVector candidate =
            (cplx{std::sqrt(1.0 - s * s), 0.0} * phi) + (cplx{s / gn, 0.0} * g);
        // Random overall phase: membership is a ray property, the vector is not.
        const double theta = rng.uniform(0.0, 6.283185307179586);
        candidate = cplx{std::cos(theta), std::sin(theta)} * candidate;
        return PureState(normalize(candidate));
    }
}

MembershipReport verify_ball_identity(const PureState& center, double epsilon, int samples,
                                      std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InvalidArgument("epsilon must be in (0,1]");
    if (samples < 0) throw InvalidArgument("samples must be >= 0");
    WeakNeighborhood weak(center, {center}, epsilon * epsilon);
    MetricBall ball(center, epsilon);

    MembershipReport report;
    auto check = [&](const PureState& p, int index) {
        const bool w = in_weak_nbhd(p, weak);
        const bool b = in_ball(p, ball);
        ++report.checked;
        if (w == b)
            ++report.agreed;
        else
            report.violations.push_back(index);
    };

    check(center, 0);
    for (int i = 1; i <= samples; ++i)
        check(PureState::random(center.dim(), derive_seed(seed, "ball-identity", i)), i);
    return report;
}

MembershipReport inclusion_check(const PureState& center, const std::vector<PureState>& probes,
                                 double epsilon, int samples, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be > 0");
    if (probes.empty()) throw EmptyProbes();
    WeakNeighborhood weak(center, probes, epsilon);
    MetricBall ball(center, epsilon);

    MembershipReport report;
    for (int i = 0; i < samples; ++i) {
        PureState p = random_state_in_ball(center, epsilon, derive_seed(seed, "inclusion", i));
        if (!in_ball(p, ball)) continue;  // boundary rounding: not an in-ball witness
        ++report.checked;
        if (in_weak_nbhd(p, weak))
            ++report.agreed;
        else
            report.violations.push_back(i);
    }
    return report;
}

std::vector<BaseSetIndex> sample_base(int dim, int k_max, int l_max, int m_max,
                                      std::uint64_t seed) {
    if (dim < 1 || k_max < 1 || l_max < 1 || m_max < 1)
        throw InvalidArgument("sample_base bounds must be >= 1");
    std::vector<BaseSetIndex> base;
    base.reserve(static_cast<std::size_t>(k_max) * static_cast<std::size_t>(l_max + 1) *
                 static_cast<std::size_t>(m_max));
    for (int k = 0; k < k_max; ++k) {
        const PureState q_k =
            PureState(random_unit(dim, derive_seed(seed, "base-probe", static_cast<std::uint64_t>(k))));
        for (int l = 0; l <= l_max; ++l) {
            const double q = static_cast<double>(l) / static_cast<double>(l_max);
            for (int m = 1; m <= m_max; ++m) base.emplace_back(q_k, q, m);
        }
    }
    return base;
}

}  // namespace phs
