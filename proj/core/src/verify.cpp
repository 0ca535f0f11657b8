#include "phs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "phs/borel.hpp"
#include "phs/convergence.hpp"
#include "phs/errors.hpp"
#include "phs/rng.hpp"
#include "phs/topology.hpp"

namespace phs {

namespace {

struct Checker {
    SuiteResult result;

    void check(bool ok, const std::string& name) {
        ++result.cases;
        if (!ok) result.failures.push_back(name);
    }
};

std::string tag(const std::string& base, int dim, int index) {
    std::ostringstream out;
    out << base << "[dim=" << dim << ",trial=" << index << "]";
    return out.str();
}

// ---------------------------------------------------------------- metrics

void run_metrics(Checker& c, const VerifyOptions& opt) {
    const std::vector<int> dims = opt.dim > 0 ? std::vector<int>{opt.dim}
                                              : std::vector<int>{2, 3, 4, 8, 16, 64};
    const int trials = opt.trials > 0 ? opt.trials : 100;

    for (int dim : dims) {
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t s = derive_seed(opt.seed, "metrics", static_cast<std::uint64_t>(dim) * 1000003 + t);
            const PureState p = PureState::random(dim, derive_seed(s, "p"));
            const PureState q = PureState::random(dim, derive_seed(s, "q"));

            const double closed_n = rho_n(p, q);
            const double closed_tr = rho_tr(p, q);
            const std::vector<double> spectrum = dense_spectrum(materialize(p) - materialize(q));

            c.check(std::abs(closed_n - operator_norm(spectrum)) <= opt.tol,
                    tag("metrics.operator-norm-vs-oracle", dim, t));
            c.check(std::abs(closed_tr - trace_norm(spectrum)) <= opt.tol,
                    tag("metrics.trace-norm-vs-oracle", dim, t));
            c.check(closed_tr == 2.0 * closed_n, tag("metrics.trace-is-twice-norm", dim, t));

            // Spectrum structure: two entries at ±λ, the rest at zero.
            const auto [lp, lm] = diff_eigenvalues(p, q);
            bool structure = spectrum.size() == static_cast<std::size_t>(dim) &&
                             std::abs(spectrum.front() - lp) <= 1e-10 &&
                             std::abs(spectrum.back() - lm) <= 1e-10;
            for (std::size_t i = 1; i + 1 < spectrum.size(); ++i)
                structure = structure && std::abs(spectrum[i]) <= 1e-10;
            c.check(structure, tag("metrics.spectrum-structure", dim, t));

            c.check(std::abs(trace_product(materialize(p), materialize(q)) -
                             transition_probability(p, q)) <= 1e-12,
                    tag("metrics.trace-product-vs-h", dim, t));

            const NormBoundCheck bound = norm_bound_check(p.vec(), q.vec());
            c.check(bound.holds, tag("metrics.continuity-bound", dim, t));

            // Phase invariance of the closed form.
            Rng rng(derive_seed(s, "phase"));
            const double a = rng.uniform(0.0, 6.283185307179586);
            const double b = rng.uniform(0.0, 6.283185307179586);
            const PureState p2(UnitVector(cplx{std::cos(a), std::sin(a)} * p.vec().vec()));
            const PureState q2(UnitVector(cplx{std::cos(b), std::sin(b)} * q.vec().vec()));
            c.check(std::abs(rho_n(p2, q2) - closed_n) <= 1e-12,
                    tag("metrics.phase-invariance", dim, t));

            // Triangle inequality through a third random state.
            const PureState r = PureState::random(dim, derive_seed(s, "r"));
            c.check(rho_n(p, q) <= rho_n(p, r) + rho_n(r, q) + 1e-10,
                    tag("metrics.triangle-rho-n", dim, t));
            c.check(rho_tr(p, q) <= rho_tr(p, r) + rho_tr(r, q) + 1e-10,
                    tag("metrics.triangle-rho-tr", dim, t));
        }
    }
}

// --------------------------------------------------------------- topology

// Covering echo for U = h_Q^{-1}((a,b)) at dimension 2: sample members of U
// and count those that no base set both contains and provably fits inside U.
// A base set U_klm built on probe Q_k with d_k = rho_n(Q_k, Q) is provably
// inside U when [q_l - 1/m - d_k, q_l + 1/m + d_k] ⊆ (a, b).
int run_base_covering(std::uint64_t seed, int k_max, int l_max, int m_max) {
    constexpr int kIntervals = 20;
    constexpr int kSamplesPerInterval = 10;
    int failures = 0;
    for (int interval = 0; interval < kIntervals; ++interval) {
        const std::uint64_t s = derive_seed(seed, "covering", interval);
        Rng rng(derive_seed(s, "window"));
        const double a = rng.uniform(0.0, 0.6);
        const double b = std::min(1.0, a + rng.uniform(0.2, 0.4));
        const UnitVector q_vec = random_unit(2, derive_seed(s, "q"));
        const PureState q_state(q_vec);

        std::vector<double> h_probe_dist;
        std::vector<PureState> base_probes;
        for (int k = 0; k < k_max; ++k) {
            base_probes.push_back(PureState::random(2, derive_seed(s, "base-probe", k)));
            h_probe_dist.push_back(rho_n(base_probes.back(), q_state));
        }

        for (int sample = 0; sample < kSamplesPerInterval; ++sample) {
            // Construct P with h_Q(P) = t exactly: cos/sin mix of φ_Q and an
            // orthogonal direction.
            const double t = rng.uniform(a + 0.05 * (b - a), b - 0.05 * (b - a));
            Rng dir(derive_seed(s, "dir", sample));
            StateVector g({dir.complex_gaussian(), dir.complex_gaussian()});
            g = g - (inner(q_vec.vec(), g) * q_vec.vec());
            if (norm(g) < 1e-8) {
                --sample;
                continue;
            }
            const StateVector p_vec = (cplx{std::sqrt(t), 0.0} * q_vec.vec()) +
                                      (cplx{std::sqrt(1.0 - t) / norm(g), 0.0} * g);
            const PureState p(normalize(p_vec));

            bool covered = false;
            for (int k = 0; k < k_max && !covered; ++k) {
                const double h_k = transition_probability(p, base_probes[static_cast<std::size_t>(k)]);
                const double d_k = h_probe_dist[static_cast<std::size_t>(k)];
                for (int l = 0; l <= l_max && !covered; ++l) {
                    const double q_l = static_cast<double>(l) / l_max;
                    const double margin = std::min(q_l - a, b - q_l) - d_k;
                    if (margin <= 0.0) continue;
                    // Want an m with gap < 1/m <= margin; the best candidate
                    // is the smallest m with 1/m <= margin.
                    const int m_lo = std::max(1, static_cast<int>(std::ceil(1.0 / margin)));
                    if (m_lo > m_max) continue;
                    const double gap = std::abs(h_k - q_l);
                    if (gap < 1.0 / m_lo) covered = true;
                }
            }
            if (!covered) ++failures;
        }
    }
    return failures;
}

void run_topology(Checker& c, const VerifyOptions& opt) {
    const std::vector<int> dims =
        opt.dim > 0 ? std::vector<int>{opt.dim} : std::vector<int>{2, 4, 16};
    const int samples = opt.trials > 0 ? opt.trials : 200;

    // Ball identity U(P;P;ε²) = K_ε(P) and the inclusion K_ε ⊆ U.
    for (int dim : dims) {
        int grid_index = 0;
        for (double eps : {0.1, 0.5, 0.9}) {
            const std::uint64_t s =
                derive_seed(opt.seed, "topology-ball", static_cast<std::uint64_t>(dim) * 16 + grid_index++);
            const PureState center = PureState::random(dim, derive_seed(s, "center"));
            const MembershipReport identity = verify_ball_identity(center, eps, samples, s);
            c.check(identity.agreed == identity.checked,
                    tag("topology.ball-identity-eps-" + std::to_string(eps), dim, 0));

            std::vector<PureState> probes;
            for (int i = 0; i < 3; ++i)
                probes.push_back(PureState::random(dim, derive_seed(s, "probe", i)));
            const MembershipReport inclusion = inclusion_check(center, probes, eps, samples, s);
            c.check(inclusion.checked > 0 && inclusion.violations.empty(),
                    tag("topology.ball-inclusion-eps-" + std::to_string(eps), dim, 0));
        }
    }

    // Hausdorff separation via the h_{P1} window construction.
    const int pairs = opt.trials > 0 ? opt.trials : 100;
    const int sep_dim = opt.dim > 0 ? opt.dim : 4;
    for (int t = 0; t < pairs; ++t) {
        const std::uint64_t s = derive_seed(opt.seed, "topology-sep", t);
        const PureState p1 = PureState::random(sep_dim, derive_seed(s, "p1"));
        const PureState p2 = PureState::random(sep_dim, derive_seed(s, "p2"));
        if (p1 == p2) continue;
        const auto [u1, u2] = separate(p1, p2);
        bool ok = in_weak_nbhd(p1, u1) && in_weak_nbhd(p2, u2);
        for (int i = 0; i < 50 && ok; ++i) {
            const PureState probe = PureState::random(sep_dim, derive_seed(s, "sample", i));
            ok = !(in_weak_nbhd(probe, u1) && in_weak_nbhd(probe, u2));
        }
        c.check(ok, tag("topology.separation", sep_dim, t));
    }

    // Countable base: sampled membership and the covering echo with
    // provable U_klm ⊆ U margins, improving monotonically with resolution.
    {
        const std::uint64_t s = derive_seed(opt.seed, "topology-base");
        const std::vector<BaseSetIndex> base = sample_base(2, 50, 20, 5, s);
        c.check(base.size() == 50u * 21u * 5u, "topology.base-count");
        bool covered_all = true;
        for (int i = 0; i < 50; ++i) {
            const PureState p = PureState::random(2, derive_seed(s, "member", i));
            bool covered = false;
            for (const BaseSetIndex& idx : base) covered = covered || in_base_set(p, idx);
            covered_all = covered_all && covered;
        }
        c.check(covered_all, "topology.base-membership");

        const int coarse = run_base_covering(opt.seed, 200, 50, 50);
        const int fine = run_base_covering(opt.seed, 400, 50, 100);
        c.check(fine <= coarse, "topology.base-covering-monotone");
    }
}

// ------------------------------------------------------------ convergence

void run_convergence(Checker& c, const VerifyOptions& opt) {
    // Orthonormal counterexample.
    {
        const int dim = 64;
        const std::uint64_t s = derive_seed(opt.seed, "convergence-ortho");
        const StateSequence seq = orthonormal_counterexample(dim, dim, s);

        bool unit_steps = true;
        for (int i = 0; i + 1 < seq.length(); ++i)
            unit_steps = unit_steps &&
                         std::abs(rho_n(seq.states[static_cast<std::size_t>(i)],
                                        seq.states[static_cast<std::size_t>(i + 1)]) -
                                  1.0) <= 1e-10;
        c.check(unit_steps, "convergence.counterexample-unit-distance");

        std::vector<PureState> probes;
        std::vector<UnitVector> probe_vectors;
        for (int i = 0; i < 32; ++i)
            probes.push_back(PureState::random(dim, derive_seed(s, "probe", i)));
        for (int i = 0; i < 8; ++i)
            probe_vectors.push_back(random_unit(dim, derive_seed(s, "vector-probe", i)));

        bool bessel = true;
        for (const PureState& q : probes) {
            double sum = 0.0;
            for (const PureState& p : seq.states) sum += transition_probability(p, q);
            bessel = bessel && sum <= 1.0 + 1e-9;
        }
        c.check(bessel, "convergence.counterexample-bessel");

        const ConvergenceReport report = analyze(seq, probes, probe_vectors, 0.05, 16);
        c.check(report.weak.cauchy, "convergence.counterexample-weak-cauchy");
        c.check(!report.norm.cauchy, "convergence.counterexample-norm-not-cauchy");
        c.check(!report.limit_candidate.has_value(),
                "convergence.counterexample-no-limit-candidate");

        bool thrown = false;
        try {
            completeness_check(seq, 1e-2);
        } catch (const NotCauchy&) {
            thrown = true;
        }
        c.check(thrown, "convergence.counterexample-not-cauchy");
    }

    // The 1/k sequence converges in all four topologies.
    {
        const std::uint64_t s = derive_seed(opt.seed, "convergence-1k");
        std::vector<PureState> states;
        const int length = 1000;
        for (int k = 1; k <= length; ++k)
            states.emplace_back(
                normalize(StateVector({cplx{1.0, 0.0}, cplx{1.0 / k, 0.0}})));
        const StateSequence seq(2, std::move(states), "one-over-k");

        std::vector<PureState> probes;
        std::vector<UnitVector> probe_vectors;
        for (int i = 0; i < 8; ++i) {
            probes.push_back(PureState::random(2, derive_seed(s, "probe", i)));
            probe_vectors.push_back(random_unit(2, derive_seed(s, "vector-probe", i)));
        }
        const ConvergenceReport report = analyze(seq, probes, probe_vectors, 1e-3, 16);
        for (TopologyKind k :
             {TopologyKind::weak, TopologyKind::strong, TopologyKind::norm, TopologyKind::trace}) {
            c.check(report.verdict(k).converges,
                    std::string("convergence.one-over-k-converges-") + topology_name(k));
            c.check(report.verdict(k).cauchy,
                    std::string("convergence.one-over-k-cauchy-") + topology_name(k));
        }
        c.check(report.limit_candidate.has_value(), "convergence.one-over-k-limit-present");

        const CompletenessResult completeness = completeness_check(seq, 1e-2);
        c.check(completeness.is_pure, "convergence.one-over-k-is-pure");
        const HermitianMatrix target = materialize(PureState::basis(2, 0));
        c.check(operator_norm(dense_spectrum(completeness.limit - target)) <= 2e-3,
                "convergence.one-over-k-limit-matches");
    }

    // Verdict ordering and the pointwise weak-vs-norm bound on random
    // sequences of states drifting toward a target.
    {
        const int dim = opt.dim > 0 ? opt.dim : 4;
        const int trials = opt.trials > 0 ? std::min(opt.trials, 20) : 10;
        for (int t = 0; t < trials; ++t) {
            const std::uint64_t s = derive_seed(opt.seed, "convergence-order", t);
            std::vector<PureState> states;
            const UnitVector target = random_unit(dim, derive_seed(s, "target"));
            const UnitVector start = random_unit(dim, derive_seed(s, "start"));
            const int length = 40;
            for (int i = 0; i < length; ++i) {
                const double w = static_cast<double>(i) / (length - 1);
                StateVector mix =
                    (cplx{1.0 - w, 0.0} * start.vec()) + (cplx{w, 0.0} * target.vec());
                if (norm(mix) < 1e-8) mix = target.vec();
                states.emplace_back(normalize(mix));
            }
            const StateSequence seq(dim, std::move(states), "drift");
            std::vector<PureState> probes;
            std::vector<UnitVector> probe_vectors;
            for (int i = 0; i < 8; ++i) {
                probes.push_back(PureState::random(dim, derive_seed(s, "probe", i)));
                probe_vectors.push_back(random_unit(dim, derive_seed(s, "vector-probe", i)));
            }
            const ConvergenceReport report = analyze(seq, probes, probe_vectors, 0.2, 8);

            const bool chain_converges =
                (!report.norm.converges || report.strong.converges) &&
                (!report.strong.converges || report.weak.converges);
            const bool chain_cauchy = (!report.norm.cauchy || report.strong.cauchy) &&
                                      (!report.strong.cauchy || report.weak.cauchy);
            c.check(chain_converges && chain_cauchy, tag("convergence.ordering", dim, t));
            c.check(report.trace.converges == report.norm.converges &&
                        report.trace.cauchy == report.norm.cauchy,
                    tag("convergence.trace-verdict-equals-norm", dim, t));

            bool pointwise = true;
            const PureState& limit = seq.states.back();
            for (const PureState& p : seq.states) {
                const double bound = rho_n(p, limit) + 1e-12;
                for (const PureState& q : probes)
                    pointwise = pointwise &&
                                std::abs(transition_probability(p, q) -
                                         transition_probability(limit, q)) <= bound;
            }
            c.check(pointwise, tag("convergence.weak-bounded-by-norm", dim, t));
        }
    }
}

// ------------------------------------------------------------------ sigma

void run_sigma(Checker& c, const VerifyOptions& opt) {
    const int universes = opt.trials > 0 ? opt.trials : 10;
    const int grid = opt.grid > 1 ? opt.grid : 10;
    const int dim = opt.dim > 0 ? opt.dim : 4;
    const int points = 20;

    std::vector<double> radii, thresholds;
    for (int k = 1; k <= grid; ++k) radii.push_back(static_cast<double>(k) / grid);
    for (int l = 0; l <= grid; ++l) thresholds.push_back(static_cast<double>(l) / grid);

    for (int u = 0; u < universes; ++u) {
        const std::uint64_t s = derive_seed(opt.seed, "sigma", u);
        const FiniteUniverse universe = FiniteUniverse::random(dim, points, s);

        const GeneratorFamily xi = ball_generators(universe, universe.points, radii);
        GeneratorFamily sigma;
        for (int m = 2; m <= grid; ++m)
            sigma = merge(std::move(sigma), h_generators(universe, universe.points, thresholds, m));

        const MisraResult matched = misra_check(universe, xi, sigma);
        c.check(matched.equal, tag("sigma.matched-grids-equal", dim, u));

        // Impoverished Σ side: only the coarsest window. The verdict may
        // degrade only toward the provable Σ ⊆ Ξ direction.
        const GeneratorFamily poor = h_generators(universe, universe.points, thresholds, 2);
        const MisraResult impoverished = misra_check(universe, xi, poor);
        c.check(impoverished.refinement == RefinementVerdict::equal ||
                    impoverished.refinement == RefinementVerdict::sigma_coarser,
                tag("sigma.impoverished-direction", dim, u));

        // Generator order and duplication never change the atoms.
        GeneratorFamily shuffled = xi;
        Rng rng(derive_seed(s, "shuffle"));
        for (std::size_t i = shuffled.sets.size(); i > 1; --i)
            std::swap(shuffled.sets[i - 1], shuffled.sets[rng.below(i)]);
        shuffled.sets.push_back(shuffled.sets.front());  // duplicate one
        c.check(atoms(universe, shuffled) == matched.xi_atoms,
                tag("sigma.order-invariance", dim, u));

        // Adding generators only refines.
        GeneratorFamily half = xi;
        half.sets.resize(half.sets.size() / 2);
        c.check(refines(matched.xi_atoms, atoms(universe, half)),
                tag("sigma.refinement-monotone", dim, u));

        // h-separation echo: at matched resolution the h-generators alone
        // already split every pair of distinct rays into singleton atoms.
        c.check(static_cast<int>(matched.sigma_atoms.blocks.size()) == universe.size(),
                tag("sigma.h-separation-singletons", dim, u));
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"metrics", "topology", "convergence", "sigma", "all"};
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
    Checker checker;
    checker.result.suite = name;
    if (name == "metrics") {
        run_metrics(checker, options);
    } else if (name == "topology") {
        run_topology(checker, options);
    } else if (name == "convergence") {
        run_convergence(checker, options);
    } else if (name == "sigma") {
        run_sigma(checker, options);
    } else if (name == "all") {
        run_metrics(checker, options);
        run_topology(checker, options);
        run_convergence(checker, options);
        run_sigma(checker, options);
    } else {
        throw InvalidArgument("unknown suite: " + name);
    }
    return checker.result;
}

}  // namespace phs
