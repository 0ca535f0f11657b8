#include "phs/convergence.hpp"

#include <cmath>

#include "phs/errors.hpp"

namespace phs {

StateSequence::StateSequence(int dim_, std::vector<PureState> states_, std::string label_)
    : dim(dim_), states(std::move(states_)), label(std::move(label_)) {
    if (states.size() < 2) throw InvalidArgument("state sequence needs length >= 2");
    for (const PureState& p : states)
        if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
}

const char* topology_name(TopologyKind k) {
    switch (k) {
        case TopologyKind::weak: return "weak";
        case TopologyKind::strong: return "strong";
        case TopologyKind::norm: return "norm";
        case TopologyKind::trace: return "trace";
    }
    return "?";
}

const TopologyVerdict& ConvergenceReport::verdict(TopologyKind k) const {
    switch (k) {
        case TopologyKind::weak: return weak;
        case TopologyKind::strong: return strong;
        case TopologyKind::norm: return norm;
        case TopologyKind::trace: return trace;
    }
    return norm;
}

namespace {

StateVector apply_projector(const UnitVector& phi, const StateVector& psi) {
    return inner(phi.vec(), psi) * phi.vec();
}

double weak_step(const PureState& a, const PureState& b, const std::vector<PureState>& probes) {
    double acc = 0.0;
    for (const PureState& q : probes)
        acc += std::abs(transition_probability(a, q) - transition_probability(b, q));
    return acc / static_cast<double>(probes.size());
}

double strong_step(const PureState& a, const PureState& b,
                   const std::vector<UnitVector>& probe_vectors) {
    double acc = 0.0;
    for (const UnitVector& psi : probe_vectors)
        acc += norm(apply_projector(a.vec(), psi.vec()) - apply_projector(b.vec(), psi.vec()));
    return acc / static_cast<double>(probe_vectors.size());
}

double least_squares_slope(const std::vector<double>& y) {
    const int n = static_cast<int>(y.size());
    if (n < 2) return 0.0;
    const double xbar = (n - 1) / 2.0;
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= n;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += (i - xbar) * (y[static_cast<std::size_t>(i)] - ybar);
        den += (i - xbar) * (i - xbar);
    }
    return num / den;
}

TopologyVerdict make_verdict(std::vector<double> residual_tail,
                             std::vector<double> cauchy_tail, double tol, int tail) {
    TopologyVerdict v;
    v.tol = tol;
    v.residual_tail = std::move(residual_tail);
    v.cauchy_residual_tail = std::move(cauchy_tail);

    bool stays_below = true;
    for (double r : v.residual_tail) stays_below = stays_below && r < tol;
    v.cauchy = true;
    for (double r : v.cauchy_residual_tail) v.cauchy = v.cauchy && r < tol;
    const bool trend_ok = least_squares_slope(v.residual_tail) <= tol / tail;
    v.converges = stays_below && trend_ok && v.cauchy;
    return v;
}

}  // namespace

ConvergenceReport analyze(const StateSequence& seq, const std::vector<PureState>& probes,
                          const std::vector<UnitVector>& probe_vectors, double tol, int tail) {
    if (probes.empty() || probe_vectors.empty()) throw EmptyProbes();
    if (tail < 1) throw InvalidArgument("tail must be >= 1");
    if (tail >= seq.length()) throw TailTooLong(tail, seq.length());
    if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");

    const int last = seq.length() - 1;
    const int first = last - tail;
    const PureState& limit = seq.states[static_cast<std::size_t>(last)];

    std::vector<double> weak_r, strong_r, norm_r, weak_c, strong_c, norm_c;
    for (int i = first; i < last; ++i) {
        const PureState& a = seq.states[static_cast<std::size_t>(i)];
        const PureState& b = seq.states[static_cast<std::size_t>(i + 1)];
        weak_r.push_back(weak_step(a, limit, probes));
        strong_r.push_back(strong_step(a, limit, probe_vectors));
        norm_r.push_back(rho_n(a, limit));
        weak_c.push_back(weak_step(a, b, probes));
        strong_c.push_back(strong_step(a, b, probe_vectors));
        norm_c.push_back(rho_n(a, b));
    }

    ConvergenceReport report;
    report.label = seq.label;
    report.dim = seq.dim;
    report.length = seq.length();
    report.tail = tail;
    report.tol = tol;
    report.probe_description = std::to_string(probes.size()) + " state probes, " +
                               std::to_string(probe_vectors.size()) + " vector probes";

    report.weak = make_verdict(weak_r, weak_c, tol, tail);
    report.strong = make_verdict(strong_r, strong_c, tol, tail);
    report.norm = make_verdict(norm_r, norm_c, tol, tail);
    std::vector<double> trace_r(norm_r), trace_c(norm_c);
    for (double& r : trace_r) r *= 2.0;
    for (double& r : trace_c) r *= 2.0;
    report.trace = make_verdict(std::move(trace_r), std::move(trace_c), 2.0 * tol, tail);

    // Verdict consistency along T_w ⊆ T_s ⊆ T_n. Residuals already satisfy
    // the pointwise inequalities; only the trend term can disagree.
    report.strong.converges = report.strong.converges || report.norm.converges;
    report.weak.converges = report.weak.converges || report.strong.converges;
    report.strong.cauchy = report.strong.cauchy || report.norm.cauchy;
    report.weak.cauchy = report.weak.cauchy || report.strong.cauchy;

    if (report.norm.cauchy) report.limit_candidate = limit;
    return report;
}

StateSequence orthonormal_counterexample(int dim, int length, std::uint64_t seed) {
    if (dim < 1 || length < 2) throw InvalidArgument("need dim >= 1 and length >= 2");
    if (length > dim) throw LengthExceedsDim(length, dim);
    std::vector<UnitVector> system = orthonormal_system(dim, length, seed);
    std::vector<PureState> states;
    states.reserve(system.size());
    for (UnitVector& u : system) states.emplace_back(std::move(u));
    return StateSequence(dim, std::move(states), "orthonormal-counterexample");
}

CompletenessResult completeness_check(const StateSequence& seq, double tol) {
    if (!(tol > 0.0)) throw InvalidArgument("tol must be > 0");
    const int last = seq.length() - 1;
    const int tail = std::min(kCompletenessTail, last);
    const int first = last - tail;

    for (int i = first; i < last; ++i) {
        const double step = rho_tr(seq.states[static_cast<std::size_t>(i)],
                                   seq.states[static_cast<std::size_t>(i + 1)]);
        if (!(step < tol))
            throw NotCauchy("consecutive rho_tr " + std::to_string(step) +
                            " violates the Cauchy tolerance " + std::to_string(tol));
    }

    HermitianMatrix acc = materialize(seq.states[static_cast<std::size_t>(first)]);
    for (int i = first + 1; i <= last; ++i)
        acc = acc + materialize(seq.states[static_cast<std::size_t>(i)]);
    HermitianMatrix limit = (1.0 / static_cast<double>(tail + 1)) * acc;

    const double idem = operator_norm(dense_spectrum(limit.square() - limit));
    const double trace_residual = std::abs(limit.trace() - 1.0);
    return {limit, idem, trace_residual, idem < tol && trace_residual < tol};
}

}  // namespace phs
