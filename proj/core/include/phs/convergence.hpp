#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phs/hermitian.hpp"
#include "phs/projector.hpp"

namespace phs {

/// Ordered finite sequence of pure states sharing one dimension.
struct StateSequence {
    StateSequence(int dim, std::vector<PureState> states, std::string label);

    int dim;
    std::vector<PureState> states;
    std::string label;

    int length() const { return static_cast<int>(states.size()); }
};

enum class TopologyKind { weak, strong, norm, trace };

const char* topology_name(TopologyKind k);

/// Verdict for one topology. Residuals are measured over the tail window
/// against the final element (limit candidate) and between consecutive
/// elements. For the weak and strong topologies a step residual averages the
/// per-probe deviations; the metric topologies use rho_n and rho_tr directly.
struct TopologyVerdict {
    bool converges = false;
    bool cauchy = false;
    double tol = 0.0;                         // threshold applied to this topology
    std::vector<double> residual_tail;        // vs limit candidate
    std::vector<double> cauchy_residual_tail; // consecutive pairs
};

/// Per-topology verdicts plus the shared diagnostics. Verdict consistency is
/// enforced: trace ≡ norm (equivalent metrics), norm ⇒ strong ⇒ weak for both
/// flags, and converges additionally requires cauchy. The limit candidate
/// (the final element) is emitted only when the norm verdict is Cauchy.
struct ConvergenceReport {
    std::string label;
    int dim = 0;
    int length = 0;
    int tail = 0;
    double tol = 0.0;
    std::string probe_description;
    TopologyVerdict weak;
    TopologyVerdict strong;
    TopologyVerdict norm;
    TopologyVerdict trace;
    std::optional<PureState> limit_candidate;

    const TopologyVerdict& verdict(TopologyKind k) const;
};

/// Classify a sequence per topology.
///
/// converges: tail residuals against the final element stay < tol, their
/// least-squares trend slope is <= tol/tail, and the cauchy verdict holds.
/// cauchy: consecutive-pair residuals over the tail stay < tol. The trace
/// topology is evaluated on rho_tr residuals against threshold 2*tol, which
/// makes its verdict identical to the norm verdict.
ConvergenceReport analyze(const StateSequence& seq, const std::vector<PureState>& probes,
                          const std::vector<UnitVector>& probe_vectors, double tol, int tail);

/// Projectors onto an orthonormal system: weak probe residuals decay (Bessel)
/// while every consecutive pair sits at norm distance exactly 1. Throws
/// LengthExceedsDim when the truncation cannot hold the system.
StateSequence orthonormal_counterexample(int dim, int length, std::uint64_t seed);

struct CompletenessResult {
    HermitianMatrix limit;
    double idempotency_residual;  // ‖A² - A‖ (operator norm, oracle spectrum)
    double trace_residual;        // |tr A - 1|
    bool is_pure;
};

inline constexpr int kCompletenessTail = 16;

/// Completeness echo: for a rho_tr-Cauchy tail (window min(16, length-1)),
/// averages the materialized tail projectors into a candidate operator A and
/// reports how far A is from being a one-dimensional orthogonal projection.
/// Throws NotCauchy when a consecutive tail pair violates rho_tr < tol.
CompletenessResult completeness_check(const StateSequence& seq, double tol);

}  // namespace phs
