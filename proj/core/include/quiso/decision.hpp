#ifndef QUISO_DECISION_HPP
#define QUISO_DECISION_HPP

#include <optional>

#include "quiso/cycles.hpp"

namespace quiso {

/// Sufficient word-length bounds for trace-based unitary similarity checks.
enum class BoundFunction { Pearcy, Laffey, Pappacena, NSquared };

/// Pearcy: 2n^2. NSquared: n^2. Laffey: ceil((2n^2+4)/3).
/// Pappacena: ceil(-2 + n/2 + n*sqrt(2n^2/(n-1) + 1/4)).
/// Returns 1 for n <= 1.
long long phi(BoundFunction b, long long n);

/// phi(b, (r+2)(d_1+...+d_t)) with r determined by the multiplicities.
long long cycle_length_bound(const Quiver& q, const DimensionVector& dims,
                             BoundFunction b);

/// Traces of all canonical cycles of the doubled quiver up to max_len,
/// plus a per-cycle scale (product of factor spectral norms) used for
/// tolerance scaling.
struct TraceSignature {
    StarMode mode = StarMode::ConjugateTranspose;
    int max_len = 0;
    std::vector<OrientedCycle> cycles; // shared enumeration order
    std::vector<Complex> values;
    std::vector<double> scales;
};

struct Witness {
    OrientedCycle cycle;
    Complex trace_a;
    Complex trace_b;
};

struct IsometryVerdict {
    bool agree = false;
    int max_len = 0;
    bool certified = false;
    std::optional<Witness> witness;
};

struct DecideOptions {
    StarMode mode = StarMode::ConjugateTranspose;
    /// Explicit cycle-length cap; when absent the certification bound is used.
    std::optional<int> max_len;
    BoundFunction bound = BoundFunction::NSquared;
    double rtol = 1e-9;
    double atol = 1e-12;
    std::uint64_t budget = kDefaultCycleBudget;
    /// Whether the word-length bounds are taken to certify in Transpose
    /// mode as well; off by default since the published bounds are stated
    /// for unitary similarity.
    bool certify_transpose = false;
};

TraceSignature compute_signature(const MatrixRepresentation& rep, StarMode mode,
                                 int max_len,
                                 std::uint64_t budget = kDefaultCycleBudget);

/// Same, over a cycle set enumerated once by the caller (for the doubled
/// quiver of rep).
TraceSignature compute_signature(const MatrixRepresentation& rep, StarMode mode,
                                 int max_len,
                                 const std::vector<OrientedCycle>& cycles);

/// First cycle (in enumeration order) whose traces differ by more than
/// atol + rtol * max(1, scale_a, scale_b) wins; otherwise agreement.
IsometryVerdict compare_signatures(const TraceSignature& a,
                                   const TraceSignature& b, double rtol,
                                   double atol);

IsometryVerdict decide_isometry(const MatrixRepresentation& a,
                                const MatrixRepresentation& b,
                                const DecideOptions& opts = {});

} // namespace quiso

#endif
