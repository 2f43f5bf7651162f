#include "quiso/decision.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace quiso {

long long phi(BoundFunction b, long long n) {
    if (n <= 1) return 1;
    switch (b) {
        case BoundFunction::Pearcy:
            return 2 * n * n;
        case BoundFunction::NSquared:
            return n * n;
        case BoundFunction::Laffey:
            return (2 * n * n + 4 + 2) / 3; // ceil((2n^2+4)/3)
        case BoundFunction::Pappacena: {
            const double nd = static_cast<double>(n);
            const double val =
                -2.0 + nd / 2.0 +
                nd * std::sqrt(2.0 * nd * nd / (nd - 1.0) + 0.25);
            return static_cast<long long>(std::ceil(val));
        }
    }
    return 1;
}

long long cycle_length_bound(const Quiver& q, const DimensionVector& dims,
                             BoundFunction b) {
    if (std::ssize(dims) != q.vertex_count()) {
        throw ValidationError("dimension vector length does not match quiver");
    }
    long long total = 0;
    for (Eigen::Index d : dims) total += d;
    return phi(b, (min_r(q) + 2) * total);
}

TraceSignature compute_signature(const MatrixRepresentation& rep, StarMode mode,
                                 int max_len, std::uint64_t budget) {
    DoubledQuiver dq(rep.quiver);
    return compute_signature(rep, mode, max_len,
                             enumerate_cycles(dq.quiver(), max_len, budget));
}

TraceSignature compute_signature(const MatrixRepresentation& rep, StarMode mode,
                                 int max_len,
                                 const std::vector<OrientedCycle>& cycles) {
    validate_representation(rep);
    const MatrixRepresentation doubled = extend_to_double(rep, mode);

    // Spectral norms are computed once per arrow matrix; a starred arrow has
    // the same singular values as its base.
    std::unordered_map<std::string, double> norms;
    for (const auto& [name, m] : rep.matrices) {
        const double s = spectral_norm(m);
        norms[name] = s;
        norms[DoubledQuiver::star_name(name)] = s;
    }

    TraceSignature sig;
    sig.mode = mode;
    sig.max_len = max_len;
    sig.cycles = cycles;
    sig.values.reserve(cycles.size());
    sig.scales.reserve(cycles.size());
    for (const OrientedCycle& c : cycles) {
        sig.values.push_back(cycle_trace(doubled, c));
        double scale = 1.0;
        for (const std::string& a : c.arrows()) scale *= norms.at(a);
        sig.scales.push_back(scale);
    }
    return sig;
}

IsometryVerdict compare_signatures(const TraceSignature& a,
                                   const TraceSignature& b, double rtol,
                                   double atol) {
    if (a.mode != b.mode || a.max_len != b.max_len ||
        a.cycles != b.cycles) {
        throw ValidationError("signatures are not comparable (different star "
                              "mode, length, or cycle set)");
    }
    IsometryVerdict v;
    v.max_len = a.max_len;
    for (std::size_t i = 0; i < a.cycles.size(); ++i) {
        const double tol =
            atol + rtol * std::max({1.0, a.scales[i], b.scales[i]});
        if (std::abs(a.values[i] - b.values[i]) > tol) {
            v.agree = false;
            v.witness = Witness{a.cycles[i], a.values[i], b.values[i]};
            return v;
        }
    }
    v.agree = true;
    return v;
}

IsometryVerdict decide_isometry(const MatrixRepresentation& a,
                                const MatrixRepresentation& b,
                                const DecideOptions& opts) {
    if (!same_quiver(a.quiver, b.quiver)) {
        throw ValidationError("representations live over different quivers");
    }
    if (a.dims != b.dims) {
        for (int v = 1; v <= a.quiver.vertex_count(); ++v) {
            if (a.dim(v) != b.dim(v)) {
                throw ValidationError("dimension mismatch at vertex " +
                                      std::to_string(v));
            }
        }
        throw ValidationError("dimension vectors differ in length");
    }
    validate_representation(a);
    validate_representation(b);

    const long long bound = cycle_length_bound(a.quiver, a.dims, opts.bound);
    long long len = opts.max_len ? *opts.max_len : bound;
    if (len < 1) {
        throw ValidationError("max_len must be at least 1");
    }

    DoubledQuiver dq(a.quiver);
    const std::vector<OrientedCycle> cycles =
        enumerate_cycles(dq.quiver(), static_cast<int>(len), opts.budget);

    const TraceSignature sa =
        compute_signature(a, opts.mode, static_cast<int>(len), cycles);
    const TraceSignature sb =
        compute_signature(b, opts.mode, static_cast<int>(len), cycles);
    IsometryVerdict v = compare_signatures(sa, sb, opts.rtol, opts.atol);
    v.certified = v.agree && len >= bound &&
                  (opts.mode == StarMode::ConjugateTranspose ||
                   opts.certify_transpose);
    return v;
}

} // namespace quiso
