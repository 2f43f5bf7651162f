#include "quiso/representation.hpp"

#include <algorithm>
#include <random>

namespace quiso {

CMatrix star(const CMatrix& m, StarMode mode) {
    if (mode == StarMode::ConjugateTranspose) {
        return m.adjoint();
    }
    return m.transpose();
}

Eigen::Index MatrixRepresentation::total_dim() const {
    Eigen::Index sum = 0;
    for (Eigen::Index d : dims) sum += d;
    return sum;
}

void validate_representation(const MatrixRepresentation& rep, FieldMode field) {
    if (std::ssize(rep.dims) != rep.quiver.vertex_count()) {
        throw ValidationError("dimension vector has " +
                              std::to_string(rep.dims.size()) +
                              " entries for a quiver with " +
                              std::to_string(rep.quiver.vertex_count()) +
                              " vertices");
    }
    for (Eigen::Index d : rep.dims) {
        if (d < 0) throw ValidationError("negative dimension");
    }
    for (const Arrow& a : rep.quiver.arrows()) {
        auto it = rep.matrices.find(a.name);
        if (it == rep.matrices.end()) {
            throw ValidationError("missing matrix for arrow '" + a.name + "'");
        }
        const CMatrix& m = it->second;
        if (m.rows() != rep.dim(a.tgt) || m.cols() != rep.dim(a.src)) {
            throw ValidationError(
                "matrix for arrow '" + a.name + "' has shape " +
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                ", expected " + std::to_string(rep.dim(a.tgt)) + "x" +
                std::to_string(rep.dim(a.src)));
        }
        if (field == FieldMode::Real) {
            if ((m.imag().array() != 0.0).any()) {
                throw ValidationError("matrix for arrow '" + a.name +
                                      "' has a nonzero imaginary part in real "
                                      "mode");
            }
        }
    }
    for (const auto& [name, m] : rep.matrices) {
        if (!rep.quiver.has_arrow(name)) {
            throw ValidationError("matrix for unknown arrow '" + name + "'");
        }
    }
}

bool is_real(const MatrixRepresentation& rep) {
    for (const auto& [name, m] : rep.matrices) {
        if (m.size() > 0 && (m.imag().array() != 0.0).any()) return false;
    }
    return true;
}

MatrixRepresentation extend_to_double(const MatrixRepresentation& rep,
                                      StarMode mode) {
    DoubledQuiver dq(rep.quiver);
    MatrixRepresentation out{dq.quiver(), rep.dims, rep.matrices};
    for (const auto& [name, m] : rep.matrices) {
        out.matrices[DoubledQuiver::star_name(name)] = star(m, mode);
    }
    return out;
}

MatrixRepresentation transform(const MatrixRepresentation& rep,
                               const IsometryFamily& fam) {
    if (std::ssize(fam.units) != rep.quiver.vertex_count()) {
        throw ValidationError("isometry family has " +
                              std::to_string(fam.units.size()) +
                              " matrices for " +
                              std::to_string(rep.quiver.vertex_count()) +
                              " vertices");
    }
    for (int v = 1; v <= rep.quiver.vertex_count(); ++v) {
        const CMatrix& u = fam.units[static_cast<std::size_t>(v - 1)];
        const Eigen::Index n = rep.dim(v);
        if (u.rows() != n || u.cols() != n) {
            throw ValidationError("isometry at vertex " + std::to_string(v) +
                                  " has the wrong size");
        }
        const double defect =
            (star(u, fam.mode) * u - CMatrix::Identity(n, n)).norm();
        if (defect > kUnitarityRelTol * static_cast<double>(std::max<Eigen::Index>(n, 1))) {
            throw ValidationError("matrix at vertex " + std::to_string(v) +
                                  " is not unitary for the requested star mode");
        }
    }
    MatrixRepresentation out{rep.quiver, rep.dims, {}};
    for (const Arrow& a : rep.quiver.arrows()) {
        const CMatrix& uv = fam.units[static_cast<std::size_t>(a.tgt - 1)];
        const CMatrix& uu = fam.units[static_cast<std::size_t>(a.src - 1)];
        out.matrices[a.name] = star(uv, fam.mode) * rep.matrices.at(a.name) * uu;
    }
    return out;
}

namespace {

CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                        std::mt19937_64& gen, FieldMode field) {
    std::normal_distribution<double> dist(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const double re = dist(gen);
            const double im = field == FieldMode::Complex ? dist(gen) : 0.0;
            m(i, j) = Complex(re, im);
        }
    }
    return m;
}

// Q from a QR factorization with the phases of diag(R) pushed into Q, so the
// distribution is Haar for complex Gaussian input and uniform over O(n) for
// real Gaussian input.
CMatrix orthonormalized(const CMatrix& g) {
    const Eigen::Index n = g.rows();
    if (n == 0) return CMatrix(0, 0);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    CMatrix r = qr.matrixQR().template triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        q.col(i) *= mag > 0 ? d / mag : Complex(1, 0);
    }
    return q;
}

// (I - S)(I + S)^{-1} for skew-symmetric S is complex orthogonal.
CMatrix cayley_orthogonal(Eigen::Index n, std::mt19937_64& gen) {
    if (n == 0) return CMatrix(0, 0);
    constexpr int kMaxRetries = 64;
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const CMatrix g = gaussian_matrix(n, n, gen, FieldMode::Complex);
        const CMatrix s = 0.5 * (g - g.transpose()).eval();
        const CMatrix ip_s = CMatrix::Identity(n, n) + s;
        Eigen::FullPivLU<CMatrix> lu(ip_s);
        if (!lu.isInvertible()) continue;
        CMatrix u = (CMatrix::Identity(n, n) - s) * lu.inverse();
        const double defect =
            (u.transpose() * u - CMatrix::Identity(n, n)).norm();
        if (defect <= 1e-10 * static_cast<double>(n)) return u;
    }
    throw Error("Cayley sampling failed repeatedly (pathological seed)");
}

} // namespace

MatrixRepresentation random_representation(const Quiver& q,
                                           const DimensionVector& dims,
                                           std::uint64_t seed, FieldMode field) {
    if (std::ssize(dims) != q.vertex_count()) {
        throw ValidationError("dimension vector length does not match quiver");
    }
    std::mt19937_64 gen(seed);
    MatrixRepresentation rep{q, dims, {}};
    // Fill in name-sorted order so the result does not depend on the order
    // the arrows were declared in.
    std::vector<Arrow> arrows = q.arrows();
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
    for (const Arrow& a : arrows) {
        rep.matrices[a.name] = gaussian_matrix(
            rep.dim(a.tgt), rep.dim(a.src), gen, field);
    }
    return rep;
}

IsometryFamily random_isometry_family(const DimensionVector& dims,
                                      std::uint64_t seed, StarMode mode,
                                      FieldMode field) {
    std::mt19937_64 gen(seed);
    IsometryFamily fam;
    fam.mode = mode;
    for (Eigen::Index n : dims) {
        if (field == FieldMode::Real) {
            fam.units.push_back(
                orthonormalized(gaussian_matrix(n, n, gen, FieldMode::Real)));
        } else if (mode == StarMode::ConjugateTranspose) {
            fam.units.push_back(
                orthonormalized(gaussian_matrix(n, n, gen, FieldMode::Complex)));
        } else {
            fam.units.push_back(cayley_orthogonal(n, gen));
        }
    }
    return fam;
}

MatrixRepresentation perturb(const MatrixRepresentation& rep, double epsilon,
                             std::uint64_t seed) {
    if (rep.quiver.arrows().empty()) {
        throw ValidationError("cannot perturb a representation with no arrows");
    }
    std::mt19937_64 gen(seed);
    std::vector<Arrow> arrows = rep.quiver.arrows();
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
    std::uniform_int_distribution<std::size_t> pick(0, arrows.size() - 1);
    const Arrow& chosen = arrows[pick(gen)];
    const FieldMode noise_field =
        is_real(rep) ? FieldMode::Real : FieldMode::Complex;
    MatrixRepresentation out = rep;
    CMatrix& m = out.matrices.at(chosen.name);
    m += epsilon * gaussian_matrix(m.rows(), m.cols(), gen, noise_field);
    return out;
}

double spectral_norm(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(m);
    return svd.singularValues()(0);
}

} // namespace quiso
