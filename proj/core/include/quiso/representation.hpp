#ifndef QUISO_REPRESENTATION_HPP
#define QUISO_REPRESENTATION_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "quiso/quiver.hpp"

namespace quiso {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using DimensionVector = std::vector<Eigen::Index>;

/// Which adjoint the inner product induces: conjugate transpose for complex
/// inner-product spaces, plain transpose for complex-bilinear (orthogonal)
/// spaces.
enum class StarMode { ConjugateTranspose, Transpose };

enum class FieldMode { Complex, Real };

CMatrix star(const CMatrix& m, StarMode mode);

/// One matrix of shape d_tgt x d_src per arrow, keyed by arrow name.
struct MatrixRepresentation {
    Quiver quiver;
    DimensionVector dims; // dims[v-1] is the dimension at vertex v
    std::map<std::string, CMatrix> matrices;

    Eigen::Index dim(int vertex) const { return dims[static_cast<std::size_t>(vertex - 1)]; }
    Eigen::Index total_dim() const;
};

void validate_representation(const MatrixRepresentation& rep,
                             FieldMode field = FieldMode::Complex);

bool is_real(const MatrixRepresentation& rep);

/// Representation of the doubled quiver: original arrows keep their
/// matrices, each starred arrow gets the adjoint of its base arrow.
MatrixRepresentation extend_to_double(const MatrixRepresentation& rep,
                                      StarMode mode);

/// One change-of-basis matrix per vertex, each required to satisfy
/// star(U) * U = I to tolerance.
struct IsometryFamily {
    std::vector<CMatrix> units; // units[v-1] is d_v x d_v
    StarMode mode = StarMode::ConjugateTranspose;
};

/// Acceptance tolerance for user-supplied families: ||U#U - I||_F <= tol * n.
inline constexpr double kUnitarityRelTol = 1e-8;

/// B_a = star(U_v) * A_a * U_u for each arrow a: u -> v.
MatrixRepresentation transform(const MatrixRepresentation& rep,
                               const IsometryFamily& fam);

/// i.i.d. standard Gaussian entries; deterministic for a fixed seed.
MatrixRepresentation random_representation(const Quiver& q,
                                           const DimensionVector& dims,
                                           std::uint64_t seed,
                                           FieldMode field = FieldMode::Complex);

/// Haar unitaries (ConjugateTranspose + Complex), complex orthogonal
/// matrices via the Cayley transform of a random skew-symmetric matrix
/// (Transpose + Complex), or real orthogonal matrices (any mode + Real).
IsometryFamily random_isometry_family(const DimensionVector& dims,
                                      std::uint64_t seed, StarMode mode,
                                      FieldMode field = FieldMode::Complex);

/// Adds epsilon-scaled Gaussian noise to one uniformly chosen arrow matrix.
/// If the input is entirely real, the noise is real.
MatrixRepresentation perturb(const MatrixRepresentation& rep, double epsilon,
                             std::uint64_t seed);

/// Largest singular value; 0 for an empty matrix.
double spectral_norm(const CMatrix& m);

} // namespace quiso

#endif
