#ifndef QUISO_COROLLARIES_HPP
#define QUISO_COROLLARIES_HPP

#include "quiso/decision.hpp"

namespace quiso {

/// The classical tuple problems realized as quiver problems.
enum class TupleKind {
    Similarity,      // one common basis, square matrices
    Equivalence,     // two bases, rectangular matrices of one shape
    StarEquivalence, // one common left basis, independent right bases
    BlockSimilarity  // block-diagonal change of basis on a partitioned matrix
};

struct QuiverProblem {
    Quiver quiver;
    MatrixRepresentation a;
    MatrixRepresentation b;
};

/// k loops on a single vertex; matrices must be square of one size.
QuiverProblem similarity_problem(const std::vector<CMatrix>& as,
                                 const std::vector<CMatrix>& bs);

/// Two vertices with k parallel arrows; matrices must share one m x n shape.
QuiverProblem equivalence_problem(const std::vector<CMatrix>& as,
                                  const std::vector<CMatrix>& bs);

/// Hub plus k leaves; matrices must share the row count m, columns may vary.
QuiverProblem star_equivalence_problem(const std::vector<CMatrix>& as,
                                       const std::vector<CMatrix>& bs);

/// Complete quiver on t vertices; a and b are conformally partitioned square
/// matrices whose diagonal blocks have the given sizes.
QuiverProblem block_similarity_problem(const CMatrix& a, const CMatrix& b,
                                       const DimensionVector& block_sizes);

IsometryVerdict specht_check(const CMatrix& a, const CMatrix& b,
                             const DecideOptions& opts = {});

IsometryVerdict wiegmann_check(const std::vector<CMatrix>& as,
                               const std::vector<CMatrix>& bs,
                               const DecideOptions& opts = {});

IsometryVerdict jing_check(const std::vector<CMatrix>& as,
                           const std::vector<CMatrix>& bs,
                           const DecideOptions& opts = {});

IsometryVerdict star_check(const std::vector<CMatrix>& as,
                           const std::vector<CMatrix>& bs,
                           const DecideOptions& opts = {});

IsometryVerdict block_check(const CMatrix& a, const CMatrix& b,
                            const DimensionVector& block_sizes,
                            const DecideOptions& opts = {});

} // namespace quiso

#endif
