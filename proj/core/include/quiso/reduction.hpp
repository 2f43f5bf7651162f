#ifndef QUISO_REDUCTION_HPP
#define QUISO_REDUCTION_HPP

#include <nlohmann/json_fwd.hpp>

#include "quiso/decision.hpp"

namespace quiso {

/// The scalar-level block layout of the reduction matrix: an upper block
/// triangular (r+2)x(r+2) grid of t x t cells with increasing integers on
/// the main diagonal, identity cells on the superdiagonal, and the
/// parameter blocks X_1..X_{r(r+1)/2} in a staircase (block row k of 1..r
/// carries the next r+1-k parameter blocks).
struct ReductionTemplate {
    enum class BlockKind { Zero, Diag, Identity, Params };

    struct Block {
        BlockKind kind = BlockKind::Zero;
        int xi = 0; // parameter-block index, for Params only
    };

    /// Parameter cell inside X_xi: entry (i, j) names the xi-th arrow from
    /// j to i (parallel arrows ordered by name).
    struct ParamEntry {
        int i = 0;
        int j = 0;
        std::string arrow;
    };

    Quiver quiver;
    int r = 0;
    std::vector<std::vector<Block>> grid; // (r+2) x (r+2)
    std::vector<std::vector<ParamEntry>> params; // params[xi-1]

    int t() const { return quiver.vertex_count(); }
    /// Scalar on the main diagonal at block row k (1-based), vertex v.
    int diag_value(int block_row, int vertex) const {
        return (block_row - 1) * t() + vertex;
    }
};

ReductionTemplate build_template(const Quiver& q);

/// Block-grid sidecar describing each cell of the template.
nlohmann::json template_sidecar(const ReductionTemplate& tpl);

struct ReductionMatrix {
    CMatrix matrix; // (r+2) * (d_1+...+d_t) square
    ReductionTemplate tpl;
    DimensionVector dims;
};

/// Instantiates the template with the representation: parameter cells get
/// the arrow matrices, scalar k becomes k*I on the vertex strip, identity
/// cells become identity strips.
ReductionMatrix build_MQ(const MatrixRepresentation& rep);

/// Reads back the matrix placed for an arrow; exact copy of the input block.
CMatrix extract_arrow_block(const ReductionMatrix& mq, std::string_view arrow);

/// diag(U_1..U_t) repeated r+2 times; unitary (for the family's star mode)
/// whenever each U_v is.
CMatrix block_similarity_witness(const IsometryFamily& fam,
                                 const ReductionTemplate& tpl,
                                 const DimensionVector& dims);

/// Traces of all words in the two letters {M, M#} up to rotation, realized
/// as cycles of the doubled single-loop quiver. Cycle strings use the loop
/// name "M".
TraceSignature mq_word_signature(const CMatrix& m, StarMode mode,
                                 int max_word_len);

} // namespace quiso

#endif
