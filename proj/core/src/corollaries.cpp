#include "quiso/corollaries.hpp"

namespace quiso {

namespace {

void check_arity(const std::vector<CMatrix>& as, const std::vector<CMatrix>& bs) {
    if (as.empty() || as.size() != bs.size()) {
        throw ValidationError("the two tuples must be nonempty and of equal "
                              "length");
    }
}

std::string loop_name(std::size_t i) { return "a" + std::to_string(i + 1); }

} // namespace

QuiverProblem similarity_problem(const std::vector<CMatrix>& as,
                                 const std::vector<CMatrix>& bs) {
    check_arity(as, bs);
    const Eigen::Index n = as.front().rows();
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].rows() != n || as[i].cols() != n || bs[i].rows() != n ||
            bs[i].cols() != n) {
            throw ValidationError("similarity requires square matrices of one "
                                  "common size");
        }
        arrows.push_back({loop_name(i), 1, 1});
    }
    Quiver q(1, arrows);
    QuiverProblem p{q, {q, {n}, {}}, {q, {n}, {}}};
    for (std::size_t i = 0; i < as.size(); ++i) {
        p.a.matrices[loop_name(i)] = as[i];
        p.b.matrices[loop_name(i)] = bs[i];
    }
    return p;
}

QuiverProblem equivalence_problem(const std::vector<CMatrix>& as,
                                  const std::vector<CMatrix>& bs) {
    check_arity(as, bs);
    const Eigen::Index m = as.front().rows();
    const Eigen::Index n = as.front().cols();
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].rows() != m || as[i].cols() != n || bs[i].rows() != m ||
            bs[i].cols() != n) {
            throw ValidationError("equivalence requires all matrices to share "
                                  "one m x n shape");
        }
        arrows.push_back({loop_name(i), 2, 1});
    }
    Quiver q(2, arrows);
    QuiverProblem p{q, {q, {m, n}, {}}, {q, {m, n}, {}}};
    for (std::size_t i = 0; i < as.size(); ++i) {
        p.a.matrices[loop_name(i)] = as[i];
        p.b.matrices[loop_name(i)] = bs[i];
    }
    return p;
}

QuiverProblem star_equivalence_problem(const std::vector<CMatrix>& as,
                                       const std::vector<CMatrix>& bs) {
    check_arity(as, bs);
    const Eigen::Index m = as.front().rows();
    std::vector<Arrow> arrows;
    DimensionVector dims{m};
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i].rows() != m || bs[i].rows() != m ||
            as[i].cols() != bs[i].cols()) {
            throw ValidationError("star equivalence requires a common row "
                                  "count and per-index matching column counts");
        }
        arrows.push_back({loop_name(i), static_cast<int>(i) + 2, 1});
        dims.push_back(as[i].cols());
    }
    Quiver q(static_cast<int>(as.size()) + 1, arrows);
    QuiverProblem p{q, {q, dims, {}}, {q, dims, {}}};
    for (std::size_t i = 0; i < as.size(); ++i) {
        p.a.matrices[loop_name(i)] = as[i];
        p.b.matrices[loop_name(i)] = bs[i];
    }
    return p;
}

QuiverProblem block_similarity_problem(const CMatrix& a, const CMatrix& b,
                                       const DimensionVector& block_sizes) {
    const int t = static_cast<int>(block_sizes.size());
    if (t < 1) throw ValidationError("at least one diagonal block is required");
    Eigen::Index m = 0;
    for (Eigen::Index s : block_sizes) {
        if (s < 0) throw ValidationError("negative block size");
        m += s;
    }
    if (a.rows() != m || a.cols() != m || b.rows() != m || b.cols() != m) {
        throw ValidationError("matrix size does not match the partition");
    }
    std::vector<Eigen::Index> off(static_cast<std::size_t>(t) + 1, 0);
    for (int v = 1; v <= t; ++v) {
        off[static_cast<std::size_t>(v)] =
            off[static_cast<std::size_t>(v - 1)] +
            block_sizes[static_cast<std::size_t>(v - 1)];
    }

    // Complete quiver: a loop at each vertex and one arrow in each direction
    // between distinct vertices; the arrow j -> i carries the (i, j) block.
    std::vector<Arrow> arrows;
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            arrows.push_back(
                {"a" + std::to_string(i) + "_" + std::to_string(j), j, i});
        }
    }
    Quiver q(t, arrows);
    QuiverProblem p{q, {q, block_sizes, {}}, {q, block_sizes, {}}};
    for (int i = 1; i <= t; ++i) {
        for (int j = 1; j <= t; ++j) {
            const std::string name =
                "a" + std::to_string(i) + "_" + std::to_string(j);
            const Eigen::Index ri = off[static_cast<std::size_t>(i - 1)];
            const Eigen::Index cj = off[static_cast<std::size_t>(j - 1)];
            const Eigen::Index di = block_sizes[static_cast<std::size_t>(i - 1)];
            const Eigen::Index dj = block_sizes[static_cast<std::size_t>(j - 1)];
            p.a.matrices[name] = a.block(ri, cj, di, dj);
            p.b.matrices[name] = b.block(ri, cj, di, dj);
        }
    }
    return p;
}

IsometryVerdict specht_check(const CMatrix& a, const CMatrix& b,
                             const DecideOptions& opts) {
    const QuiverProblem p = similarity_problem({a}, {b});
    return decide_isometry(p.a, p.b, opts);
}

IsometryVerdict wiegmann_check(const std::vector<CMatrix>& as,
                               const std::vector<CMatrix>& bs,
                               const DecideOptions& opts) {
    const QuiverProblem p = similarity_problem(as, bs);
    return decide_isometry(p.a, p.b, opts);
}

IsometryVerdict jing_check(const std::vector<CMatrix>& as,
                           const std::vector<CMatrix>& bs,
                           const DecideOptions& opts) {
    const QuiverProblem p = equivalence_problem(as, bs);
    return decide_isometry(p.a, p.b, opts);
}

IsometryVerdict star_check(const std::vector<CMatrix>& as,
                           const std::vector<CMatrix>& bs,
                           const DecideOptions& opts) {
    const QuiverProblem p = star_equivalence_problem(as, bs);
    return decide_isometry(p.a, p.b, opts);
}

IsometryVerdict block_check(const CMatrix& a, const CMatrix& b,
                            const DimensionVector& block_sizes,
                            const DecideOptions& opts) {
    const QuiverProblem p = block_similarity_problem(a, b, block_sizes);
    return decide_isometry(p.a, p.b, opts);
}

} // namespace quiso
