#include "quiso/reduction.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

namespace quiso {

ReductionTemplate build_template(const Quiver& q) {
    ReductionTemplate tpl{q, min_r(q), {}, {}};
    const int r = tpl.r;
    const int rows = r + 2;

    tpl.grid.assign(static_cast<std::size_t>(rows),
                    std::vector<ReductionTemplate::Block>(
                        static_cast<std::size_t>(rows)));
    for (int k = 0; k < rows; ++k) {
        tpl.grid[k][k] = {ReductionTemplate::BlockKind::Diag, 0};
        if (k + 1 < rows) {
            tpl.grid[k][k + 1] = {ReductionTemplate::BlockKind::Identity, 0};
        }
    }
    // Staircase: block row k (1-based, k <= r) carries the next r+1-k
    // parameter blocks in columns k+2 .. r+2.
    int xi = 1;
    for (int k = 1; k <= r; ++k) {
        for (int col = k + 2; col <= r + 2; ++col) {
            tpl.grid[k - 1][col - 1] = {ReductionTemplate::BlockKind::Params, xi};
            ++xi;
        }
    }

    tpl.params.assign(static_cast<std::size_t>(r * (r + 1) / 2), {});
    std::map<std::pair<int, int>, std::vector<std::string>> groups;
    for (const Arrow& a : q.arrows()) {
        groups[{a.tgt, a.src}].push_back(a.name);
    }
    for (auto& [ij, names] : groups) {
        std::sort(names.begin(), names.end());
        for (int k = 0; k < std::ssize(names); ++k) {
            tpl.params[static_cast<std::size_t>(k)].push_back(
                {ij.first, ij.second, names[static_cast<std::size_t>(k)]});
        }
    }
    return tpl;
}

nlohmann::json template_sidecar(const ReductionTemplate& tpl) {
    nlohmann::json blocks = nlohmann::json::array();
    const int rows = tpl.r + 2;
    for (int k = 1; k <= rows; ++k) {
        for (int l = 1; l <= rows; ++l) {
            const auto& b = tpl.grid[static_cast<std::size_t>(k - 1)]
                                    [static_cast<std::size_t>(l - 1)];
            nlohmann::json entry{{"row", k}, {"col", l}};
            switch (b.kind) {
                case ReductionTemplate::BlockKind::Zero:
                    entry["kind"] = "zero";
                    break;
                case ReductionTemplate::BlockKind::Diag: {
                    entry["kind"] = "diag";
                    std::vector<int> values;
                    for (int v = 1; v <= tpl.t(); ++v) {
                        values.push_back(tpl.diag_value(k, v));
                    }
                    entry["values"] = values;
                    break;
                }
                case ReductionTemplate::BlockKind::Identity:
                    entry["kind"] = "identity";
                    break;
                case ReductionTemplate::BlockKind::Params: {
                    entry["kind"] = "params";
                    entry["xi"] = b.xi;
                    nlohmann::json cells = nlohmann::json::array();
                    for (const auto& p :
                         tpl.params[static_cast<std::size_t>(b.xi - 1)]) {
                        cells.push_back(
                            {{"i", p.i}, {"j", p.j}, {"arrow", p.arrow}});
                    }
                    entry["entries"] = cells;
                    break;
                }
            }
            blocks.push_back(std::move(entry));
        }
    }
    return nlohmann::json{{"r", tpl.r}, {"t", tpl.t()}, {"blocks", blocks}};
}

ReductionMatrix build_MQ(const MatrixRepresentation& rep) {
    validate_representation(rep);
    ReductionMatrix mq{CMatrix(), build_template(rep.quiver), rep.dims};
    const ReductionTemplate& tpl = mq.tpl;
    const int t = tpl.t();
    const Eigen::Index d = rep.total_dim();
    const Eigen::Index n = (tpl.r + 2) * d;

    std::vector<Eigen::Index> off(static_cast<std::size_t>(t) + 1, 0);
    for (int v = 1; v <= t; ++v) {
        off[static_cast<std::size_t>(v)] =
            off[static_cast<std::size_t>(v - 1)] + rep.dim(v);
    }

    mq.matrix = CMatrix::Zero(n, n);
    for (int k = 1; k <= tpl.r + 2; ++k) {
        for (int l = 1; l <= tpl.r + 2; ++l) {
            const auto& b = tpl.grid[static_cast<std::size_t>(k - 1)]
                                    [static_cast<std::size_t>(l - 1)];
            const Eigen::Index row0 = (k - 1) * d;
            const Eigen::Index col0 = (l - 1) * d;
            switch (b.kind) {
                case ReductionTemplate::BlockKind::Zero:
                    break;
                case ReductionTemplate::BlockKind::Diag:
                    for (int v = 1; v <= t; ++v) {
                        const Eigen::Index o = off[static_cast<std::size_t>(v - 1)];
                        mq.matrix.block(row0 + o, col0 + o, rep.dim(v), rep.dim(v)) =
                            static_cast<double>(tpl.diag_value(k, v)) *
                            CMatrix::Identity(rep.dim(v), rep.dim(v));
                    }
                    break;
                case ReductionTemplate::BlockKind::Identity:
                    mq.matrix.block(row0, col0, d, d) = CMatrix::Identity(d, d);
                    break;
                case ReductionTemplate::BlockKind::Params:
                    for (const auto& p :
                         tpl.params[static_cast<std::size_t>(b.xi - 1)]) {
                        const CMatrix& a = rep.matrices.at(p.arrow);
                        mq.matrix.block(row0 + off[static_cast<std::size_t>(p.i - 1)],
                                        col0 + off[static_cast<std::size_t>(p.j - 1)],
                                        a.rows(), a.cols()) = a;
                    }
                    break;
            }
        }
    }
    return mq;
}

CMatrix extract_arrow_block(const ReductionMatrix& mq, std::string_view arrow) {
    const ReductionTemplate& tpl = mq.tpl;
    Eigen::Index d = 0;
    std::vector<Eigen::Index> off(static_cast<std::size_t>(tpl.t()) + 1, 0);
    for (int v = 1; v <= tpl.t(); ++v) {
        off[static_cast<std::size_t>(v)] =
            off[static_cast<std::size_t>(v - 1)] +
            mq.dims[static_cast<std::size_t>(v - 1)];
    }
    d = off[static_cast<std::size_t>(tpl.t())];

    for (int k = 1; k <= tpl.r + 2; ++k) {
        for (int l = 1; l <= tpl.r + 2; ++l) {
            const auto& b = tpl.grid[static_cast<std::size_t>(k - 1)]
                                    [static_cast<std::size_t>(l - 1)];
            if (b.kind != ReductionTemplate::BlockKind::Params) continue;
            for (const auto& p : tpl.params[static_cast<std::size_t>(b.xi - 1)]) {
                if (p.arrow != arrow) continue;
                const Eigen::Index rows = mq.dims[static_cast<std::size_t>(p.i - 1)];
                const Eigen::Index cols = mq.dims[static_cast<std::size_t>(p.j - 1)];
                return mq.matrix.block((k - 1) * d + off[static_cast<std::size_t>(p.i - 1)],
                                       (l - 1) * d + off[static_cast<std::size_t>(p.j - 1)],
                                       rows, cols);
            }
        }
    }
    throw ValidationError("arrow '" + std::string(arrow) +
                          "' has no parameter cell in the template");
}

CMatrix block_similarity_witness(const IsometryFamily& fam,
                                 const ReductionTemplate& tpl,
                                 const DimensionVector& dims) {
    if (std::ssize(fam.units) != tpl.t() || std::ssize(dims) != tpl.t()) {
        throw ValidationError("family size does not match the template");
    }
    Eigen::Index d = 0;
    for (int v = 1; v <= tpl.t(); ++v) {
        const CMatrix& u = fam.units[static_cast<std::size_t>(v - 1)];
        const Eigen::Index dv = dims[static_cast<std::size_t>(v - 1)];
        if (u.rows() != dv || u.cols() != dv) {
            throw ValidationError("isometry at vertex " + std::to_string(v) +
                                  " has the wrong size");
        }
        d += dv;
    }
    const Eigen::Index n = (tpl.r + 2) * d;
    CMatrix w = CMatrix::Zero(n, n);
    Eigen::Index pos = 0;
    for (int rep = 0; rep < tpl.r + 2; ++rep) {
        for (const CMatrix& u : fam.units) {
            w.block(pos, pos, u.rows(), u.cols()) = u;
            pos += u.rows();
        }
    }
    return w;
}

TraceSignature mq_word_signature(const CMatrix& m, StarMode mode,
                                 int max_word_len) {
    if (m.rows() != m.cols()) {
        throw ValidationError("word signature requires a square matrix");
    }
    const Quiver loop(1, {{"M", 1, 1}});
    const MatrixRepresentation rep{loop, {m.rows()}, {{"M", m}}};
    return compute_signature(rep, mode, max_word_len);
}

} // namespace quiso
