#include "quiso/cycles.hpp"

#include <algorithm>
#include <cmath>

namespace quiso {

namespace {

// True if w is the lexicographically least among its rotations.
template <typename Seq>
bool is_least_rotation(const Seq& w) {
    const std::size_t n = w.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& rot = w[(k + i) % n];
            if (rot < w[i]) return false;
            if (w[i] < rot) break;
        }
    }
    return true;
}

template <typename Seq>
Seq least_rotation(const Seq& w) {
    Seq best = w;
    Seq cur = w;
    for (std::size_t k = 1; k < w.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

} // namespace

OrientedCycle OrientedCycle::canonicalize(std::vector<std::string> raw,
                                          const Quiver& q) {
    if (raw.empty()) {
        throw ValidationError("a cycle must contain at least one arrow");
    }
    const std::size_t n = raw.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Arrow& cur = q.arrow(raw[i]);
        const Arrow& next = q.arrow(raw[(i + 1) % n]);
        if (cur.src != next.tgt) {
            throw ValidationError("arrows '" + raw[i] + "' and '" +
                                  raw[(i + 1) % n] + "' do not compose");
        }
    }
    OrientedCycle c;
    c.arrows_ = least_rotation(raw);
    return c;
}

std::string OrientedCycle::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (i) out += ',';
        out += arrows_[i];
    }
    return out;
}

std::vector<OrientedCycle> enumerate_cycles(const Quiver& q, int max_len,
                                            std::uint64_t budget) {
    if (max_len < 1) {
        throw ValidationError("max_len must be at least 1");
    }
    const std::size_t na = q.arrows().size();
    double estimate = 0.0;
    for (int l = 1; l <= max_len; ++l) {
        estimate += std::pow(static_cast<double>(na), l) / l;
        if (estimate > static_cast<double>(budget)) {
            throw BudgetError("cycle enumeration up to length " +
                              std::to_string(max_len) + " exceeds the budget of " +
                              std::to_string(budget) + " classes");
        }
    }

    std::vector<Arrow> arrows = q.arrows();
    std::sort(arrows.begin(), arrows.end(),
              [](const Arrow& a, const Arrow& b) { return a.name < b.name; });

    // Arrows entering each vertex, ascending by name. The next arrow in a
    // walk must have tgt equal to the current arrow's src.
    std::vector<std::vector<int>> into(static_cast<std::size_t>(q.vertex_count()) + 1);
    for (int i = 0; i < std::ssize(arrows); ++i) {
        into[static_cast<std::size_t>(arrows[i].tgt)].push_back(i);
    }

    std::vector<std::vector<int>> found;
    std::vector<int> seq;

    // DFS anchored at the least arrow of the class: indices never drop below
    // the first, and a complete closed walk is emitted only when it already
    // is the least rotation.
    auto extend = [&](auto&& self) -> void {
        const int first = seq.front();
        const Arrow& head = arrows[static_cast<std::size_t>(first)];
        const Arrow& tail = arrows[static_cast<std::size_t>(seq.back())];
        if (tail.src == head.tgt && is_least_rotation(seq)) {
            found.push_back(seq);
        }
        if (std::ssize(seq) == max_len) return;
        for (int next : into[static_cast<std::size_t>(tail.src)]) {
            if (next < first) continue;
            seq.push_back(next);
            self(self);
            seq.pop_back();
        }
    };
    for (int s = 0; s < std::ssize(arrows); ++s) {
        seq.assign(1, s);
        extend(extend);
    }

    std::sort(found.begin(), found.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    std::vector<OrientedCycle> out;
    out.reserve(found.size());
    for (const std::vector<int>& f : found) {
        OrientedCycle c;
        c.arrows_.reserve(f.size());
        for (int i : f) c.arrows_.push_back(arrows[static_cast<std::size_t>(i)].name);
        out.push_back(std::move(c));
    }
    return out;
}

Complex cycle_trace(const MatrixRepresentation& rep, const OrientedCycle& cycle) {
    auto matrix_of = [&](const std::string& name) -> const CMatrix& {
        auto it = rep.matrices.find(name);
        if (it == rep.matrices.end()) {
            throw ValidationError("representation has no matrix for arrow '" +
                                  name + "'");
        }
        return it->second;
    };
    CMatrix prod = matrix_of(cycle.arrows().front());
    for (std::size_t i = 1; i < cycle.length(); ++i) {
        prod = (prod * matrix_of(cycle.arrows()[i])).eval();
    }
    return prod.rows() == 0 ? Complex(0, 0) : prod.trace();
}

} // namespace quiso
