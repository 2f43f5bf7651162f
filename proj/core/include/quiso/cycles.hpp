#ifndef QUISO_CYCLES_HPP
#define QUISO_CYCLES_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quiso/representation.hpp"

namespace quiso {

/// A closed composable walk, stored as the lexicographically least rotation
/// of its arrow-name sequence. With vertices v_1..v_l, arrow i goes
/// v_{i+1} -> v_i and the last arrow goes v_1 -> v_l, so the left-to-right
/// matrix product along the stored order is square.
class OrientedCycle {
public:
    static OrientedCycle canonicalize(std::vector<std::string> raw,
                                      const Quiver& q);

    std::size_t length() const { return arrows_.size(); }
    const std::vector<std::string>& arrows() const { return arrows_; }

    /// Comma-joined arrow names in canonical order, e.g. "a,a*".
    std::string to_string() const;

    friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;

    /// Orders by length, then lexicographically — the deterministic
    /// enumeration and reporting order.
    friend std::strong_ordering operator<=>(const OrientedCycle& a,
                                            const OrientedCycle& b) {
        if (auto c = a.arrows_.size() <=> b.arrows_.size(); c != 0) return c;
        return a.arrows_ <=> b.arrows_;
    }

private:
    friend std::vector<OrientedCycle> enumerate_cycles(const Quiver&, int,
                                                       std::uint64_t);
    OrientedCycle() = default;
    std::vector<std::string> arrows_;
};

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000;

/// One canonical representative per rotation class of closed walks of each
/// length 1..max_len, ordered by length then lexicographically. Throws
/// BudgetError when a cheap class-count bound exceeds the budget.
std::vector<OrientedCycle> enumerate_cycles(
    const Quiver& q, int max_len,
    std::uint64_t budget = kDefaultCycleBudget);

/// Trace of the left-to-right product of the arrow matrices along the cycle.
Complex cycle_trace(const MatrixRepresentation& rep, const OrientedCycle& cycle);

} // namespace quiso

#endif
