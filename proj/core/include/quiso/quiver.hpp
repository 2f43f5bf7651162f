#ifndef QUISO_QUIVER_HPP
#define QUISO_QUIVER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "quiso/errors.hpp"

namespace quiso {

/// Reserved suffix for the reversed (adjoint-carrying) arrows of a doubled
/// quiver. User arrow names may not contain it.
inline constexpr char kStarMarker = '*';

struct Arrow {
    std::string name;
    int src = 0; // 1-based vertex index
    int tgt = 0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A directed graph in which loops and parallel arrows are allowed.
/// Vertices are 1..t. Immutable after construction; the constructor
/// validates name uniqueness and vertex ranges.
class Quiver {
public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_arrow(std::string_view name) const;
    const Arrow& arrow(std::string_view name) const;

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    friend class DoubledQuiver;
    struct AllowMarkerTag {};
    Quiver(int vertex_count, std::vector<Arrow> arrows, AllowMarkerTag);
    void validate(bool allow_marker) const;

    int vertex_count_ = 0;
    std::vector<Arrow> arrows_;
};

/// Same arrow set, order-insensitively (arrow identity is by name).
bool same_quiver(const Quiver& a, const Quiver& b);

/// The quiver with a reversed arrow "a*" attached for each arrow "a".
/// Doubling is applied once by construction; a DoubledQuiver is never
/// itself doubled.
class DoubledQuiver {
public:
    explicit DoubledQuiver(Quiver base);

    const Quiver& base() const { return base_; }
    const Quiver& quiver() const { return doubled_; }

    static bool is_starred(std::string_view arrow_name);
    static std::string star_name(std::string_view base_arrow_name);
    static std::string_view base_name(std::string_view arrow_name);

private:
    Quiver base_;
    Quiver doubled_;
};

/// m(i, j) = number of arrows from j to i (target-first indexing).
class MultiplicityTable {
public:
    explicit MultiplicityTable(int vertex_count)
        : t_(vertex_count), counts_(static_cast<std::size_t>(t_) * t_, 0) {}

    int at(int i, int j) const { return counts_[idx(i, j)]; }
    int& at(int i, int j) { return counts_[idx(i, j)]; }
    int vertex_count() const { return t_; }
    int max() const;
    int total() const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * t_ + (j - 1);
    }
    int t_;
    std::vector<int> counts_;
};

MultiplicityTable multiplicities(const Quiver& q);

/// Smallest r >= 1 with r(r+1)/2 >= max multiplicity; 1 for an arrowless
/// quiver.
int min_r(const Quiver& q);

} // namespace quiso

#endif
