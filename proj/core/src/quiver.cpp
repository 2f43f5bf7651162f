#include "quiso/quiver.hpp"

#include <algorithm>
#include <unordered_set>

namespace quiso {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    validate(/*allow_marker=*/false);
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, AllowMarkerTag)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    validate(/*allow_marker=*/true);
}

void Quiver::validate(bool allow_marker) const {
    if (vertex_count_ < 0) {
        throw ValidationError("vertex count must be nonnegative");
    }
    std::unordered_set<std::string_view> names;
    for (const Arrow& a : arrows_) {
        if (a.name.empty()) {
            throw ValidationError("arrow name must be nonempty");
        }
        if (!allow_marker && a.name.find(kStarMarker) != std::string::npos) {
            throw ValidationError("arrow name '" + a.name +
                                  "' contains the reserved marker '*'");
        }
        if (!names.insert(a.name).second) {
            throw ValidationError("duplicate arrow name '" + a.name + "'");
        }
        if (a.src < 1 || a.src > vertex_count_ || a.tgt < 1 ||
            a.tgt > vertex_count_) {
            throw ValidationError("arrow '" + a.name +
                                  "' has a vertex index outside 1.." +
                                  std::to_string(vertex_count_));
        }
    }
}

bool Quiver::has_arrow(std::string_view name) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [&](const Arrow& a) { return a.name == name; });
}

const Arrow& Quiver::arrow(std::string_view name) const {
    for (const Arrow& a : arrows_) {
        if (a.name == name) return a;
    }
    throw ValidationError("no arrow named '" + std::string(name) + "'");
}

bool same_quiver(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count() ||
        a.arrows().size() != b.arrows().size()) {
        return false;
    }
    auto key = [](const Quiver& q) {
        std::vector<Arrow> v = q.arrows();
        std::sort(v.begin(), v.end(),
                  [](const Arrow& x, const Arrow& y) { return x.name < y.name; });
        return v;
    };
    return key(a) == key(b);
}

namespace {

std::vector<Arrow> doubled_arrows(const Quiver& base) {
    std::vector<Arrow> arrows = base.arrows();
    arrows.reserve(arrows.size() * 2);
    for (const Arrow& a : base.arrows()) {
        arrows.push_back({DoubledQuiver::star_name(a.name), a.tgt, a.src});
    }
    return arrows;
}

} // namespace

DoubledQuiver::DoubledQuiver(Quiver base)
    : base_(std::move(base)),
      doubled_(base_.vertex_count(), doubled_arrows(base_),
               Quiver::AllowMarkerTag{}) {}

bool DoubledQuiver::is_starred(std::string_view arrow_name) {
    return !arrow_name.empty() && arrow_name.back() == kStarMarker;
}

std::string DoubledQuiver::star_name(std::string_view base_arrow_name) {
    return std::string(base_arrow_name) + kStarMarker;
}

std::string_view DoubledQuiver::base_name(std::string_view arrow_name) {
    if (is_starred(arrow_name)) {
        arrow_name.remove_suffix(1);
    }
    return arrow_name;
}

MultiplicityTable multiplicities(const Quiver& q) {
    MultiplicityTable m(q.vertex_count());
    for (const Arrow& a : q.arrows()) {
        ++m.at(a.tgt, a.src);
    }
    return m;
}

int MultiplicityTable::max() const {
    int best = 0;
    for (int c : counts_) best = std::max(best, c);
    return best;
}

int MultiplicityTable::total() const {
    int sum = 0;
    for (int c : counts_) sum += c;
    return sum;
}

int min_r(const Quiver& q) {
    const int target = multiplicities(q).max();
    int r = 1;
    while (r * (r + 1) / 2 < target) ++r;
    return r;
}

} // namespace quiso
