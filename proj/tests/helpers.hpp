#ifndef QUISO_TEST_HELPERS_HPP
#define QUISO_TEST_HELPERS_HPP

#include <random>

#include "quiso/representation.hpp"

namespace quiso::test {

/// The six-arrow example quiver on three vertices: alpha: 2->1, beta: 3->1,
/// a loop gamma at 2, the parallel pair delta, epsilon: 2->3, and a loop
/// zeta at 3.
inline Quiver example_quiver() {
    return Quiver(3, {{"alpha", 2, 1},
                      {"beta", 3, 1},
                      {"gamma", 2, 2},
                      {"delta", 2, 3},
                      {"epsilon", 2, 3},
                      {"zeta", 3, 3}});
}

inline CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c =
        r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
    CMatrix m(r, c);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

/// Random small quiver for property tests: up to 4 vertices, up to 6 arrows.
inline Quiver random_quiver(std::mt19937_64& gen) {
    std::uniform_int_distribution<int> tdist(1, 4);
    const int t = tdist(gen);
    std::uniform_int_distribution<int> adist(0, 6);
    std::uniform_int_distribution<int> vdist(1, t);
    const int na = adist(gen);
    std::vector<Arrow> arrows;
    for (int i = 0; i < na; ++i) {
        arrows.push_back({"w" + std::to_string(i), vdist(gen), vdist(gen)});
    }
    return Quiver(t, std::move(arrows));
}

inline DimensionVector random_dims(const Quiver& q, std::mt19937_64& gen,
                                   Eigen::Index max_dim = 3) {
    std::uniform_int_distribution<Eigen::Index> ddist(0, max_dim);
    DimensionVector dims;
    for (int v = 0; v < q.vertex_count(); ++v) dims.push_back(ddist(gen));
    return dims;
}

} // namespace quiso::test

#endif
