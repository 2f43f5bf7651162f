#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "quiso/decision.hpp"

using namespace quiso;
using test::mat;

TEST_CASE("phi") {
    SUBCASE("small arguments collapse to 1") {
        for (BoundFunction b : {BoundFunction::Pearcy, BoundFunction::Laffey,
                                BoundFunction::Pappacena, BoundFunction::NSquared}) {
            CHECK(phi(b, 0) == 1);
            CHECK(phi(b, 1) == 1);
        }
    }
    SUBCASE("frozen values") {
        CHECK(phi(BoundFunction::Pearcy, 2) == 8);
        CHECK(phi(BoundFunction::NSquared, 2) == 4);
        CHECK(phi(BoundFunction::Laffey, 2) == 4);
        CHECK(phi(BoundFunction::Pappacena, 4) == 14);
        CHECK(phi(BoundFunction::Pearcy, 24) == 1152);
    }
    SUBCASE("Pappacena against a long-double evaluation") {
        for (long long n = 2; n <= 60; ++n) {
            const long double nn = static_cast<long double>(n);
            const long double raw =
                -2.0L + nn / 2.0L +
                nn * std::sqrt(2.0L * nn * nn / (nn - 1.0L) + 0.25L);
            CHECK(phi(BoundFunction::Pappacena, n) ==
                  static_cast<long long>(std::ceil(raw)));
        }
    }
    SUBCASE("Laffey integer ceiling") {
        for (long long n = 2; n <= 40; ++n) {
            CHECK(phi(BoundFunction::Laffey, n) == (2 * n * n + 4 + 2) / 3);
        }
    }
    SUBCASE("ordering for moderate n: Pappacena <= Laffey <= Pearcy") {
        for (long long n = 6; n <= 40; ++n) {
            CHECK(phi(BoundFunction::Pappacena, n) <= phi(BoundFunction::Laffey, n));
            CHECK(phi(BoundFunction::Laffey, n) <= phi(BoundFunction::Pearcy, n));
        }
    }
}

TEST_CASE("cycle_length_bound") {
    // example quiver: max multiplicity 2 gives r = 2, so n = 4 * (2+2+2) = 24
    CHECK(cycle_length_bound(test::example_quiver(), {2, 2, 2},
                             BoundFunction::Pearcy) == 1152);
    // single loop: r = 1, n = 3 * d
    CHECK(cycle_length_bound(Quiver(1, {{"a", 1, 1}}), {1},
                             BoundFunction::NSquared) == 9);
    CHECK(cycle_length_bound(Quiver(1, {{"a", 1, 1}}), {2},
                             BoundFunction::NSquared) == 36);
}

TEST_CASE("compute_signature") {
    Quiver loop(1, {{"a", 1, 1}});
    MatrixRepresentation rep{loop, {2}, {{"a", mat({{0.0, 1.0}, {0.0, 0.0}})}}};

    auto sig = compute_signature(rep, StarMode::ConjugateTranspose, 2);
    REQUIRE(sig.cycles.size() == 5);
    CHECK(sig.cycles[0].to_string() == "a");
    CHECK(sig.cycles[3].to_string() == "a,a*");
    CHECK(std::abs(sig.values[0]) < 1e-15);               // tr a = 0
    CHECK(std::abs(sig.values[3] - Complex(1, 0)) < 1e-15); // tr a a* = 1
    CHECK(sig.scales[3] == doctest::Approx(1.0));

    SUBCASE("precomputed cycle overload matches") {
        auto cycles =
            enumerate_cycles(DoubledQuiver(loop).quiver(), 2, kDefaultCycleBudget);
        auto sig2 = compute_signature(rep, StarMode::ConjugateTranspose, 2, cycles);
        REQUIRE(sig2.values.size() == sig.values.size());
        for (std::size_t i = 0; i < sig.values.size(); ++i) {
            CHECK(sig2.values[i] == sig.values[i]);
            CHECK(sig2.scales[i] == sig.scales[i]);
        }
    }
    SUBCASE("scales multiply spectral norms") {
        MatrixRepresentation big{loop, {2}, {{"a", mat({{3.0, 0.0}, {0.0, 1.0}})}}};
        auto s = compute_signature(big, StarMode::ConjugateTranspose, 2);
        CHECK(s.scales[2] == doctest::Approx(9.0)); // a,a
        CHECK(s.scales[3] == doctest::Approx(9.0)); // a,a*
    }
}

TEST_CASE("compare_signatures") {
    Quiver loop(1, {{"a", 1, 1}});
    MatrixRepresentation a{loop, {1}, {{"a", mat({{2.0}})}}};
    MatrixRepresentation b{loop, {1}, {{"a", mat({{3.0}})}}};

    auto sa = compute_signature(a, StarMode::ConjugateTranspose, 2);
    auto sb = compute_signature(b, StarMode::ConjugateTranspose, 2);

    auto v = compare_signatures(sa, sb, 1e-9, 1e-12);
    CHECK_FALSE(v.agree);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->cycle.to_string() == "a");
    CHECK(v.witness->trace_a == Complex(2, 0));
    CHECK(v.witness->trace_b == Complex(3, 0));

    auto same = compare_signatures(sa, sa, 1e-9, 1e-12);
    CHECK(same.agree);
    CHECK_FALSE(same.witness.has_value());

    SUBCASE("mismatched inputs are rejected") {
        auto longer = compute_signature(a, StarMode::ConjugateTranspose, 3);
        CHECK_THROWS_AS(compare_signatures(sa, longer, 1e-9, 1e-12),
                        ValidationError);
        auto other = compute_signature(a, StarMode::Transpose, 2);
        CHECK_THROWS_AS(compare_signatures(sa, other, 1e-9, 1e-12),
                        ValidationError);
    }
    SUBCASE("tolerance scales with the cycle scale") {
        MatrixRepresentation big{loop, {1}, {{"a", mat({{1e6}})}}};
        MatrixRepresentation nudged{loop, {1}, {{"a", mat({{1e6 + 1e-5}})}}};
        auto sx = compute_signature(big, StarMode::ConjugateTranspose, 2);
        auto sy = compute_signature(nudged, StarMode::ConjugateTranspose, 2);
        CHECK(compare_signatures(sx, sy, 1e-9, 1e-12).agree);
        CHECK_FALSE(compare_signatures(sx, sy, 1e-14, 1e-12).agree);
    }
}

TEST_CASE("decide_isometry") {
    Quiver q = test::example_quiver();
    DimensionVector dims{2, 2, 2};

    SUBCASE("isometric pairs agree in both modes") {
        for (StarMode mode : {StarMode::ConjugateTranspose, StarMode::Transpose}) {
            auto a = random_representation(q, dims, 61);
            auto b = transform(a, random_isometry_family(dims, 62, mode));
            DecideOptions opts;
            opts.mode = mode;
            opts.max_len = 6;
            auto v = decide_isometry(a, b, opts);
            CHECK(v.agree);
            CHECK(v.max_len == 6);
        }
    }
    SUBCASE("perturbation is distinguished with a witness") {
        auto a = random_representation(q, dims, 63);
        auto b = perturb(a, 1e-2, 64);
        DecideOptions opts;
        opts.max_len = 4;
        auto v = decide_isometry(a, b, opts);
        CHECK_FALSE(v.agree);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->cycle.length() <= 4);
        CHECK(std::abs(v.witness->trace_a - v.witness->trace_b) > 0);
    }
    SUBCASE("certification flag") {
        Quiver loop(1, {{"a", 1, 1}});
        MatrixRepresentation a{loop, {1}, {{"a", mat({{0.5}})}}};
        DecideOptions opts; // NSquared bound, n = 3, bound = 9

        auto v = decide_isometry(a, a, opts);
        CHECK(v.agree);
        CHECK(v.max_len == 9);
        CHECK(v.certified);

        opts.max_len = 4; // below the bound
        CHECK_FALSE(decide_isometry(a, a, opts).certified);

        opts.max_len.reset();
        opts.mode = StarMode::Transpose;
        CHECK_FALSE(decide_isometry(a, a, opts).certified);
        opts.certify_transpose = true;
        CHECK(decide_isometry(a, a, opts).certified);
    }
    SUBCASE("scalar loops of equal modulus split the modes") {
        Quiver loop(1, {{"a", 1, 1}});
        MatrixRepresentation a{loop, {1}, {{"a", mat({{Complex(0, 1)}})}}};
        MatrixRepresentation b{loop, {1}, {{"a", mat({{Complex(0, -1)}})}}};

        DecideOptions opts;
        opts.max_len = 2;
        auto v = decide_isometry(a, b, opts);
        CHECK_FALSE(v.agree);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->cycle.length() == 1);
    }
    SUBCASE("structural mismatches are rejected") {
        auto a = random_representation(q, dims, 65);
        auto c = random_representation(q, {2, 2, 3}, 66);
        CHECK_THROWS_AS(decide_isometry(a, c), ValidationError);

        Quiver other(3, {{"alpha", 2, 1}});
        auto d = random_representation(other, dims, 67);
        CHECK_THROWS_AS(decide_isometry(a, d), ValidationError);
    }
    SUBCASE("budget propagates") {
        auto a = random_representation(q, dims, 68);
        DecideOptions opts;
        opts.max_len = 12;
        opts.budget = 100;
        CHECK_THROWS_AS(decide_isometry(a, a, opts), BudgetError);
    }
}

TEST_CASE("trace signature is an isometry invariant (property)") {
    std::mt19937_64 gen(314159);
    int tried = 0;
    for (int iter = 0; iter < 60 && tried < 25; ++iter) {
        Quiver q = test::random_quiver(gen);
        if (q.arrows().empty()) continue;
        DimensionVector dims = test::random_dims(q, gen);
        ++tried;
        const StarMode mode = iter % 2 ? StarMode::Transpose
                                       : StarMode::ConjugateTranspose;
        auto a = random_representation(q, dims, 7000 + iter);
        auto b = transform(a, random_isometry_family(dims, 8000 + iter, mode));

        DecideOptions opts;
        opts.mode = mode;
        opts.max_len = 5;
        CHECK(decide_isometry(a, b, opts).agree);
    }
    CHECK(tried == 25);
}
