#include <nlohmann/json.hpp>

#include "doctest.h"
#include "helpers.hpp"

#include "quiso/reduction.hpp"

using namespace quiso;
using test::mat;

TEST_CASE("build_template on the example quiver") {
    ReductionTemplate tpl = build_template(test::example_quiver());
    using K = ReductionTemplate::BlockKind;

    CHECK(tpl.r == 2);
    CHECK(tpl.t() == 3);
    REQUIRE(tpl.grid.size() == 4);

    SUBCASE("diagonal and superdiagonal structure") {
        for (int k = 0; k < 4; ++k) {
            CHECK(tpl.grid[k][k].kind == K::Diag);
            if (k + 1 < 4) CHECK(tpl.grid[k][k + 1].kind == K::Identity);
        }
        CHECK(tpl.diag_value(1, 1) == 1);
        CHECK(tpl.diag_value(4, 3) == 12);
        CHECK(tpl.grid[1][0].kind == K::Zero);
        CHECK(tpl.grid[3][0].kind == K::Zero);
    }
    SUBCASE("staircase parameter placement") {
        // row 1 carries X1, X2 at block columns 3, 4; row 2 carries X3 at 4
        CHECK(tpl.grid[0][2].kind == K::Params);
        CHECK(tpl.grid[0][2].xi == 1);
        CHECK(tpl.grid[0][3].kind == K::Params);
        CHECK(tpl.grid[0][3].xi == 2);
        CHECK(tpl.grid[1][3].kind == K::Params);
        CHECK(tpl.grid[1][3].xi == 3);
        CHECK(tpl.grid[2][3].kind == K::Identity);
        CHECK(tpl.grid[1][2].kind == K::Identity);
    }
    SUBCASE("parameter entries") {
        REQUIRE(tpl.params.size() == 3);
        // X1: first arrow per vertex pair
        REQUIRE(tpl.params[0].size() == 5);
        auto has = [&](int xi, int i, int j, const std::string& a) {
            for (const auto& e : tpl.params[xi - 1]) {
                if (e.i == i && e.j == j && e.arrow == a) return true;
            }
            return false;
        };
        CHECK(has(1, 1, 2, "alpha"));
        CHECK(has(1, 1, 3, "beta"));
        CHECK(has(1, 2, 2, "gamma"));
        CHECK(has(1, 3, 2, "delta"));
        CHECK(has(1, 3, 3, "zeta"));
        // X2: second of the parallel pair
        REQUIRE(tpl.params[1].size() == 1);
        CHECK(has(2, 3, 2, "epsilon"));
        // X3 exists but is empty
        CHECK(tpl.params[2].empty());
    }
}

TEST_CASE("build_template degenerate cases") {
    SUBCASE("single loop") {
        ReductionTemplate tpl = build_template(Quiver(1, {{"a", 1, 1}}));
        CHECK(tpl.r == 1);
        REQUIRE(tpl.grid.size() == 3);
        CHECK(tpl.grid[0][2].kind == ReductionTemplate::BlockKind::Params);
        REQUIRE(tpl.params.size() == 1);
        CHECK(tpl.params[0].size() == 1);
        CHECK(tpl.params[0][0].arrow == "a");
    }
    SUBCASE("no arrows still yields one empty parameter block") {
        ReductionTemplate tpl = build_template(Quiver(2, {}));
        CHECK(tpl.r == 1);
        CHECK(tpl.params.size() == 1);
        CHECK(tpl.params[0].empty());
    }
}

TEST_CASE("template_sidecar") {
    nlohmann::json doc = template_sidecar(build_template(test::example_quiver()));
    CHECK(doc["r"] == 2);
    CHECK(doc["t"] == 3);
    REQUIRE(doc["blocks"].is_array());
    CHECK(doc["blocks"].size() == 16);

    int params_seen = 0;
    for (const auto& b : doc["blocks"]) {
        if (b["kind"] == "params") {
            ++params_seen;
            CHECK(b.contains("xi"));
            CHECK(b.contains("entries"));
        }
        if (b["kind"] == "diag") CHECK(b["values"].size() == 3);
    }
    CHECK(params_seen == 3);

    // deterministic serialization
    nlohmann::json again = template_sidecar(build_template(test::example_quiver()));
    CHECK(doc.dump() == again.dump());
}

TEST_CASE("build_MQ") {
    Quiver q = test::example_quiver();
    DimensionVector dims{2, 2, 2};
    auto rep = random_representation(q, dims, 404);
    ReductionMatrix mq = build_MQ(rep);

    CHECK(mq.matrix.rows() == 24);
    CHECK(mq.matrix.cols() == 24);

    SUBCASE("arrow blocks read back exactly") {
        for (const Arrow& a : q.arrows()) {
            CHECK(extract_arrow_block(mq, a.name) == rep.matrices.at(a.name));
        }
    }
    SUBCASE("diagonal scalar strips") {
        // first vertex strip of block row 1 carries scalar 1
        CHECK(mq.matrix(0, 0) == Complex(1, 0));
        CHECK(mq.matrix(1, 1) == Complex(1, 0));
        CHECK(mq.matrix(2, 2) == Complex(2, 0));
        // last strip of block row 4 carries scalar 12
        CHECK(mq.matrix(23, 23) == Complex(12, 0));
        CHECK(mq.matrix(1, 0) == Complex(0, 0));
    }
    SUBCASE("superdiagonal identities") {
        CHECK((mq.matrix.block(0, 6, 6, 6) - CMatrix::Identity(6, 6)).norm() ==
              0.0);
    }
    SUBCASE("lower block triangle is zero") {
        CHECK(mq.matrix.block(6, 0, 18, 6).norm() == 0.0);
        CHECK(mq.matrix.block(12, 6, 12, 6).norm() == 0.0);
    }
}

TEST_CASE("isometric representations give unitarily similar reduction matrices") {
    Quiver q = test::example_quiver();
    DimensionVector dims{2, 2, 2};
    for (StarMode mode : {StarMode::ConjugateTranspose, StarMode::Transpose}) {
        auto a = random_representation(q, dims, 505);
        auto fam = random_isometry_family(dims, 506, mode);
        auto b = transform(a, fam);

        ReductionMatrix ma = build_MQ(a);
        ReductionMatrix mb = build_MQ(b);
        CMatrix u = block_similarity_witness(fam, ma.tpl, dims);

        CHECK((star(u, mode) * u - CMatrix::Identity(24, 24)).norm() <= 1e-8 * 24);
        CHECK((star(u, mode) * ma.matrix * u - mb.matrix).norm() <=
              1e-8 * ma.matrix.norm());

        // independent route: word traces of the reduction matrices agree
        auto sa = mq_word_signature(ma.matrix, mode, 4);
        auto sb = mq_word_signature(mb.matrix, mode, 4);
        auto v = compare_signatures(sa, sb, 1e-9, 1e-12);
        CHECK(v.agree);
    }
}

TEST_CASE("mq_word_signature") {
    const CMatrix m = mat({{0.0, 1.0}, {0.0, 0.0}});
    auto sig = mq_word_signature(m, StarMode::ConjugateTranspose, 2);
    REQUIRE(sig.cycles.size() == 5);
    CHECK(sig.cycles[0].to_string() == "M");
    CHECK(sig.cycles[3].to_string() == "M,M*");
    CHECK(std::abs(sig.values[3] - Complex(1, 0)) < 1e-15);

    CHECK_THROWS_AS(mq_word_signature(CMatrix::Zero(2, 3),
                                      StarMode::ConjugateTranspose, 2),
                    ValidationError);
}

TEST_CASE("reduction matrices separate non-isometric pairs (spot check)") {
    Quiver q = test::example_quiver();
    DimensionVector dims{2, 2, 2};
    auto a = random_representation(q, dims, 606);
    auto b = perturb(a, 1e-2, 607);

    auto sa = mq_word_signature(build_MQ(a).matrix, StarMode::ConjugateTranspose, 4);
    auto sb = mq_word_signature(build_MQ(b).matrix, StarMode::ConjugateTranspose, 4);
    CHECK_FALSE(compare_signatures(sa, sb, 1e-9, 1e-12).agree);
}
