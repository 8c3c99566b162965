#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hodgemicro/plumbing.hpp>

using namespace hodgemicro;

TEST_CASE("twist tables") {
    TwistTable t21 = twist_table(2, 1);
    CHECK(t21.w == Rational(1, 2));
    CHECK(t21.wtilde == Rational(3, 2));

    TwistTable t32 = twist_table(3, 2);  // odd middle
    CHECK(t32.wtilde == Rational(2));

    TwistTable t42 = twist_table(4, 2);
    CHECK(t42.w == Rational(1, 2));
    CHECK(t42.wtilde == Rational(5, 2));

    CHECK(twist_table(5, 4).wtilde == twist_table(5, 2).wtilde);
    CHECK_THROWS_AS(twist_table(3, 4), std::out_of_range);
}

TEST_CASE("build_block_H fixtures") {
    PlumbingObject h11 = build_block_H(1, 1);
    REQUIRE(h11.slots.size() == 1);
    CHECK(h11.slots[0].first.terms[0] == Block(BlockKind::TildeUndP, 1));
    CHECK(h11.slots[0].second.terms[0] == Block(BlockKind::TildeUndP, 1));
    PlumbingObject h11p = build_block_H(1, 1, true);
    CHECK(h11p.slots[0].first.terms[0] == Block(BlockKind::P, 1));

    PlumbingObject h21 = build_block_H(2, 1);
    REQUIRE(h21.slots.size() == 2);
    CHECK(h21.slots[0].first.terms[0] == Block(BlockKind::UndP, 1));
    CHECK(h21.slots[0].second.terms[0] == Block(BlockKind::UndA, 1));
    CHECK(h21.slots[1].first.terms[0] == Block(BlockKind::OveB, 1, 0, {1}));
    CHECK(h21.slots[1].second.terms[0] == Block(BlockKind::OveP, 1, 0, {1}));

    PlumbingObject h42 = build_block_H(4, 2);
    REQUIRE(h42.slots.size() == 4);
    CHECK(h42.slots[0].first.terms[0] == Block(BlockKind::P, 1, 0, {1}));
    CHECK(h42.slots[0].second.terms[0] == Block(BlockKind::Q, 2, 0, {1}));
    CHECK(h42.slots[1].first.terms[0] == Block(BlockKind::UndP, 2));
    CHECK(h42.slots[1].second.terms[0] == Block(BlockKind::UndA, 2));
    CHECK(h42.slots[2].first.terms[0] == Block(BlockKind::OveB, 2, 0, {1}));
    CHECK(h42.slots[2].second.terms[0] == Block(BlockKind::OveP, 2, 0, {1}));
    CHECK(h42.slots[3].first.terms[0] == Block(BlockKind::Q, 2, 0, {2}));
    CHECK(h42.slots[3].second.terms[0] == Block(BlockKind::P, 1, 0, {2}));

    // odd middle
    PlumbingObject h32 = build_block_H(3, 2);
    REQUIRE(h32.slots.size() == 3);
    CHECK(h32.slots[0].first.terms[0] == Block(BlockKind::P, 1, 0, {1}));
    CHECK(h32.slots[1].first.terms[0] == Block(BlockKind::OveUndP, 2));
    CHECK(h32.slots[1].second.terms[0] == Block(BlockKind::OveUndP, 2));
    CHECK(h32.slots[2].second.terms[0] == Block(BlockKind::P, 1, 0, {1}));

    // flip for j > n/2
    PlumbingObject h22 = build_block_H(2, 2);
    CHECK(h22.slots[0].first.terms[0] == Block(BlockKind::OveP, 1, 0, {1}));
    CHECK(h22.slots[1].second.terms[0] == Block(BlockKind::UndP, 1));

    CHECK_THROWS_AS(build_block_H(3, 0), std::out_of_range);
    CHECK_THROWS_AS(build_block_H(3, 4), std::out_of_range);
}

TEST_CASE("check_compat on blocks and towers") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t j = 1; j <= n; ++j) {
            CHECK(check_compat(build_block_H(n, j)));
            CHECK(check_compat(build_block_H(n, j, true)));
            for (std::size_t k = 1; k <= 4; ++k) {
                CHECK(check_compat(build_tower(n, j, k)));
                CHECK(check_compat(build_tower(n, j, k, true)));
            }
        }
}

TEST_CASE("check_compat rejects mismatched junctions") {
    PlumbingObject bad;
    bad.shape = PlumbingShape{2, PlumbingVariant::Core, true};
    bad.slots.resize(2);
    bad.slots[0].first.terms.push_back(Block(BlockKind::A, 2));
    bad.slots[0].second.terms.push_back(Block(BlockKind::A, 2));
    bad.slots[1].first.terms.push_back(Block(BlockKind::A, 3));
    bad.slots[1].second.terms.push_back(Block(BlockKind::A, 3));
    CHECK_FALSE(check_compat(bad));
}

TEST_CASE("build_tower layers") {
    // n=2, j=1, k=1: layer 0 = primed block, layer 1 = flip[1](wtilde)
    PlumbingObject t = build_tower(2, 1, 1, true);
    REQUIRE(t.slots[0].first.terms.size() == 2);
    CHECK(t.slots[0].first.terms[0] == Block(BlockKind::P, 1));
    CHECK(t.slots[0].first.terms[1] == Block(BlockKind::OveP, 1, 1, {1 + 3}));
    CHECK(t.slots[1].first.terms[1] == Block(BlockKind::UndA, 1, 1, {3}));

    // k = 0 reduces to the block itself
    PlumbingObject t0 = build_tower(3, 2, 0);
    PlumbingObject b = build_block_H(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(t0.slots[i].first.terms == b.slots[i].first.terms);
        CHECK(t0.slots[i].second.terms == b.slots[i].second.terms);
    }
}

TEST_CASE("restrict_tower formula") {
    // i = j, u = 0: untwisted L_{s(j,j)}
    auto r = restrict_tower(4, 2, 2, 2);
    REQUIRE(r.size() == 3);
    CHECK(r[0].size == 2);
    CHECK(r[0].shift == 0);
    CHECK(r[0].twist == HalfTwist{0});

    // n=3, j=2 (wtilde = 2), i=1
    auto r2 = restrict_tower(3, 2, 2, 1);
    REQUIRE(r2.size() == 3);
    for (const auto& term : r2) CHECK(term.size == 1);
    CHECK(r2[0].twist == HalfTwist{1});
    CHECK(r2[1].twist == HalfTwist{5});
    CHECK(r2[2].twist == HalfTwist{9});
    CHECK(r2[1].shift == 1);

    auto r3 = restrict_tower(3, 2, 2, 1, Decoration::Ove);
    CHECK(r3[2].decorated == Decoration::Ove);
    CHECK(r3[1].decorated == Decoration::Plain);
}

TEST_CASE("restrict_tower matches slotwise restriction of the built tower") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 1; i <= n; ++i) {
                const std::size_t k = 3;
                PlumbingObject t = build_tower(n, j, k);
                auto expected = restrict_tower(n, j, k, i);
                const auto& terms = t.slots[i - 1].first.terms;
                REQUIRE(terms.size() == k + 1);
                for (std::size_t u = 0; u <= k; ++u) {
                    LocalSystemTerm lt = restrict_W(terms[u]);
                    CHECK(lt.size == expected[u].size);
                    CHECK(lt.shift == expected[u].shift);
                    CHECK(lt.twist == expected[u].twist);
                }
            }
}

TEST_CASE("endo_dim_core") {
    CHECK(endo_dim_core(3, 2, 2, 0, 0) == 1);
    CHECK(endo_dim_core(2, 1, 1, -1, -4) == 1);

    // n = 1: support exactly at (k, s) = (-m, -2m)
    for (int k = -6; k <= 2; ++k)
        for (int s = -14; s <= 2; ++s) {
            std::size_t expect = (k <= 0 && s == 2 * k) ? 1 : 0;
            CHECK(endo_dim_core(1, 1, 1, k, s) == expect);
        }

    // flip symmetry
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                for (int k = -3; k <= 0; ++k)
                    for (int s = -8; s <= 0; ++s)
                        CHECK(endo_dim_core(n, i, j, k, s) ==
                              endo_dim_core(n, n - i + 1, n - j + 1, k, s));
}

TEST_CASE("endo_dim_relcore") {
    CHECK(endo_dim_relcore(3, 2, 2, 0, 0) == 1);
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) {
                std::size_t total = 0;
                for (int s = -20; s <= 0; ++s) total += endo_dim_relcore(n, i, j, 0, s);
                CHECK(total == std::min(i, j));
                for (int k = -4; k <= 4; ++k)
                    if (k != 0)
                        for (int s = -8; s <= 0; ++s)
                            CHECK(endo_dim_relcore(n, i, j, k, s) == 0);
            }
}

TEST_CASE("endo_table") {
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable t = endo_table(n, PlumbingVariant::Core, 12, 12);
        CHECK(t.at(0, 0) == n);
        for (const auto& [key, dim] : t.entries) {
            auto [a, b] = key;
            CHECK(a >= 0);
            CHECK(b >= 0);
            if (a > 0) CHECK(b != 0);
            if (b > 0) CHECK(a != 0);
        }
    }

    BidegreeTable t1 = endo_table(1, PlumbingVariant::Core, 6, 12);
    BidegreeTable expect;
    for (int m = 0; m <= 6; ++m) expect.add(m, 2 * m, 1);
    CHECK(t1 == expect);

    // relcore: supported at a = b only (k = 0), totals min(i,j)
    for (std::size_t n = 1; n <= 6; ++n) {
        BidegreeTable t = endo_table(n, PlumbingVariant::Relcore, 12, 12);
        std::size_t total = 0;
        for (const auto& [key, dim] : t.entries) {
            CHECK(key.first == key.second);
            total += dim;
        }
        std::size_t expect_total = 0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j) expect_total += std::min(i, j);
        CHECK(total == expect_total);
    }
}

TEST_CASE("unipotent_skyscraper_chain") {
    SkyscraperChain c1 = unipotent_skyscraper_chain(1, 4, 2);
    REQUIRE(c1.junctions.size() == 3);
    CHECK(c1.junctions[0].first.is_zero());              // can = y = 0
    CHECK(c1.junctions[0].second == Matrix::identity(1));
    CHECK(c1.junctions[1].first == Matrix::identity(1));  // right of center

    SkyscraperChain c2 = unipotent_skyscraper_chain(2, 3, 2);
    Matrix y2(2, 2);
    y2(1, 0) = Rational(1);
    CHECK(c2.junctions[0].first == y2);
    CHECK(c2.junctions[1].second == y2);

    // junction tuples decompose as single A/B blocks
    for (std::size_t N = 1; N <= 4; ++N) {
        SkyscraperChain c = unipotent_skyscraper_chain(N, 5, 3);
        for (std::size_t t = 0; t < c.junctions.size(); ++t) {
            const auto& [can, var] = c.junctions[t];
            NormalForm nf = decompose(MonodromicTuple(N, N, can, var));
            REQUIRE(nf.blocks.size() == 1);
            BlockKind expect = t + 1 < c.center ? BlockKind::B : BlockKind::A;
            CHECK(nf.blocks[0].kind == expect);
            CHECK(nf.blocks[0].size == N);
        }
    }
}
