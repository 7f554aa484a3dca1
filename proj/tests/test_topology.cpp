#include "chow/topology.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace chow;

namespace {

PolyF2 random_sw(oracles::Rng& rng, const SwRing& ring, int max_degree = 10) {
    PolyF2 p = ring.zero();
    int terms = rng.uniform(1, 4);
    for (int t = 0; t < terms; ++t) {
        PolyF2 mono = ring.one();
        int degree = 0;
        while (degree < max_degree) {
            int pick = rng.uniform(0, 3);
            if (pick == 0) break;
            int w = pick + 1; // 2, 3 or 4
            if (degree + w > max_degree) break;
            mono *= ring.w(w);
            degree += w;
        }
        p += mono;
    }
    return p;
}

} // namespace

TEST_CASE("steenrod squares on generators") {
    SwRing ring;
    CHECK(ring.sq(1, ring.w(2)) == ring.w(3));
    CHECK(ring.sq(1, ring.w(3)).is_zero()); // w1 w3 with w1 = 0
    CHECK(ring.sq(1, ring.w(4)).is_zero()); // w5 vanishes in rank 4
    CHECK(ring.sq(2, ring.w(3)) == ring.w(2) * ring.w(3));
    CHECK(ring.sq(3, ring.w(3)) == ring.w(3) * ring.w(3));
    CHECK(ring.sq(2, ring.w(2)) == ring.w(2) * ring.w(2));
    CHECK(ring.sq(4, ring.w(4)) == ring.w(4) * ring.w(4));
    CHECK(ring.sq(3, ring.w(4)) == ring.w(3) * ring.w(4));
}

TEST_CASE("squares in top degree, zero above, identity at zero") {
    oracles::Rng rng(777);
    SwRing ring;
    for (int trial = 0; trial < 120; ++trial) {
        auto x = random_sw(rng, ring);
        CHECK(ring.sq(0, x) == x);
        // monomial checks
        for (const auto& [m, c] : x.terms()) {
            (void)c;
            PolyF2 mono(ring.spec());
            mono.add_term(m, F2(1));
            int d = ring.spec()->degree(m);
            CHECK(ring.sq(d, mono) == mono * mono);
            CHECK(ring.sq(d + 1, mono).is_zero());
            CHECK(ring.sq(d + 5, mono).is_zero());
        }
    }
}

TEST_CASE("cartan formula on random pairs") {
    oracles::Rng rng(424243);
    SwRing ring;
    for (int trial = 0; trial < 110; ++trial) {
        auto x = random_sw(rng, ring, 6);
        auto y = random_sw(rng, ring, 6);
        for (int i = 0; i <= 6; ++i) {
            PolyF2 rhs = ring.zero();
            for (int j = 0; j <= i; ++j) rhs += ring.sq(j, x) * ring.sq(i - j, y);
            CHECK(ring.sq(i, x * y) == rhs);
        }
    }
}

TEST_CASE("square nonvanishing") {
    SwRing ring;
    CHECK(ring.square_nonvanishing(ring.w(3)));
    CHECK(!ring.square_nonvanishing(ring.zero()));
    CHECK(ring.square_nonvanishing(ring.w(2) + ring.w(3)));
}

TEST_CASE("torsion ring arithmetic") {
    auto nu = TorsionRingElement::nu();
    auto e = TorsionRingElement::euler();
    auto p = TorsionRingElement::pontryagin();

    CHECK((nu + nu).is_zero());                       // 2 nu = 0
    CHECK(!(nu * nu).is_zero());                      // nu^2 has order 2
    CHECK((nu * nu + nu * nu).is_zero());
    CHECK(!(TorsionRingElement::term(0, 1, 0, 2)).is_zero()); // 2e survives
    CHECK((nu * TorsionRingElement::term(0, 0, 0, 2)).is_zero()); // nu * 2 = 0
    CHECK((e * p).str() == "e*p");
    CHECK((nu * e * p).str() == "nu*e*p");
}

TEST_CASE("mod-2 reduction sends nu^2 to w3^2") {
    SwRing ring;
    auto nu = TorsionRingElement::nu();
    CHECK(reduce_mod2(ring, nu) == ring.w(3));
    CHECK(reduce_mod2(ring, nu * nu) == ring.w(3) * ring.w(3));
    CHECK(!reduce_mod2(ring, nu * nu).is_zero());
    CHECK(reduce_mod2(ring, TorsionRingElement::euler()) == ring.w(4));
    CHECK(reduce_mod2(ring, TorsionRingElement::pontryagin()) == ring.w(2) * ring.w(2));
    CHECK(reduce_mod2(ring, TorsionRingElement::term(0, 1, 0, 2)).is_zero()); // 2e maps to 0
}

TEST_CASE("cohomology table of the special orthogonal classifying space") {
    CHECK(bso4_group(0) == FGAbelianGroup::free(1));
    CHECK(bso4_group(1) == FGAbelianGroup::zero());
    CHECK(bso4_group(2) == FGAbelianGroup::zero());
    CHECK(bso4_group(3) == FGAbelianGroup::cyclic(2));
    CHECK(bso4_group(4) == FGAbelianGroup::free(2));
    CHECK(bso4_group(5) == FGAbelianGroup::zero());
    CHECK(bso4_group(6) == FGAbelianGroup::cyclic(2));
    CHECK(bso4_group(7) == FGAbelianGroup(0, {2, 2})); // nu e, nu p
    CHECK(bso4_group(8) == FGAbelianGroup::free(3));   // e^2, e p, p^2
    CHECK_THROWS_AS(bso4_group(9), Error);
    CHECK_THROWS_AS(bso4_group(-1), Error);
}

TEST_CASE("group presentations in canonical form") {
    IntegerMatrix rel = IntegerMatrix::from_rows({{2, 0}, {0, 0}});
    auto g = FGAbelianGroup::from_presentation(rel);
    CHECK(g.free_rank == 1);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 2);
    CHECK(g.str() == "Z + Z/2");
    CHECK(FGAbelianGroup::free(2).str() == "Z^2");
    CHECK_THROWS_AS(FGAbelianGroup(0, {4, 2}), Error); // not a divisibility chain
}

TEST_CASE("exactness of short sequences") {
    auto Z = FGAbelianGroup::free(1);
    auto Z2 = FGAbelianGroup::cyclic(2);
    auto O = FGAbelianGroup::zero();

    auto seq = [&](BigInt mult) {
        ExactSequenceInstance s;
        s.groups = {O, Z, Z, Z2, O};
        s.maps.resize(4);
        s.maps[0] = IntegerMatrix(1, 0);
        s.maps[1] = IntegerMatrix(1, 1);
        s.maps[1].at(0, 0) = mult;
        s.maps[2] = IntegerMatrix(1, 1);
        s.maps[2].at(0, 0) = 1; // reduction
        s.maps[3] = IntegerMatrix(0, 1);
        return s;
    };
    CHECK(check_exact(seq(2)));
    CHECK(!check_exact(seq(1))); // reduction kills all of the image of x1
    CHECK(!check_exact(seq(4)));
}

TEST_CASE("exactness agrees with finite enumeration") {
    // random length-4 sequences of small cyclic groups with random maps;
    // compositions that fail to vanish are skipped
    oracles::Rng rng(1945);
    int compared = 0;
    while (compared < 100) {
        std::vector<BigInt> orders = {BigInt(rng.uniform(2, 4)), BigInt(rng.uniform(2, 4)),
                                      BigInt(rng.uniform(2, 4))};
        ExactSequenceInstance s;
        s.groups = {FGAbelianGroup::zero(), FGAbelianGroup::cyclic(orders[0]),
                    FGAbelianGroup::cyclic(orders[1]), FGAbelianGroup::cyclic(orders[2])};
        s.maps.resize(3);
        s.maps[0] = IntegerMatrix(1, 0);
        s.maps[1] = IntegerMatrix(1, 1);
        s.maps[2] = IntegerMatrix(1, 1);
        // well-definedness needs order(src) * entry = 0 mod order(dst)
        auto pick_entry = [&](const BigInt& src, const BigInt& dst) -> std::optional<BigInt> {
            for (int attempt = 0; attempt < 12; ++attempt) {
                BigInt v = rng.uniform(0, 3);
                if ((src * v) % dst == 0) return v;
            }
            return std::nullopt;
        };
        auto e1 = pick_entry(orders[0], orders[1]);
        auto e2 = pick_entry(orders[1], orders[2]);
        if (!e1 || !e2) continue;
        s.maps[1].at(0, 0) = *e1;
        s.maps[2].at(0, 0) = *e2;
        if ((*e1 * *e2) % orders[2] != 0) continue; // not a complex
        CHECK(check_exact(s) == oracles::finite_exactness(s));
        ++compared;
    }
}

TEST_CASE("the circle-bundle window certifies the claimed groups") {
    auto seq = bgo4_gysin_instance();
    CHECK(check_exact(seq));

    // perturbing the claimed degree-3 group breaks exactness
    auto broken = seq;
    broken.groups[10] = FGAbelianGroup::cyclic(4);
    // the degree-3 comparison map Z/4 -> Z/2 with entry 1 is well defined
    // only after adjusting; use reduction
    CHECK(!check_exact(broken));
}

TEST_CASE("obstruction verdicts") {
    CHECK(coniveau_obstruction(true) == ConiveauVerdict::NotStrongConiveauOne);
    CHECK(coniveau_obstruction(false) == ConiveauVerdict::NoConclusion);
    CHECK(verdict_name(coniveau_obstruction(true)) == "not of strong coniveau >= 1");
    CHECK(verdict_name(coniveau_obstruction(false)) == "obstruction vanishes, no conclusion");
}
