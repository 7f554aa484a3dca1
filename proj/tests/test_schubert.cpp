#include "chow/schubert.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace chow;

namespace {

SchubertClass sigma(const GrassmannianSpec& g, std::initializer_list<int> parts) {
    return SchubertClass::basis(g, Partition(parts));
}

bool matches_oracle(const SchubertClass& computed,
                    const std::map<Partition, BigInt>& expected) {
    if (computed.terms().size() != expected.size()) return false;
    for (const auto& [p, c] : expected)
        if (computed.coefficient(p) != c) return false;
    return true;
}

} // namespace

TEST_CASE("pieri in the 2x2 box") {
    GrassmannianSpec g(2, 4);
    auto s1 = sigma(g, {1});
    auto s11 = s1 * s1;
    CHECK(s11.coefficient(Partition{2}) == 1);
    CHECK(s11.coefficient(Partition{1, 1}) == 1);
    CHECK(s11.terms().size() == 2);

    CHECK(sigma(g, {2}) * sigma(g, {2}) == sigma(g, {2, 2}));
    CHECK(sigma(g, {2, 1}) * SchubertClass::one(g) == sigma(g, {2, 1}));
    CHECK(pieri<BigInt>(g, Partition{1}, 0) == sigma(g, {1}));
}

TEST_CASE("iterated products and integrals") {
    GrassmannianSpec g24(2, 4);
    auto s1 = sigma(g24, {1});
    auto quartic = s1 * s1 * s1 * s1;
    CHECK(quartic == BigInt(2) * sigma(g24, {2, 2}));
    CHECK(integrate_gr(quartic) == 2);
    CHECK(integrate_gr(s1) == 0);
    CHECK(integrate_gr(sigma(g24, {2, 2})) == 1);

    GrassmannianSpec g35(3, 5);
    auto t1 = sigma(g35, {1});
    SchubertClass p = SchubertClass::one(g35);
    for (int i = 0; i < 6; ++i) p = p * t1;
    CHECK(p == BigInt(5) * sigma(g35, {2, 2, 2}));
}

TEST_CASE("out-of-box partitions are rejected") {
    GrassmannianSpec g(2, 4);
    CHECK_THROWS_AS(sigma(g, {3}), Error);
    CHECK_THROWS_AS(sigma(g, {1, 1, 1}), Error);
    CHECK_THROWS_AS(pieri<BigInt>(g, Partition{3, 1}, 1), Error);
}

TEST_CASE("tautological Chern classes and the Whitney identity") {
    GrassmannianSpec g24(2, 4);
    auto quot = tautological_chern<BigInt>(g24, Tautological::Quotient);
    CHECK(quot.at(1) == sigma(g24, {1}));
    auto dual_sub = tautological_chern<BigInt>(g24, Tautological::DualSubbundle);
    CHECK(dual_sub.at(2) == sigma(g24, {1, 1}));

    for (auto spec : {GrassmannianSpec(2, 4), GrassmannianSpec(3, 5), GrassmannianSpec(2, 5)}) {
        auto sub = tautological_chern<BigInt>(spec, Tautological::Subbundle);
        auto q = tautological_chern<BigInt>(spec, Tautological::Quotient);
        auto total_sub = SchubertClass::zero(spec);
        for (const auto& x : sub) total_sub += x;
        auto total_q = SchubertClass::zero(spec);
        for (const auto& x : q) total_q += x;
        CHECK(total_sub * total_q == SchubertClass::one(spec));
    }
}

TEST_CASE("duality pairing across whole boxes") {
    int checked = 0;
    for (auto spec : {GrassmannianSpec(2, 4), GrassmannianSpec(2, 5), GrassmannianSpec(2, 6),
                      GrassmannianSpec(3, 5), GrassmannianSpec(3, 6)}) {
        auto all = all_partitions_in_box(spec.box_rows(), spec.box_width());
        for (const auto& lambda : all) {
            auto dual_part = lambda.complement_in_box(spec.box_rows(), spec.box_width());
            for (const auto& mu : all) {
                if (mu.weight() != spec.dimension() - lambda.weight()) continue;
                BigInt pairing = integrate_gr(SchubertClass::basis(spec, lambda) *
                                              SchubertClass::basis(spec, mu));
                CHECK(pairing == (mu == dual_part ? 1 : 0));
                ++checked;
            }
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("products agree with the symmetric-function model") {
    for (auto spec : {GrassmannianSpec(2, 4), GrassmannianSpec(2, 5)}) {
        auto all = all_partitions_in_box(spec.box_rows(), spec.box_width());
        for (const auto& a : all)
            for (const auto& b : all) {
                auto computed = SchubertClass::basis(spec, a) * SchubertClass::basis(spec, b);
                auto expected =
                    oracles::schur_product(a, b, spec.box_rows(), spec.box_width());
                CHECK(matches_oracle(computed, expected));
            }
    }
}

TEST_CASE("all product coefficients are nonnegative") {
    oracles::Rng rng(31415);
    int cases = 0;
    while (cases < 120) {
        int k = rng.uniform(2, 3);
        int n = k + rng.uniform(2, 3);
        GrassmannianSpec spec(k, n);
        auto a = oracles::random_partition_in_box(rng, k, n - k);
        auto b = oracles::random_partition_in_box(rng, k, n - k);
        auto prod = SchubertClass::basis(spec, a) * SchubertClass::basis(spec, b);
        for (const auto& [p, c] : prod.terms()) CHECK(c > 0);
        ++cases;
    }
}

TEST_CASE("top power of the hyperplane class counts standard tableaux") {
    for (auto spec : {GrassmannianSpec(2, 4), GrassmannianSpec(2, 5), GrassmannianSpec(2, 6),
                      GrassmannianSpec(2, 7), GrassmannianSpec(2, 8), GrassmannianSpec(3, 5),
                      GrassmannianSpec(3, 6), GrassmannianSpec(3, 7), GrassmannianSpec(4, 6),
                      GrassmannianSpec(1, 13)}) {
        REQUIRE(spec.dimension() <= 12);
        auto s1 = SchubertClass::basis(spec, Partition{1});
        SchubertClass p = SchubertClass::one(spec);
        for (int i = 0; i < spec.dimension(); ++i) p = p * s1;
        CHECK(integrate_gr(p) == oracles::hook_length_count(spec.top_class()));
    }
}

TEST_CASE("schubert text form") {
    GrassmannianSpec g(2, 4);
    CHECK(sigma(g, {2, 1}).str() == "s[2,1]");
    CHECK((sigma(g, {1}) * sigma(g, {1})).str() == "s[1,1] + s[2]");
    CHECK(SchubertClass::one(g).str() == "s[]");
    CHECK(SchubertClass::zero(g).str() == "0");
}
