#include "chow/case_studies.hpp"

#include "chow/chern.hpp"
#include "chow/rank_locus.hpp"
#include "chow/variety.hpp"

#include <doctest.h>

using namespace chow;

TEST_CASE("bidegree intersection numbers for the double-cover model") {
    auto rep = secant_geometry_numbers();
    CHECK(rep.ramification_degree == 18);
    CHECK(rep.surface_degree == 15);
    CHECK(rep.double_class_number == 60);
    CHECK(rep.multiplicity == 4);
    CHECK(rep.divisor_degree == 10);
    CHECK(rep.quintic_degree == 5);

    CHECK(rep.double_class_number == rep.multiplicity * rep.surface_degree);
    CHECK(BigInt(2) * rep.divisor_degree == BigInt(4) * rep.quintic_degree);
    CHECK(rep.quintic_degree == rank_locus_degree(4, 5));
}

TEST_CASE("conic bundle has no rational section") {
    auto rep = conic_obstruction();
    CHECK(rep.zeta14 == 0);
    CHECK(abs_big(rep.zeta13_g) == 20);
    CHECK(rep.fiber_count == 10);
    CHECK(!rep.section_equation_solvable);
}

TEST_CASE("two-path equality for the top bundle power") {
    // integral of zeta^14 over P(E) equals the top Chern number of
    // Sym^2 U^dual over Gr(3,5), since s(E) = c(Sym^2 U^dual)
    GrassmannianRing ring(3, 5);
    ChernData<GrassmannianRing> sub_dual;
    sub_dual.rank = 3;
    sub_dual.c = detail::zero_components(ring);
    auto sd = tautological_chern<BigRat>(ring.spec(), Tautological::DualSubbundle);
    for (std::size_t i = 0; i < sd.size(); ++i) sub_dual.c[i] = sd[i];
    auto sym = sym2(ring, sub_dual);
    CHECK(sym.rank == 6);
    auto rep = conic_obstruction();
    CHECK(BigRat(rep.zeta14) == ring.integrate(sym.c.at(6)));
    // and the via-segre route: s_5(E) sigma_1 gives the same pairing as
    // zeta^13 sigma_1
    auto e = whitney_quotient(ring, trivial_chern(ring, 15), sym);
    auto segre = segre_classes(ring, e);
    for (std::size_t j = 0; j <= 6; ++j)
        CHECK(ring.is_zero(ring.sub(segre[j], sym.c[j]))); // s(E) = c(Sym^2 U*)
    CHECK(BigRat(rep.zeta13_g) == ring.integrate(ring.mul(segre.at(5), ring.sigma(Partition{1}))));
}

TEST_CASE("ruled-surface parity invariant") {
    CHECK(ruled_sigma(1, 0) == 1);
    CHECK(ruled_sigma(0, 0) == 0);
    for (int k = -5; k <= 5; ++k) {
        CHECK(ruled_sigma(2, k) == 0);
        for (int a = 0; a <= 6; ++a) CHECK(ruled_sigma(a, k) == a % 2);
    }
    CHECK_THROWS_AS(ruled_sigma(-1, 0), Error);
}

TEST_CASE("hodge chain for the fourfold") {
    auto rep = fourfold_hodge_chain();
    CHECK(rep.k_t_squared == 70);
    CHECK(rep.chi_o_t == 20);
    CHECK(rep.chi_top_t == 170);
    CHECK(rep.k_s_squared == 35);
    CHECK(rep.chi_top_s == 85);
    CHECK(rep.chi_o_s == 10);
    CHECK(rep.h20_s == 9);
    CHECK(rep.h11_s == 65);
    CHECK(rep.h13_x == 9);
    CHECK(rep.h22_x == 67);
    CHECK(rep.h12_x == 0);
    CHECK(rep.h4_degree == 10);

    // two-path equality: the top-chern-class route equals Noether
    CHECK(rep.chi_top_t == BigInt(12) * rep.chi_o_t - rep.k_t_squared);
}
