#include "chow/case_studies.hpp"

#include "chow/chern.hpp"
#include "chow/rank_locus.hpp"
#include "chow/rings.hpp"
#include "chow/variety.hpp"


namespace chow {

SecantGeometryReport secant_geometry_numbers() {
    auto amb = projective_product({4, 5});
    const auto& ring = *amb.ring;
    auto h4 = amb.divisor("h1");
    auto h5 = amb.divisor("h2");
    auto one = ring.one();

    auto d11 = ring.add(h4, h5);
    std::vector<PolyQ> cutting(5, d11); // Y is a complete intersection of five (1,1)s
    auto e4 = ring.sub(ring.scale(BigRat(5), h4), h5);
    auto e5 = ring.add(ring.scale(BigRat(-2), h4), ring.scale(BigRat(4), h5));

    SecantGeometryReport rep;
    rep.ramification_degree = intersection_number_ci(amb, cutting, {h4, h4, h4, e5});
    rep.surface_degree = intersection_number_ci(amb, cutting, {h4, h4, e4, h5});
    rep.double_class_number = intersection_number_ci(amb, cutting, {h4, h4, e4, e5});
    if (rep.double_class_number % rep.surface_degree != 0)
        throw Error("class number is not a multiple of the surface degree");
    rep.multiplicity = rep.double_class_number / rep.surface_degree;
    rep.quintic_degree = intersection_number_ci(amb, cutting, {h5, h5, h5, h5});
    // 2 D_H is linearly equivalent to 4 H5 on Y, so D_H restricts to 2 H5
    rep.divisor_degree =
        intersection_number_ci(amb, cutting, {ring.scale(BigRat(2), h5), h5, h5, h5});

    rep.citations = {
        {"deg R = " + rep.ramification_degree.str(),
         "degree of the branch hypersurface in P^4: (1,0)^3 [E5] (1,1)^5"},
        {"deg S = " + rep.surface_degree.str(),
         "degree of the determinantal surface of singular points: (1,0)^2 [E4] (0,1) (1,1)^5"},
        {"(1,0)^2 [E4][E5] (1,1)^5 = " + rep.double_class_number.str(),
         "pairing the two exceptional classes over the surface"},
        {"multiplicity = " + rep.multiplicity.str(),
         "ratio of the previous number by deg S; the graph Y has this multiplicity along S"},
        {"deg D_H = " + rep.divisor_degree.str(),
         "half of 4 H5 restricted to the quintic image: the 2-torsion divisor class"},
    };
    return rep;
}

ConicObstructionReport conic_obstruction() {
    auto gr = grassmannian(3, 5);
    const auto& ring = *gr.ring;

    // E is the kernel of Sym^2 of the trivial dual 5-space mapping onto
    // Sym^2 U^dual, U the rank-3 tautological subbundle: rank 9, and
    // c(E) c(Sym^2 U^dual) = 1.
    ChernData<GrassmannianRing> sub_dual;
    sub_dual.rank = 3;
    sub_dual.c = detail::zero_components(ring);
    auto sd = tautological_chern<BigRat>(ring.spec(), Tautological::DualSubbundle);
    for (std::size_t i = 0; i < sd.size() && i < sub_dual.c.size(); ++i) sub_dual.c[i] = sd[i];
    auto sym = sym2(ring, sub_dual);
    auto e = whitney_quotient(ring, trivial_chern(ring, 15), sym);

    auto pe = projective_bundle(gr, e);
    const auto& bring = *pe.ring;
    auto zeta = pe.divisor("zeta");
    auto g = pe.divisor("sigma1");

    ConicObstructionReport rep;
    BigRat z14 = bring.integrate(power(bring, zeta, 14));
    BigRat z13g = bring.integrate(bring.mul(power(bring, zeta, 13), g));
    rep.zeta14 = to_integer(z14, "zeta^14");
    rep.zeta13_g = to_integer(z13g, "zeta^13 g");
    rep.fiber_count = double_cover_degree(rank_locus_degree(4, 5));

    // solvable iff gcd(zeta14, zeta13_g) divides the fiber count
    BigInt g0 = gcd_big(abs_big(rep.zeta14), abs_big(rep.zeta13_g));
    rep.section_equation_solvable = (g0 != 0) && (rep.fiber_count % g0 == 0);

    rep.citations = {
        {"zeta^14 = " + rep.zeta14.str(),
         "top self-intersection of the relative hyperplane class on the rank-9 bundle"},
        {"zeta^13 g = " + rep.zeta13_g.str(),
         "pairing against the Plucker class; a section divisor a L + b G meets L^13 in "
         "a zeta^14 + b zeta^13 g"},
        {"fiber count = " + rep.fiber_count.str(),
         "L^13 is represented by the fibers over the ten points of the double cover of the "
         "quintic cut by 13 hyperplanes"},
        {std::string("rational section: ") + (rep.section_equation_solvable ? "possible" : "none"),
         "integrality of the coefficient b fails, so the conic bundle has no rational section "
         "and the degree-3 torsion class is nonzero"},
    };
    return rep;
}

namespace {

// Divisor class x s + y f on the ruled surface F_a.
struct RuledClass {
    long long s = 0;
    long long f = 0;
};

// Intersection form: s^2 = -a, s.f = 1, f^2 = 0.
long long ruled_pairing(int a, RuledClass u, RuledClass v) {
    return u.s * v.s * static_cast<long long>(-a) + u.s * v.f + u.f * v.s;
}

} // namespace

int ruled_sigma(int a, int section_offset) {
    if (a < 0) throw Error("ruled surface index must be nonnegative");
    RuledClass section{1, section_offset};
    RuledClass relative_canonical{-2, -a};
    long long pairing = ruled_pairing(a, section, relative_canonical);
    return static_cast<int>(((pairing % 2) + 2) % 2);
}

FourfoldHodgeReport fourfold_hodge_chain() {
    auto amb = projective_product({4, 4});
    const auto& ring = *amb.ring;
    auto h1 = amb.divisor("h1");
    auto h2 = amb.divisor("h2");
    auto d11 = ring.add(h1, h2);
    std::vector<PolyQ> cutting(6, d11);

    FourfoldHodgeReport rep;
    auto k_t = adjunction_canonical(amb, cutting);
    rep.k_t_squared = intersection_number_ci(amb, cutting, {k_t, k_t});

    auto t = complete_intersection(amb, cutting);
    rep.chi_o_t = t.chi_structure_sheaf();
    rep.chi_top_t = t.euler_characteristic();
    if (BigInt(12) * rep.chi_o_t != rep.k_t_squared + rep.chi_top_t)
        throw Error("Noether check failed for the covering surface");

    BigInt chi_top_s = rep.chi_top_t, k_s_sq = rep.k_t_squared;
    etale_double_cover(CoverDirection::QuotientFromCover, chi_top_s, k_s_sq);
    rep.chi_top_s = chi_top_s;
    rep.k_s_squared = k_s_sq;

    auto s = surface_hodge(rep.k_s_squared, rep.chi_top_s, 0);
    rep.chi_o_s = s.chi_structure;
    rep.h20_s = s.h20;
    rep.h11_s = s.h11;

    // Derived-category identities: h^{1,3}(X) = h^{0,2}(S), h^{1,2}(X) =
    // h^{0,1}(S), and sum h^{i,i}(X) = sum h^{i,i}(S) + 4. The fourfold has
    // h^{0,0} = h^{1,1} = h^{3,3} = h^{4,4} = 1.
    rep.h13_x = rep.h20_s;
    rep.h12_x = s.irregularity;
    BigInt diag_s = 1 + rep.h11_s + 1;
    rep.h22_x = diag_s + 4 - 4;
    rep.h4_degree = double_cover_degree(rank_locus_degree(4, 5));

    rep.citations = {
        {"K_T^2 = " + rep.k_t_squared.str(),
         "adjunction on six (1,1) divisors in P^4 x P^4 gives K_T = (1,1), squared on T"},
        {"chi(O_T) = " + rep.chi_o_t.str(), "Riemann-Roch on the complete intersection model"},
        {"chi_top(T) = " + rep.chi_top_t.str(),
         "top Chern class of the complete intersection tangent; matches Noether"},
        {"(K_S^2, chi_top(S)) = (" + rep.k_s_squared.str() + ", " + rep.chi_top_s.str() + ")",
         "the covering involution is etale of degree 2, so both invariants halve"},
        {"(chi(O_S), h20, h11) = (" + rep.chi_o_s.str() + ", " + rep.h20_s.str() + ", " +
             rep.h11_s.str() + ")",
         "Noether and the standard surface Hodge relations with irregularity 0"},
        {"h^{1,3}(X) = " + rep.h13_x.str(),
         "the derived category of X decomposes into that of S plus four exceptional objects"},
        {"h^{2,2}(X) = " + rep.h22_x.str(),
         "diagonal Hodge numbers add up: sum over X equals sum over S plus 4"},
        {"H^4 = " + rep.h4_degree.str(),
         "top self-intersection doubles along the degree-2 cover of the quintic section"},
    };
    return rep;
}

} // namespace chow
