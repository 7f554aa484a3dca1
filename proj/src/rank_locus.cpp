#include "chow/rank_locus.hpp"

#include "chow/chern.hpp"
#include "chow/rings.hpp"
#include "chow/schubert.hpp"

#include <sstream>

namespace chow {

RankLocusSpec::RankLocusSpec(int r_, int n_, int c_) : r(r_), n(n_), c(c_) {
    if (r < 2 || r % 2 != 0) throw Error("rank must be even and at least 2");
    if (n < r) throw Error("need n >= r");
    if (c < 0 || BigInt(c) > rank_locus_dimension(r, n))
        throw Error("section count must lie between 0 and dim Z");
}

BigInt rank_locus_dimension(int r, int n) {
    if (r < 0 || r > n) throw Error("rank out of range");
    // rn - r^2/2 + r/2 - 1
    return BigInt(r) * n - BigInt(r) * (r - 1) / 2 - 1;
}

BigInt rank_locus_degree_product_formula(int r, int n) {
    if (r < 1 || r > n) throw Error("rank out of range");
    BigRat acc(1);
    for (int i = 0; i < n - r; ++i)
        acc *= BigRat(binomial(n + i, n - r - i), binomial(2 * i + 1, i));
    return to_integer(acc, "rank locus degree");
}

BigInt rank_locus_degree(int r, int n) {
    if (r < 1 || r > n) throw Error("rank out of range");
    if (r == n) return 1; // the whole space of quadrics
    const int k = n - r; // Gr(k, n), the kernel planes
    if (k * r > 12) throw Error("rank locus degree: Grassmannian dimension exceeds desk scale");

    GrassmannianRing ring(k, n);
    // Q = V/L is the rank-r tautological quotient; the desingularization is
    // the bundle of quadrics on Q, i.e. P(Sym^2 Q^dual), and the degree is
    // the Segre class of Sym^2 Q^dual in degree dim Gr = k r.
    ChernData<GrassmannianRing> quot;
    quot.rank = tautological_rank(ring.spec(), Tautological::Quotient);
    quot.c = detail::zero_components(ring);
    auto qt = tautological_chern<BigRat>(ring.spec(), Tautological::Quotient);
    for (std::size_t i = 0; i < qt.size() && i < quot.c.size(); ++i) quot.c[i] = qt[i];

    auto sym = sym2(ring, dual(ring, quot));
    auto segre = segre_classes(ring, sym);
    return to_integer(ring.integrate(segre.at(static_cast<std::size_t>(k * r))),
                      "rank locus degree");
}

LunaSliceData luna_slice(int r, int n) {
    if (r < 4) throw Error("slice data applies to r >= 4 (the rank-2 cover is smooth)");
    if (r % 2 != 0 || r > n) throw Error("need even r with 4 <= r <= n");
    LunaSliceData out;
    out.weight_plus = n - r + 2;
    out.weight_minus = n - r + 2;
    out.cone_factor_dim = n - r + 1;
    out.cone_dim = BigInt(2) * (n - r + 1) + 1;
    out.trivial_dim = rank_locus_dimension(r, n) - out.cone_dim;
    std::ostringstream os;
    os << "affine cone over the Segre embedding of P^" << out.cone_factor_dim << " x P^"
       << out.cone_factor_dim;
    out.cone_description = os.str();
    return out;
}

LefschetzRange lefschetz_range(int r, int n, int c) {
    LefschetzRange out;
    BigInt dim_w = rank_locus_dimension(r, n);
    BigInt affine = BigInt(2) * n - 1;
    out.range = std::min(affine, BigInt(dim_w - c));
    out.stratum_codim = n - r + 2;
    out.affine_bound = 2 * out.stratum_codim - 1;
    return out;
}

std::string smoothness_name(Smoothness s) {
    switch (s) {
        case Smoothness::Smooth: return "smooth";
        case Smoothness::IsolatedSingularities: return "isolated singularities";
        case Smoothness::Singular: return "singular";
    }
    return "?";
}

std::string kodaira_name(KodairaType k) {
    switch (k) {
        case KodairaType::Fano: return "Fano";
        case KodairaType::CalabiYau: return "Calabi-Yau";
        case KodairaType::GeneralType: return "general type";
    }
    return "?";
}

PlannerReport plan(const RankLocusSpec& spec) {
    const int r = spec.r, n = spec.n, c = spec.c;
    PlannerReport rep{spec};

    rep.dim_z = rank_locus_dimension(r, n);
    rep.dim_w = rep.dim_z;
    rep.dim_x = rep.dim_z - c;

    if ((n - r) * r <= 12) {
        rep.deg_z = rank_locus_degree(r, n);
        rep.deg_z_method = "Segre pushforward over Gr(n-r, n), cross-checked by product formula";
        if (*rep.deg_z != rank_locus_degree_product_formula(r, n))
            throw Error("degree routes disagree");
    } else {
        rep.deg_z = rank_locus_degree_product_formula(r, n);
        rep.deg_z_method = "closed product formula (independent of the pushforward route)";
    }

    rep.k_coefficient = BigInt(c) - BigInt(r) * n / 2;
    rep.kodaira = rep.k_coefficient < 0   ? KodairaType::Fano
                  : rep.k_coefficient == 0 ? KodairaType::CalabiYau
                                           : KodairaType::GeneralType;

    // The cover W is singular exactly along the preimage of the rank-(r-2)
    // stratum (for r >= 4); a general c-fold section misses it iff
    // c > dim Zbar_{r-2,n}, and meets it in points at equality.
    BigInt sing_dim = rank_locus_dimension(r - 2, n);
    rep.singular_locus_dim = sing_dim;
    if (r == 2 || BigInt(c) > sing_dim) rep.smoothness = Smoothness::Smooth;
    else if (BigInt(c) == sing_dim) rep.smoothness = Smoothness::IsolatedSingularities;
    else rep.smoothness = Smoothness::Singular;

    rep.torsion_window_applies = (r == 4);
    rep.torsion_window = (r == 4) && c <= 4 * n - 11;
    rep.obstruction_window = (r == 4) && c <= 4 * n - 13;

    if (r == 4 && c == 2 * n - 1 && n >= 6) {
        rep.coniveau_verdict =
            "strong coniveau differs from coniveau in degree 3: the torsion class is supported "
            "on a divisor but is not a pushforward from a smooth divisor (its square is nonzero "
            "mod 2)";
    } else {
        rep.coniveau_verdict = "no claim for these parameters";
    }

    if (r >= 4) rep.luna = luna_slice(r, n);
    rep.lefschetz = lefschetz_range(r, n, c);

    if (r == 4 && c == 2 * n - 1)
        rep.annotations.push_back(
            "general section with c = 2n - 1: a smooth Fano of dimension 2n - 6 with K = -H and "
            "2-torsion in degree-3 integral cohomology");
    if (r == 4 && c == 2 * n - 2) {
        rep.annotations.push_back(
            "c = 2n - 2 case: isolated singular points on the rank-2 stratum, K = -2H; blowing "
            "them up keeps 2-torsion in degree-3 cohomology and the variety is unirational but "
            "not stably rational");
        if (n == 4)
            rep.annotations.push_back(
                "n = 4: the classical Artin-Mumford double solid, a double cover of P^3 branched "
                "over a 10-nodal quartic");
    }
    if (r == 4 && n == 4 && (c == 4 || c == 5))
        rep.annotations.push_back(
            "n = 4 with c < 6: the blow-up of the singular locus has torsion-free degree-3 "
            "cohomology (zero when c = 4), so no torsion invariant survives");
    if (r == 4 && n == 5 && c == 9)
        rep.annotations.push_back(
            "minimal Fano fourfold: the obstruction window fails and the square of the torsion "
            "class is in fact zero mod 2, so no strong-coniveau conclusion follows");

    auto cite = [&](const std::string& value, const std::string& citation) {
        rep.cited_fields.push_back({value, citation});
    };
    cite("dim Z = " + rep.dim_z.str(),
         "dimension of the rank-r locus of quadrics in n variables: rn - r(r-1)/2 - 1");
    cite("dim W = " + rep.dim_w.str(), "the double cover is finite over the closed rank locus");
    cite("dim X = " + rep.dim_x.str(), "each general hyperplane section drops the dimension by 1");
    if (rep.deg_z) cite("deg Z = " + rep.deg_z->str(), rep.deg_z_method);
    cite("K_X = " + rep.k_coefficient.str() + " H",
         "adjunction on the cover: K_W = -(rn/2) H, each section adds H");
    cite(kodaira_name(rep.kodaira), "sign of the canonical coefficient c - rn/2");
    cite(smoothness_name(rep.smoothness),
         "the singular locus of W is the preimage of the rank-(r-2) stratum; general sections "
         "miss it iff c exceeds its dimension " + sing_dim.str());
    if (rep.torsion_window_applies)
        cite(std::string("torsion window (H^3 = Z/2 on the smooth locus): ") +
                 (rep.torsion_window ? "satisfied" : "not satisfied"),
             "classifying-space comparison holds for c <= 4n - 11");
    else
        cite("torsion window: no claim", "the comparison argument is made for rank 4 only");
    cite(std::string("obstruction window (nonzero square mod 2): ") +
             (rep.obstruction_window ? "satisfied" : "not satisfied"),
         "degree-6 comparison needs c <= 4n - 13");
    cite("coniveau: " + rep.coniveau_verdict,
         "nonzero square mod 2 obstructs strong coniveau >= 1 for the degree-3 torsion class");
    if (rep.luna)
        cite("slice weights (" + std::to_string(rep.luna->weight_plus) + ", " +
                 std::to_string(rep.luna->weight_minus) + "), M = " + rep.luna->trivial_dim.str() +
                 ", " + rep.luna->cone_description,
             "torus weights on the slice at the deepest stratum; M derived from dim W - dim cone");
    cite("comparison range N = " + rep.lefschetz.range.str(),
         "min(2n - 1, dim W - c); the affine complement bound alone gives isomorphisms below " +
             std::to_string(rep.lefschetz.affine_bound) + " (stratum codimension " +
             std::to_string(rep.lefschetz.stratum_codim) + ")");
    return rep;
}

} // namespace chow
