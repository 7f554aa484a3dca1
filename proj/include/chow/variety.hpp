#pragma once

#include "chow/chern.hpp"
#include "chow/numeric.hpp"
#include "chow/rings.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace chow {

/// A variety modeled by an intersection ring, tangent Chern data and named
/// divisor classes. Complete intersections are modeled numerically: they
/// keep the ambient ring and fold the product of their defining divisors
/// into the integration functional.
template <typename R>
    requires IntersectionRing<R>
struct Variety {
    int dim = 0;
    std::shared_ptr<const R> ring;
    ChernData<R> tangent;
    std::map<std::string, typename R::Elem> divisors;
    typename R::Elem fundamental_factor; // product of cutting divisors; unit if none

    const typename R::Elem& divisor(const std::string& name) const {
        auto it = divisors.find(name);
        if (it == divisors.end()) throw Error("unknown divisor class: " + name);
        return it->second;
    }

    BigRat integrate_class(const typename R::Elem& x) const {
        return ring->integrate(ring->mul(fundamental_factor, x));
    }

    BigInt intersection_number(const typename R::Elem& x) const {
        return to_integer(integrate_class(x), "intersection number");
    }

    /// c1 of the canonical bundle, as minus the degree-1 part of c1(T).
    typename R::Elem canonical_class() const {
        return ring->scale(BigRat(-1), ring->degree_part(tangent.c.at(1), 1));
    }

    /// Euler characteristic of a sheaf given by its Chern character.
    BigInt chi_sheaf(const CharacterData<R>& sheaf) const {
        if (tangent.rank != dim)
            throw Error("Riemann-Roch needs tangent rank equal to the variety dimension");
        auto td = todd_components(*ring, tangent);
        auto prod = detail::mul_components(*ring, sheaf.comp, td);
        BigRat total(0);
        for (const auto& x : prod) total += integrate_class(x);
        return to_integer(total, "Euler characteristic");
    }

    BigInt chi_structure_sheaf() const {
        CharacterData<R> triv;
        triv.rank0 = 1;
        triv.comp = detail::zero_components(*ring);
        triv.comp[0] = ring->one();
        return chi_sheaf(triv);
    }

    /// Gauss-Bonnet: the integral of the top Chern class of the tangent.
    BigInt euler_characteristic() const {
        return to_integer(integrate_class(tangent.c.at(static_cast<std::size_t>(dim))),
                          "topological Euler characteristic");
    }
};

using ProductVariety = Variety<ProductRing>;
using GrassmannianVariety = Variety<GrassmannianRing>;

/// P^{n1} x ... x P^{nm} with hyperplane classes h1..hm (h for one factor).
inline ProductVariety projective_product(const std::vector<int>& dims) {
    auto ring = std::make_shared<const ProductRing>(dims);
    ProductVariety v;
    v.ring = ring;
    v.dim = ring->dimension();
    v.fundamental_factor = ring->one();
    // c(T) = prod_i (1 + h_i)^{n_i + 1}
    auto total = ring->one();
    for (std::size_t i = 0; i < dims.size(); ++i) {
        auto h = ring->hyperplane(i);
        auto f = ring->add(ring->one(), h);
        total = ring->mul(total, f.pow(static_cast<unsigned>(dims[i] + 1)));
        v.divisors.emplace("h" + std::to_string(i + 1), h);
    }
    v.tangent.rank = v.dim;
    v.tangent.c = detail::zero_components(*ring);
    for (int d = 0; d <= v.dim; ++d) v.tangent.c[static_cast<std::size_t>(d)] = total.degree_part(d);
    return v;
}

inline ProductVariety projective_space(int n) { return projective_product({n}); }

/// Gr(k, n) with its tangent bundle Hom(S, Q) computed through the Chern
/// character, and the Plucker class as divisor "sigma1".
inline GrassmannianVariety grassmannian(int k, int n) {
    auto ring = std::make_shared<const GrassmannianRing>(k, n);
    GrassmannianVariety v;
    v.ring = ring;
    v.dim = ring->dimension();
    v.fundamental_factor = ring->one();
    v.divisors.emplace("sigma1", ring->sigma(Partition{1}));

    ChernData<GrassmannianRing> sub_dual, quot;
    sub_dual.rank = tautological_rank(ring->spec(), Tautological::DualSubbundle);
    quot.rank = tautological_rank(ring->spec(), Tautological::Quotient);
    sub_dual.c = detail::zero_components(*ring);
    quot.c = detail::zero_components(*ring);
    auto sd = tautological_chern<BigRat>(ring->spec(), Tautological::DualSubbundle);
    auto qt = tautological_chern<BigRat>(ring->spec(), Tautological::Quotient);
    for (std::size_t i = 0; i < sd.size() && i < sub_dual.c.size(); ++i) sub_dual.c[i] = sd[i];
    for (std::size_t i = 0; i < qt.size() && i < quot.c.size(); ++i) quot.c[i] = qt[i];

    // T = S^dual tensor Q via ch
    auto ch_t = mul_ch(*ring, chern_to_ch(*ring, sub_dual), chern_to_ch(*ring, quot));
    v.tangent = ch_to_chern(*ring, ch_t);
    return v;
}

/// Projective bundle of lines P(E) -> base, rank >= 1. The new ring adjoins
/// zeta with the rewrite rule sum c_i(E) zeta^{r-i} = 0; integration pushes
/// forward to the base. Divisor classes of the base are pulled back under
/// their old names; "zeta" is added.
template <typename R>
Variety<BundleRing<R>> projective_bundle(const Variety<R>& base, const ChernData<R>& e) {
    if (e.rank < 1) throw Error("projective bundle needs rank >= 1");
    std::vector<typename R::Elem> chern(e.c.begin(),
                                        e.c.begin() + std::min<std::size_t>(e.c.size(),
                                                                            static_cast<std::size_t>(e.rank) + 1));
    auto ring = std::make_shared<const BundleRing<R>>(base.ring, e.rank, chern);
    Variety<BundleRing<R>> v;
    v.ring = ring;
    v.dim = ring->dimension();
    v.fundamental_factor = ring->pullback(base.fundamental_factor);
    for (const auto& [name, cls] : base.divisors) v.divisors.emplace(name, ring->pullback(cls));
    v.divisors.emplace("zeta", ring->zeta());

    // ch(T_{P(E)}) = ch(pullback T_base) + exp(zeta) ch(pullback E) - 1
    const auto& br = *ring;
    CharacterData<BundleRing<R>> ch_tb;
    {
        auto base_ch = chern_to_ch(*base.ring, base.tangent);
        ch_tb.rank0 = base_ch.rank0;
        ch_tb.comp = detail::zero_components(br);
        for (std::size_t i = 0; i < base_ch.comp.size() && i < ch_tb.comp.size(); ++i)
            ch_tb.comp[i] = ring->pullback(base_ch.comp[i]);
    }
    CharacterData<BundleRing<R>> ch_e;
    {
        auto ec = chern_to_ch(*base.ring, e);
        ch_e.rank0 = ec.rank0;
        ch_e.comp = detail::zero_components(br);
        for (std::size_t i = 0; i < ec.comp.size() && i < ch_e.comp.size(); ++i)
            ch_e.comp[i] = ring->pullback(ec.comp[i]);
    }
    auto ch_rel = mul_ch(br, ch_line(br, ring->zeta()), ch_e);
    ch_rel.rank0 -= 1;
    ch_rel.comp[0] = br.sub(ch_rel.comp[0], br.one());
    auto ch_total = add_ch(br, ch_tb, ch_rel);
    v.tangent = ch_to_chern(br, ch_total);
    return v;
}

/// Numerical complete intersection: same ring, smaller dimension, the
/// divisor product folded into integration, tangent modeled as the formal
/// quotient c(T_ambient) / prod (1 + D_i).
template <typename R>
Variety<R> complete_intersection(const Variety<R>& ambient,
                                 const std::vector<typename R::Elem>& cutting) {
    Variety<R> v = ambient;
    ChernData<R> normal = trivial_chern(*ambient.ring, 0);
    for (const auto& d : cutting) {
        v.fundamental_factor = v.ring->mul(v.fundamental_factor, d);
        normal = whitney_sum(*v.ring, normal, line_bundle(*v.ring, d));
        v.dim -= 1;
    }
    if (v.dim < 0) throw Error("complete intersection with negative dimension");
    v.tangent = whitney_quotient(*v.ring, ambient.tangent, normal);
    return v;
}

/// The canonical class of a complete intersection, as an ambient class:
/// K_ambient + sum D_i.
template <typename R>
typename R::Elem adjunction_canonical(const Variety<R>& ambient,
                                      const std::vector<typename R::Elem>& cutting) {
    auto k = ambient.canonical_class();
    for (const auto& d : cutting) k = ambient.ring->add(k, d);
    return k;
}

/// Exact intersection pairing on a numerical complete intersection:
/// integral over the ambient of prod(cutting) * prod(classes). The degrees
/// must add up to the ambient dimension.
template <typename R>
BigInt intersection_number_ci(const Variety<R>& ambient,
                              const std::vector<typename R::Elem>& cutting,
                              const std::vector<typename R::Elem>& classes) {
    int total_degree = 0;
    bool has_zero_factor = false;
    auto acc = ambient.ring->one();
    auto absorb = [&](const typename R::Elem& x) {
        if (ambient.ring->is_zero(x)) {
            has_zero_factor = true; // degree unconstrained, product vanishes
            return;
        }
        int d = 0;
        bool seen = false;
        for (int deg = 0; deg <= ambient.ring->dimension(); ++deg)
            if (!ambient.ring->is_zero(ambient.ring->degree_part(x, deg))) {
                if (seen) throw Error("intersection number needs homogeneous classes");
                d = deg;
                seen = true;
            }
        total_degree += d;
        acc = ambient.ring->mul(acc, x);
    };
    for (const auto& x : cutting) absorb(x);
    for (const auto& x : classes) absorb(x);
    if (has_zero_factor) return 0;
    if (total_degree != ambient.dim)
        throw Error("intersection number: degrees sum to " + std::to_string(total_degree) +
                    ", expected " + std::to_string(ambient.dim));
    return to_integer(ambient.ring->integrate(acc), "intersection number");
}

/// Hodge-theoretic invariants of a smooth projective surface.
struct SurfaceInvariants {
    BigInt k_squared;
    BigInt chi_topological;
    BigInt chi_structure;
    BigInt irregularity;
    BigInt h20;
    BigInt h11;
};

/// Derives the full invariant set from K^2, the topological Euler number
/// and the irregularity, via Noether's formula. Throws when 12 does not
/// divide K^2 + chi_top or a Hodge number comes out negative.
SurfaceInvariants surface_hodge(const BigInt& k_squared, const BigInt& chi_top,
                                const BigInt& irregularity);

enum class CoverDirection { QuotientFromCover, CoverFromQuotient };

/// Multiplicative bookkeeping for a degree-2 etale cover: the Euler number
/// and K^2 halve from the cover to the quotient (and double the other way).
/// Halving an odd number is an error.
void etale_double_cover(CoverDirection dir, BigInt& chi_top, BigInt& k_squared);

/// Canonical H-coefficient of a double cover with branch divisor class
/// b * H: K_cover = pullback(K_base + (b/2) H). b must be even.
BigInt ramified_cover_canonical_coefficient(const BigInt& base_k_coefficient, const BigInt& branch_h_coefficient);

/// Top self-intersection degree doubles under a degree-2 cover.
inline BigInt double_cover_degree(const BigInt& base_degree) { return 2 * base_degree; }

} // namespace chow
