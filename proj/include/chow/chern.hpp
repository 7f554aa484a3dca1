#pragma once

#include "chow/numeric.hpp"
#include "chow/rings.hpp"

#include <vector>

namespace chow {

/// Rank plus total Chern class of a sheaf, split by degree. Component 0 is
/// always the unit. Components can exceed the honest vanishing range when
/// the data arises from a formal quotient; everything is truncated at the
/// ambient dimension.
template <typename R>
    requires IntersectionRing<R>
struct ChernData {
    int rank = 0;
    std::vector<typename R::Elem> c; // degree 0 .. ring dimension

    typename R::Elem total(const R& ring) const {
        auto t = ring.zero();
        for (const auto& x : c) t = ring.add(t, x);
        return t;
    }

    const typename R::Elem& component(std::size_t i) const { return c.at(i); }
};

/// Chern character data: exact rational components by degree; the degree-0
/// part is the rank (as a rational multiple of the unit).
template <typename R>
    requires IntersectionRing<R>
struct CharacterData {
    BigRat rank0;
    std::vector<typename R::Elem> comp; // degree 0 .. ring dimension
};

namespace detail {

template <typename R>
std::vector<typename R::Elem> zero_components(const R& ring) {
    return std::vector<typename R::Elem>(static_cast<std::size_t>(ring.dimension()) + 1,
                                         ring.zero());
}

/// Degree-wise product of two component lists, truncated at the cap.
template <typename R>
std::vector<typename R::Elem> mul_components(const R& ring,
                                             const std::vector<typename R::Elem>& a,
                                             const std::vector<typename R::Elem>& b) {
    auto out = zero_components(ring);
    for (std::size_t d = 0; d < out.size(); ++d)
        for (std::size_t i = 0; i <= d; ++i)
            out[d] = ring.add(out[d], ring.mul(a[i], b[d - i]));
    return out;
}

} // namespace detail

template <typename R>
ChernData<R> trivial_chern(const R& ring, int rank) {
    ChernData<R> out;
    out.rank = rank;
    out.c = detail::zero_components(ring);
    out.c[0] = ring.one();
    return out;
}

/// Chern data of a line bundle with the given first Chern class.
template <typename R>
ChernData<R> line_bundle(const R& ring, const typename R::Elem& c1) {
    auto out = trivial_chern(ring, 1);
    if (ring.dimension() >= 1) out.c[1] = ring.degree_part(c1, 1);
    return out;
}

template <typename R>
ChernData<R> whitney_sum(const R& ring, const ChernData<R>& a, const ChernData<R>& b) {
    ChernData<R> out;
    out.rank = a.rank + b.rank;
    out.c = detail::mul_components(ring, a.c, b.c);
    return out;
}

/// Formal quotient: the q with sub * q = total, by series division;
/// rank(total) - rank(sub). The degree-0 component of the divisor must be
/// the unit.
template <typename R>
ChernData<R> whitney_quotient(const R& ring, const ChernData<R>& total, const ChernData<R>& sub) {
    if (ring.is_zero(sub.c.at(0)) || !ring.is_zero(ring.sub(sub.c.at(0), ring.one())))
        throw Error("whitney quotient: divisor has non-unit degree-0 component");
    ChernData<R> out;
    out.rank = total.rank - sub.rank;
    out.c = detail::zero_components(ring);
    out.c[0] = ring.one();
    for (std::size_t d = 1; d < out.c.size(); ++d) {
        auto acc = total.c[d];
        for (std::size_t i = 1; i <= d; ++i)
            acc = ring.sub(acc, ring.mul(sub.c[i], out.c[d - i]));
        out.c[d] = acc;
    }
    return out;
}

/// Total Segre class components: the formal inverse, s(E) c(E) = 1.
template <typename R>
std::vector<typename R::Elem> segre_classes(const R& ring, const ChernData<R>& e) {
    return whitney_quotient(ring, trivial_chern(ring, 0), e).c;
}

/// Dual bundle: c_i -> (-1)^i c_i.
template <typename R>
ChernData<R> dual(const R& ring, const ChernData<R>& e) {
    ChernData<R> out = e;
    for (std::size_t i = 1; i < out.c.size(); i += 2)
        out.c[i] = ring.scale(BigRat(-1), out.c[i]);
    return out;
}

/// Chern class to Chern character via Newton's identities between the
/// elementary symmetric functions and power sums of the Chern roots.
template <typename R>
CharacterData<R> chern_to_ch(const R& ring, const ChernData<R>& e) {
    const std::size_t cap = static_cast<std::size_t>(ring.dimension());
    std::vector<typename R::Elem> p(cap + 1, ring.zero()); // power sums
    for (std::size_t k = 1; k <= cap; ++k) {
        auto acc = ring.scale(BigRat(static_cast<int>(k)) * BigRat((k % 2 == 1) ? 1 : -1),
                              e.c[k]);
        for (std::size_t i = 1; i < k; ++i) {
            auto term = ring.mul(e.c[i], p[k - i]);
            acc = (i % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        p[k] = acc;
    }
    CharacterData<R> out;
    out.rank0 = BigRat(e.rank);
    out.comp = detail::zero_components(ring);
    out.comp[0] = ring.scale(out.rank0, ring.one());
    for (std::size_t k = 1; k <= cap; ++k)
        out.comp[k] = ring.scale(BigRat(1) / BigRat(factorial(static_cast<unsigned>(k))), p[k]);
    return out;
}

/// Inverse of chern_to_ch; the rank must be a nonnegative integer.
template <typename R>
ChernData<R> ch_to_chern(const R& ring, const CharacterData<R>& ch) {
    if (!is_integer(ch.rank0) || ch.rank0 < 0)
        throw Error("Chern character with non-integral or negative rank");
    const std::size_t cap = static_cast<std::size_t>(ring.dimension());
    std::vector<typename R::Elem> p(cap + 1, ring.zero());
    for (std::size_t k = 1; k <= cap; ++k)
        p[k] = ring.scale(BigRat(factorial(static_cast<unsigned>(k))), ch.comp[k]);
    ChernData<R> out;
    out.rank = static_cast<int>(to_integer(ch.rank0, "rank"));
    out.c = detail::zero_components(ring);
    out.c[0] = ring.one();
    for (std::size_t k = 1; k <= cap; ++k) {
        // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
        auto acc = ring.zero();
        for (std::size_t i = 1; i <= k; ++i) {
            auto term = ring.mul(out.c[k - i], p[i]);
            acc = (i % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
        }
        out.c[k] = ring.scale(BigRat(1) / BigRat(static_cast<int>(k)), acc);
    }
    return out;
}

/// Adams operation psi^k: scales the degree-i component by k^i.
template <typename R>
CharacterData<R> adams(int k, const R& ring, const CharacterData<R>& ch) {
    CharacterData<R> out = ch;
    BigRat factor(1);
    for (std::size_t i = 1; i < out.comp.size(); ++i) {
        factor *= k;
        out.comp[i] = ring.scale(factor, out.comp[i]);
    }
    return out;
}

template <typename R>
CharacterData<R> add_ch(const R& ring, const CharacterData<R>& a, const CharacterData<R>& b) {
    CharacterData<R> out;
    out.rank0 = a.rank0 + b.rank0;
    out.comp = detail::zero_components(ring);
    for (std::size_t i = 0; i < out.comp.size(); ++i)
        out.comp[i] = ring.add(a.comp[i], b.comp[i]);
    return out;
}

template <typename R>
CharacterData<R> mul_ch(const R& ring, const CharacterData<R>& a, const CharacterData<R>& b) {
    CharacterData<R> out;
    out.rank0 = a.rank0 * b.rank0;
    out.comp = detail::mul_components(ring, a.comp, b.comp);
    return out;
}

/// Symmetric square through the Chern character:
/// ch(Sym^2 E) = (ch(E)^2 + psi^2 ch(E)) / 2, converted back to Chern data.
/// The result must have integral components; anything else signals a bug.
template <typename R>
ChernData<R> sym2(const R& ring, const ChernData<R>& e) {
    auto ch = chern_to_ch(ring, e);
    auto sq = mul_ch(ring, ch, ch);
    auto psi2 = adams(2, ring, ch);
    CharacterData<R> half;
    half.rank0 = (sq.rank0 + psi2.rank0) / 2;
    half.comp = detail::zero_components(ring);
    for (std::size_t i = 0; i < half.comp.size(); ++i)
        half.comp[i] = ring.scale(BigRat(1, 2), ring.add(sq.comp[i], psi2.comp[i]));
    auto out = ch_to_chern(ring, half);
    for (const auto& comp : out.c)
        if (!ring.is_integral(comp))
            throw Error("sym2 produced a non-integral Chern class");
    return out;
}

namespace detail {

/// Coefficients q_j of the Todd series x / (1 - e^{-x}) = sum q_j x^j,
/// generated by inverting sum_m (-1)^m x^m / (m+1)!.
inline std::vector<BigRat> todd_series_coefficients(std::size_t cap) {
    std::vector<BigRat> a(cap + 1);
    for (std::size_t m = 0; m <= cap; ++m) {
        a[m] = BigRat(1) / BigRat(factorial(static_cast<unsigned>(m + 1)));
        if (m % 2 == 1) a[m] = -a[m];
    }
    std::vector<BigRat> q(cap + 1);
    q[0] = 1;
    for (std::size_t j = 1; j <= cap; ++j) {
        BigRat acc(0);
        for (std::size_t i = 1; i <= j; ++i) acc += a[i] * q[j - i];
        q[j] = -acc;
    }
    return q;
}

/// Coefficients of log(x / (1 - e^{-x})) = sum_{k>=1} L_k x^k.
inline std::vector<BigRat> todd_log_coefficients(std::size_t cap) {
    auto q = todd_series_coefficients(cap);
    // formal log: L = sum_{m>=1} (-1)^{m-1} (Q-1)^m / m
    std::vector<BigRat> log(cap + 1, BigRat(0));
    std::vector<BigRat> power(cap + 1, BigRat(0)); // (Q-1)^m, starts at m=1
    std::vector<BigRat> qm1 = q;
    qm1[0] = 0;
    power = qm1;
    for (std::size_t m = 1; m <= cap; ++m) {
        BigRat sign = (m % 2 == 1) ? BigRat(1) : BigRat(-1);
        for (std::size_t j = 0; j <= cap; ++j) log[j] += sign / BigRat(static_cast<int>(m)) * power[j];
        // next power
        std::vector<BigRat> next(cap + 1, BigRat(0));
        for (std::size_t i = 0; i <= cap; ++i)
            for (std::size_t j = 0; i + j <= cap; ++j) next[i + j] += power[i] * qm1[j];
        power = next;
    }
    return log;
}

} // namespace detail

/// Todd class components of a bundle with the given Chern data, computed as
/// exp(sum_k L_k p_k) from the power sums of the Chern roots.
template <typename R>
std::vector<typename R::Elem> todd_components(const R& ring, const ChernData<R>& tangent) {
    const std::size_t cap = static_cast<std::size_t>(ring.dimension());
    auto ch = chern_to_ch(ring, tangent);
    auto logc = detail::todd_log_coefficients(cap);
    // u = sum_k L_k p_k with p_k = k! ch_k
    auto u = detail::zero_components(ring);
    for (std::size_t k = 1; k <= cap; ++k)
        u[k] = ring.scale(logc[k] * BigRat(factorial(static_cast<unsigned>(k))), ch.comp[k]);
    // exp(u), truncated: u has no degree-0 part
    auto out = detail::zero_components(ring);
    out[0] = ring.one();
    auto power = u;
    BigRat invfact(1);
    for (std::size_t m = 1; m <= cap; ++m) {
        invfact /= static_cast<int>(m);
        for (std::size_t d = 0; d <= cap; ++d)
            out[d] = ring.add(out[d], ring.scale(invfact, power[d]));
        if (m < cap) power = detail::mul_components(ring, power, u);
    }
    return out;
}

/// Todd class as a single (mixed-degree) element.
template <typename R>
typename R::Elem todd_total(const R& ring, const ChernData<R>& tangent) {
    auto parts = todd_components(ring, tangent);
    auto t = ring.zero();
    for (const auto& x : parts) t = ring.add(t, x);
    return t;
}

/// Euler characteristic by Riemann-Roch: integral of ch(sheaf) td(tangent).
/// The tangent rank must equal the ring dimension and the result must be an
/// exact integer.
template <typename R>
BigInt hrr_chi(const R& ring, const CharacterData<R>& sheaf, const ChernData<R>& tangent) {
    if (tangent.rank != ring.dimension())
        throw Error("Riemann-Roch needs tangent rank equal to the variety dimension");
    auto td = todd_components(ring, tangent);
    auto prod = detail::mul_components(ring, sheaf.comp, td);
    BigRat total(0);
    for (const auto& x : prod) total += ring.integrate(x);
    return to_integer(total, "Euler characteristic");
}

/// Topological Euler characteristic by the top Chern class.
template <typename R>
BigInt chi_top(const R& ring, const ChernData<R>& tangent, int dim) {
    if (dim < 0 || dim > ring.dimension()) throw Error("invalid dimension for chi_top");
    return to_integer(ring.integrate(tangent.c.at(static_cast<std::size_t>(dim))),
                      "topological Euler characteristic");
}

/// Chern character of a line bundle exp(c1).
template <typename R>
CharacterData<R> ch_line(const R& ring, const typename R::Elem& c1) {
    return chern_to_ch(ring, line_bundle(ring, c1));
}

} // namespace chow
