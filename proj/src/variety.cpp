#include "chow/variety.hpp"

namespace chow {

SurfaceInvariants surface_hodge(const BigInt& k_squared, const BigInt& chi_top,
                                const BigInt& irregularity) {
    SurfaceInvariants s;
    s.k_squared = k_squared;
    s.chi_topological = chi_top;
    s.irregularity = irregularity;
    BigInt noether = k_squared + chi_top;
    if (noether % 12 != 0)
        throw Error("Noether's formula fails: 12 does not divide K^2 + chi_top = " +
                    noether.str());
    s.chi_structure = noether / 12;
    s.h20 = s.chi_structure - 1 + irregularity;
    s.h11 = chi_top - 2 + 4 * irregularity - 2 * s.h20;
    if (s.h20 < 0 || s.h11 < 0)
        throw Error("negative Hodge number for surface invariants");
    return s;
}

void etale_double_cover(CoverDirection dir, BigInt& chi_top, BigInt& k_squared) {
    if (dir == CoverDirection::CoverFromQuotient) {
        chi_top *= 2;
        k_squared *= 2;
        return;
    }
    if (chi_top % 2 != 0 || k_squared % 2 != 0)
        throw Error("etale double cover: invariants of the cover must be even");
    chi_top /= 2;
    k_squared /= 2;
}

BigInt ramified_cover_canonical_coefficient(const BigInt& base_k_coefficient,
                                            const BigInt& branch_h_coefficient) {
    if (branch_h_coefficient % 2 != 0)
        throw Error("branch divisor class must be 2-divisible");
    return base_k_coefficient + branch_h_coefficient / 2;
}

} // namespace chow
