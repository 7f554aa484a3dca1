#pragma once

#include "chow/graded_poly.hpp"
#include "chow/integer_matrix.hpp"
#include "chow/numeric.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace chow {

/// Mod-2 cohomology of BSO(4): the free polynomial ring Z/2[w2, w3, w4] on
/// the Stiefel-Whitney classes, graded by their degrees.
class SwRing {
  public:
    SwRing();

    const RingSpecPtr& spec() const { return spec_; }

    PolyF2 zero() const { return PolyF2::zero(spec_); }
    PolyF2 one() const { return PolyF2::one(spec_); }
    PolyF2 w(int i) const; // w2, w3 or w4

    /// Steenrod square Sq^i, extended from Wu's formula on the generators
    /// (with w1 = 0 and classes above degree 4 vanishing) multiplicatively
    /// through the Cartan formula.
    PolyF2 sq(int i, const PolyF2& x) const;

    /// Total square Sq = sum_i Sq^i; a ring homomorphism.
    PolyF2 total_sq(const PolyF2& x) const;

    /// Whether x^2 is nonzero; computed, not assumed.
    bool square_nonvanishing(const PolyF2& x) const;

  private:
    PolyF2 total_sq_monomial(const Monomial& m) const;

    RingSpecPtr spec_;
    std::array<PolyF2, 3> total_sq_gen_; // total squares of w2, w3, w4
};

/// Element of the integral cohomology ring Z[nu, e, p] / (2 nu) of BSO(4):
/// nu is the degree-3 integral Bockstein of w2 (order 2), e and p are the
/// Euler and Pontrjagin classes in degree 4. Coefficients of nu-positive
/// monomials live in Z/2.
class TorsionRingElement {
  public:
    struct Key {
        int nu = 0, e = 0, p = 0;
        friend auto operator<=>(const Key&, const Key&) = default;
    };

    TorsionRingElement() = default;

    static TorsionRingElement term(int nu_exp, int e_exp, int p_exp, BigInt coeff = 1);
    static TorsionRingElement nu() { return term(1, 0, 0); }
    static TorsionRingElement euler() { return term(0, 1, 0); }
    static TorsionRingElement pontryagin() { return term(0, 0, 1); }

    const std::map<Key, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int degree(const Key& k) { return 3 * k.nu + 4 * k.e + 4 * k.p; }

    void add_term(const Key& k, BigInt coeff);

    friend TorsionRingElement operator+(const TorsionRingElement& a, const TorsionRingElement& b);
    friend TorsionRingElement operator*(const TorsionRingElement& a, const TorsionRingElement& b);
    friend bool operator==(const TorsionRingElement& a, const TorsionRingElement& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::map<Key, BigInt> terms_;
};

/// Reduction mod 2 into Z/2[w2, w3, w4]: nu maps to w3; e and p map to w4
/// and w2^2 (the standard images; nothing downstream depends on the last
/// two).
PolyF2 reduce_mod2(const SwRing& ring, const TorsionRingElement& x);

/// Finitely generated abelian group in canonical form: free rank plus
/// torsion orders in a divisibility chain.
struct FGAbelianGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion; // each >= 2, t1 | t2 | ...

    FGAbelianGroup() = default;
    FGAbelianGroup(int free, std::vector<BigInt> tors);

    static FGAbelianGroup zero() { return FGAbelianGroup(); }
    static FGAbelianGroup free(int rank) { return FGAbelianGroup(rank, {}); }
    static FGAbelianGroup cyclic(BigInt order) { return FGAbelianGroup(0, {std::move(order)}); }

    /// Cokernel of an integer relation matrix acting on Z^rows.
    static FGAbelianGroup from_presentation(const IntegerMatrix& relations);

    std::size_t num_generators() const { return static_cast<std::size_t>(free_rank) + torsion.size(); }

    /// Generator orders, torsion first and 0 for free generators; the order
    /// is the presentation convention used by ExactSequenceInstance maps.
    std::vector<BigInt> generator_orders() const;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const FGAbelianGroup& a, const FGAbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }

    std::string str() const;
};

/// A finite chunk of a long exact sequence: groups G_0 -> G_1 -> ... with
/// maps given by integer matrices between the generator presentations.
struct ExactSequenceInstance {
    std::vector<FGAbelianGroup> groups;
    std::vector<IntegerMatrix> maps; // maps[i] : G_i -> G_{i+1}

    void validate() const; // dimension consistency and well-definedness
    bool is_complex() const; // consecutive maps compose to zero
};

/// True when the maps compose to zero and image equals kernel at every
/// interior node, decided exactly with Smith normal form over the
/// integers. Dimension mismatches throw; a failed composition or a failed
/// exactness check returns false.
bool check_exact(const ExactSequenceInstance& seq);

/// Cohomology of BSO(4) in one degree, read off from the monomial basis of
/// Z[nu, e, p]/(2 nu). Supported range: degrees 0 through 8.
FGAbelianGroup bso4_group(int degree);

/// The instance of the circle-bundle long exact sequence relating BSO(4) to
/// the connected orthogonal similitude classifying space, assembled from
/// the known BSO(4) groups and the claimed low-degree answer (Z, 0, Z, Z/2);
/// exactness of this window certifies the claim is consistent.
ExactSequenceInstance bgo4_gysin_instance();

enum class ConiveauVerdict { NotStrongConiveauOne, NoConclusion };

/// Topological obstruction: a degree-3 class of strong coniveau >= 1 has
/// square zero mod 2, so a nonzero square rules strong coniveau out; a zero
/// square says nothing.
ConiveauVerdict coniveau_obstruction(bool square_mod2_nonzero);

std::string verdict_name(ConiveauVerdict v);

} // namespace chow
