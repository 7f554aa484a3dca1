#pragma once

#include "chow/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chow {

/// A query about the locus of rank <= r quadrics in n variables, its double
/// cover W, and the linear section X cut out by c general hyperplanes.
struct RankLocusSpec {
    int r = 0; // even, 2 <= r <= n
    int n = 0;
    int c = 0; // number of hyperplane sections, 0 <= c <= dim Z

    RankLocusSpec(int r_, int n_, int c_);
};

/// Dimension of the locus of rank-exactly-r quadrics in n variables:
/// r n - r(r-1)/2 - 1. Accepts r = 0 (empty locus, dimension -1).
BigInt rank_locus_dimension(int r, int n);

/// Degree of the closure of the rank-r locus, computed by pushing forward
/// powers of the hyperplane class from the desingularizing projective
/// bundle over Gr(n-r, n): the degree-(n-r)r Segre class of Sym^2 of the
/// dual tautological quotient. Only available at desk scale,
/// (n-r) r <= 12.
BigInt rank_locus_degree(int r, int n);

/// Independent cross-check for the degree: the classical product formula
/// prod_{i=0}^{n-r-1} binom(n+i, n-r-i) / binom(2i+1, i). Exact at any
/// size.
BigInt rank_locus_degree_product_formula(int r, int n);

/// Local model data at the deepest singular stratum of W: a torus acts on
/// the slice with weight spaces of dimensions (w+, w-, M); the quotient is
/// the affine cone over a Segre product times an affine space.
struct LunaSliceData {
    int weight_plus = 0;
    int weight_minus = 0;
    BigInt trivial_dim;      // M
    int cone_factor_dim = 0; // each Segre factor is P^{cone_factor_dim}
    BigInt cone_dim;         // dimension of the affine cone
    std::string cone_description;
};

LunaSliceData luna_slice(int r, int n);

/// Comparison range for low-degree cohomology of the sliced smooth locus
/// against the classifying space: isomorphisms below N.
struct LefschetzRange {
    BigInt range;            // min(2n - 1, dim W - c)
    int stratum_codim = 0;   // n - r + 2
    int affine_bound = 0;    // isomorphisms below 2 codim - 1
};

LefschetzRange lefschetz_range(int r, int n, int c);

enum class Smoothness { Smooth, IsolatedSingularities, Singular };
enum class KodairaType { Fano, CalabiYau, GeneralType };

struct CitedValue {
    std::string value;
    std::string citation;
};

/// Everything the planner derives about (r, n, c), with one citation per
/// field.
struct PlannerReport {
    explicit PlannerReport(RankLocusSpec s) : spec(s) {}

    RankLocusSpec spec;
    BigInt dim_z;
    BigInt dim_w;
    BigInt dim_x;
    std::optional<BigInt> deg_z; // absent only above desk scale with no closed form
    std::string deg_z_method;
    BigInt k_coefficient; // K_X = k H
    KodairaType kodaira = KodairaType::Fano;
    Smoothness smoothness = Smoothness::Smooth;
    BigInt singular_locus_dim;  // dim of sigma^{-1}(Zbar_{r-2,n}) inside W
    bool torsion_window = false;       // H^3 of the smooth locus is Z/2
    bool torsion_window_applies = false; // the window statement covers this (r = 4)
    bool obstruction_window = false;   // the degree-3 class has nonzero square mod 2
    std::string coniveau_verdict;
    std::optional<LunaSliceData> luna;
    LefschetzRange lefschetz;
    std::vector<std::string> annotations;
    std::vector<CitedValue> cited_fields; // flattened (value, citation) lines
};

PlannerReport plan(const RankLocusSpec& spec);

std::string smoothness_name(Smoothness s);
std::string kodaira_name(KodairaType k);

} // namespace chow
