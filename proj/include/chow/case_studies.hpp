#pragma once

#include "chow/numeric.hpp"

#include <string>
#include <vector>

namespace chow {

/// Intersection numbers attached to the birational model of the fourfold as
/// a double cover of P^4: the pair (P^4, P^5) carries the graph Y of the
/// "singular point of a quadric" correspondence, a complete intersection of
/// five (1,1) divisors, with exceptional classes E4 = (5,-1) and
/// E5 = (-2,4) on Y. All values come from one ring, A(P^4 x P^5).
struct SecantGeometryReport {
    BigInt ramification_degree;  // (1,0)^3 [E5] (1,1)^5
    BigInt surface_degree;       // (1,0)^2 [E4] (0,1) (1,1)^5
    BigInt double_class_number;  // (1,0)^2 [E4] [E5] (1,1)^5
    BigInt multiplicity;         // double_class_number / surface_degree
    BigInt divisor_degree;       // degree of the half-class divisor D_H
    BigInt quintic_degree;       // (0,1)^4 (1,1)^5, the target hypersurface degree
    std::vector<std::pair<std::string, std::string>> citations;
};

SecantGeometryReport secant_geometry_numbers();

/// The conic bundle over the rank-4 quadric cover has no rational section:
/// on its total space P(E) over Gr(3,5), a section divisor a L + b G would
/// pair with L^13 to a * zeta14 + b * zeta13_g, which must equal the count
/// of the ten fibers hitting the torsion-generating cycle. The diophantine
/// equation has no integral solution.
struct ConicObstructionReport {
    BigInt zeta14;    // integral of zeta^14 over P(E)
    BigInt zeta13_g;  // integral of zeta^13 * sigma_1
    BigInt fiber_count;
    bool section_equation_solvable = false;
    std::vector<std::pair<std::string, std::string>> citations;
};

ConicObstructionReport conic_obstruction();

/// Parity invariant of a P^1-bundle along a curve: pair the section class
/// s + k f on the ruled surface F_a against the relative canonical
/// -2s - a f, mod 2. Detects 2-torsion in H_2 of the base.
int ruled_sigma(int a, int section_offset);

/// The Hodge-number chain for the Fano fourfold: invariants of the
/// auxiliary surfaces T (a complete intersection of six (1,1) divisors in
/// P^4 x P^4) and its etale quotient S, propagated to the fourfold through
/// the derived-category decomposition identities.
struct FourfoldHodgeReport {
    BigInt k_t_squared;     // 70
    BigInt chi_o_t;         // 20
    BigInt chi_top_t;       // 170
    BigInt k_s_squared;     // 35
    BigInt chi_top_s;       // 85
    BigInt chi_o_s;         // 10
    BigInt h20_s;           // 9
    BigInt h11_s;           // 65
    BigInt h13_x;           // 9
    BigInt h22_x;           // 67
    BigInt h12_x;           // 0
    BigInt h4_degree;       // H^4 = 10
    std::vector<std::pair<std::string, std::string>> citations;
};

FourfoldHodgeReport fourfold_hodge_chain();

} // namespace chow
