#include "chow/topology.hpp"

#include <algorithm>
#include <sstream>

namespace chow {

namespace {

// mod-2 binomial via Lucas; the generalized top argument only ever enters
// through Wu's formula with j - i + t - 1 possibly negative, where the
// usual convention binom(m, 0) = 1, binom(m < 0, t > 0) handled through the
// reflection binom(m, t) = (-1)^t binom(t - m - 1, t).
int binom_mod2(long long m, long long t) {
    if (t < 0) return 0;
    if (t == 0) return 1;
    if (m < 0) return binom_mod2(t - m - 1, t); // sign irrelevant mod 2
    if (m < t) return 0;
    return ((~m & t) == 0) ? 1 : 0; // Lucas
}

} // namespace

SwRing::SwRing() {
    spec_ = RingSpec::free_graded({{"w2", 2}, {"w3", 3}, {"w4", 4}});
    // Wu's formula: Sq^i(w_j) = sum_t binom(j - i + t - 1, t) w_{i-t} w_{j+t},
    // specialized to w1 = 0 and w_m = 0 for m > 4.
    auto w_of = [&](int m) -> PolyF2 {
        if (m == 0) return one();
        if (m < 2 || m > 4) return zero();
        return PolyF2::variable(spec_, "w" + std::to_string(m));
    };
    for (int j = 2; j <= 4; ++j) {
        PolyF2 total = zero();
        for (int i = 0; i <= j; ++i) {
            PolyF2 sq_i = zero();
            for (int t = 0; t <= i; ++t) {
                if (binom_mod2(j - i + t - 1, t) == 0) continue;
                sq_i += w_of(i - t) * w_of(j + t);
            }
            total += sq_i;
        }
        total_sq_gen_[static_cast<std::size_t>(j - 2)] = total;
    }
}

PolyF2 SwRing::w(int i) const {
    if (i < 2 || i > 4) throw Error("only w2, w3, w4 generate this ring");
    return PolyF2::variable(spec_, "w" + std::to_string(i));
}

PolyF2 SwRing::total_sq_monomial(const Monomial& m) const {
    PolyF2 acc = one();
    for (const auto& [var, exp] : m.entries()) {
        const PolyF2& gen_total = total_sq_gen_.at(var);
        for (std::uint32_t k = 0; k < exp; ++k) acc *= gen_total;
    }
    return acc;
}

PolyF2 SwRing::total_sq(const PolyF2& x) const {
    PolyF2 out = zero();
    for (const auto& [m, c] : x.terms()) {
        (void)c; // coefficients are 1 in F2
        out += total_sq_monomial(m);
    }
    return out;
}

PolyF2 SwRing::sq(int i, const PolyF2& x) const {
    if (i < 0) throw Error("negative Steenrod square");
    PolyF2 out = zero();
    for (const auto& [m, c] : x.terms()) {
        (void)c;
        int d = spec_->degree(m);
        out += total_sq_monomial(m).degree_part(d + i);
    }
    return out;
}

bool SwRing::square_nonvanishing(const PolyF2& x) const { return !(x * x).is_zero(); }

TorsionRingElement TorsionRingElement::term(int nu_exp, int e_exp, int p_exp, BigInt coeff) {
    if (nu_exp < 0 || e_exp < 0 || p_exp < 0) throw Error("negative exponent");
    TorsionRingElement out;
    out.add_term({nu_exp, e_exp, p_exp}, std::move(coeff));
    return out;
}

void TorsionRingElement::add_term(const Key& k, BigInt coeff) {
    if (k.nu > 0) coeff = ((coeff % 2) + 2) % 2; // 2 nu = 0
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
        it->second += coeff;
        if (k.nu > 0) it->second = ((it->second % 2) + 2) % 2;
        if (it->second == 0) terms_.erase(it);
    }
}

TorsionRingElement operator+(const TorsionRingElement& a, const TorsionRingElement& b) {
    TorsionRingElement out = a;
    for (const auto& [k, c] : b.terms_) out.add_term(k, c);
    return out;
}

TorsionRingElement operator*(const TorsionRingElement& a, const TorsionRingElement& b) {
    TorsionRingElement out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.nu + kb.nu, ka.e + kb.e, ka.p + kb.p}, ca * cb);
    return out;
}

std::string TorsionRingElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono;
        auto app = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        app("nu", k.nu);
        app("e", k.e);
        app("p", k.p);
        if (mono.empty()) os << c.str();
        else if (c == 1) os << mono;
        else os << c.str() << "*" << mono;
    }
    return os.str();
}

PolyF2 reduce_mod2(const SwRing& ring, const TorsionRingElement& x) {
    PolyF2 out = ring.zero();
    for (const auto& [k, c] : x.terms()) {
        if (c % 2 == 0) continue;
        PolyF2 mono = ring.one();
        for (int i = 0; i < k.nu; ++i) mono *= ring.w(3);
        for (int i = 0; i < k.e; ++i) mono *= ring.w(4);
        for (int i = 0; i < k.p; ++i) mono *= ring.w(2) * ring.w(2);
        out += mono;
    }
    return out;
}

FGAbelianGroup::FGAbelianGroup(int free, std::vector<BigInt> tors)
    : free_rank(free), torsion(std::move(tors)) {
    if (free_rank < 0) throw Error("negative free rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 2) throw Error("torsion orders must be at least 2");
        if (i > 0 && torsion[i] % torsion[i - 1] != 0)
            throw Error("torsion orders must form a divisibility chain");
    }
}

FGAbelianGroup FGAbelianGroup::from_presentation(const IntegerMatrix& relations) {
    auto snf = smith_normal_form(relations);
    std::vector<BigInt> torsion;
    std::size_t nonzero = 0;
    for (const auto& d : snf.diagonal) {
        if (d == 0) continue;
        ++nonzero;
        if (d > 1) torsion.push_back(d);
    }
    return FGAbelianGroup(static_cast<int>(relations.rows() - nonzero), std::move(torsion));
}

std::vector<BigInt> FGAbelianGroup::generator_orders() const {
    std::vector<BigInt> orders(torsion.begin(), torsion.end());
    orders.insert(orders.end(), static_cast<std::size_t>(free_rank), BigInt(0));
    return orders;
}

std::string FGAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) { os << "Z"; first = false; }
    else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        first = false;
        os << "Z/" << t.str();
    }
    return os.str();
}

void ExactSequenceInstance::validate() const {
    if (groups.size() < 2 || maps.size() + 1 != groups.size())
        throw Error("sequence needs matching group and map counts");
    for (std::size_t i = 0; i < maps.size(); ++i) {
        if (maps[i].rows() != groups[i + 1].num_generators() ||
            maps[i].cols() != groups[i].num_generators())
            throw Error("map dimensions do not match the presentations");
        // well-definedness: order(source gen) * image lies in the relations
        auto src_orders = groups[i].generator_orders();
        auto dst_orders = groups[i + 1].generator_orders();
        for (std::size_t j = 0; j < src_orders.size(); ++j) {
            if (src_orders[j] == 0) continue;
            for (std::size_t k = 0; k < dst_orders.size(); ++k) {
                BigInt entry = src_orders[j] * maps[i].at(k, j);
                if (dst_orders[k] == 0 ? entry != 0 : entry % dst_orders[k] != 0)
                    throw Error("map is not well defined on torsion generators");
            }
        }
    }
}

bool ExactSequenceInstance::is_complex() const {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        IntegerMatrix comp = maps[i + 1] * maps[i];
        auto orders = groups[i + 2].generator_orders();
        for (std::size_t col = 0; col < comp.cols(); ++col)
            for (std::size_t row = 0; row < comp.rows(); ++row) {
                const BigInt& v = comp.at(row, col);
                if (orders[row] == 0 ? v != 0 : v % orders[row] != 0) return false;
            }
    }
    return true;
}

namespace {

// relation matrix of a group presentation: diagonal torsion orders
IntegerMatrix relation_matrix(const FGAbelianGroup& g) {
    auto orders = g.generator_orders();
    std::size_t n = orders.size();
    std::size_t s = g.torsion.size();
    IntegerMatrix rel(n, s);
    for (std::size_t j = 0; j < s; ++j) rel.at(j, j) = orders[j];
    return rel;
}

} // namespace

bool check_exact(const ExactSequenceInstance& seq) {
    seq.validate();
    if (!seq.is_complex()) return false;
    for (std::size_t node = 1; node + 1 < seq.groups.size(); ++node) {
        const auto& g = seq.groups[node];
        const std::size_t n = g.num_generators();
        const IntegerMatrix& fin = seq.maps[node - 1];  // G_{node-1} -> G
        const IntegerMatrix& fout = seq.maps[node];     // G -> G_{node+1}

        // kernel of the induced map G -> G_{node+1}: lattice of x in Z^n
        // with fout x in the relation lattice of the target
        IntegerMatrix rel_next = relation_matrix(seq.groups[node + 1]);
        IntegerMatrix stacked = IntegerMatrix::hconcat(fout, rel_next);
        IntegerMatrix ker = kernel_basis(stacked);
        IntegerMatrix ker_proj(n, ker.cols());
        for (std::size_t j = 0; j < ker.cols(); ++j)
            for (std::size_t i = 0; i < n; ++i) ker_proj.at(i, j) = ker.at(i, j);
        IntegerMatrix kbasis = column_space_basis(ker_proj);

        // image of the incoming map plus the relations of G itself
        IntegerMatrix span = IntegerMatrix::hconcat(fin, relation_matrix(g));

        // exactness at this node: the two lattices coincide, i.e. every
        // kernel basis vector is an integral combination of span columns
        // and every span generator lies in the kernel lattice
        for (std::size_t j = 0; j < kbasis.cols(); ++j) {
            std::vector<BigInt> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = kbasis.at(i, j);
            if (!solve(span, b)) return false;
        }
        for (std::size_t j = 0; j < span.cols(); ++j) {
            std::vector<BigInt> b(n);
            for (std::size_t i = 0; i < n; ++i) b[i] = span.at(i, j);
            // span must land inside the kernel lattice
            if (!solve(kbasis, b)) return false;
        }
    }
    return true;
}

FGAbelianGroup bso4_group(int degree) {
    if (degree < 0 || degree > 8) throw Error("degree out of the supported range 0..8");
    int free_rank = 0;
    int torsion_count = 0;
    // monomials nu^a e^b p^c with 3a + 4b + 4c = degree
    for (int a = 0; 3 * a <= degree; ++a) {
        int rest = degree - 3 * a;
        if (rest % 4 != 0) continue;
        int bc = rest / 4;
        int count = bc + 1; // (b, c) with b + c = bc
        if (a == 0) free_rank += count;
        else torsion_count += count;
    }
    return FGAbelianGroup(free_rank,
                          std::vector<BigInt>(static_cast<std::size_t>(torsion_count), BigInt(2)));
}

ExactSequenceInstance bgo4_gysin_instance() {
    // Circle bundle BSO(4) -> B with B the connected similitude classifying
    // space; the long exact sequence in the window through degree 3 of the
    // total space, with the claimed groups
    //   H^0(B) = Z, H^1(B) = 0, H^2(B) = Z, H^3(B) = Z/2
    // and the BSO(4) table. Euler-class multiplication H^0(B) -> H^2(B) is
    // an isomorphism and the degree-3 restriction is an isomorphism; all
    // other interior maps are forced to vanish.
    ExactSequenceInstance seq;
    auto Z = FGAbelianGroup::free(1);
    auto Z2 = FGAbelianGroup::cyclic(2);
    auto O = FGAbelianGroup::zero();

    seq.groups = {O, Z, Z, O, O, O, Z, Z, O, O, Z2, Z2, Z};
    //            0  H0B H0P .. H1B H1P H0B H2B H2P H1B H3B H3P H2B
    auto zero_map = [&](const FGAbelianGroup& from, const FGAbelianGroup& to) {
        return IntegerMatrix(to.num_generators(), from.num_generators());
    };
    auto one_by_one = [&](BigInt v) {
        IntegerMatrix m(1, 1);
        m.at(0, 0) = v;
        return m;
    };
    seq.maps.clear();
    seq.maps.push_back(zero_map(O, Z));      // 0 -> H^0(B)
    seq.maps.push_back(one_by_one(1));       // H^0(B) -> H^0(BSO4), pullback iso
    seq.maps.push_back(zero_map(Z, O));      // -> H^{-1}(B) = 0
    seq.maps.push_back(zero_map(O, O));      // -> H^1(B)
    seq.maps.push_back(zero_map(O, O));      // H^1(B) -> H^1(BSO4)
    seq.maps.push_back(zero_map(O, Z));      // -> H^0(B)
    seq.maps.push_back(one_by_one(1));       // Euler class: H^0(B) -> H^2(B)
    seq.maps.push_back(zero_map(Z, O));      // H^2(B) -> H^2(BSO4) = 0
    seq.maps.push_back(zero_map(O, O));      // -> H^1(B)
    seq.maps.push_back(zero_map(O, Z2));     // H^1(B) -> H^3(B)
    seq.maps.push_back(one_by_one(1));       // H^3(B) -> H^3(BSO4), iso
    seq.maps.push_back(zero_map(Z2, Z));     // pushforward H^3(BSO4) -> H^2(B)
    return seq;
}

ConiveauVerdict coniveau_obstruction(bool square_mod2_nonzero) {
    return square_mod2_nonzero ? ConiveauVerdict::NotStrongConiveauOne
                               : ConiveauVerdict::NoConclusion;
}

std::string verdict_name(ConiveauVerdict v) {
    switch (v) {
        case ConiveauVerdict::NotStrongConiveauOne:
            return "not of strong coniveau >= 1";
        case ConiveauVerdict::NoConclusion:
            return "obstruction vanishes, no conclusion";
    }
    return "?";
}

} // namespace chow
