#pragma once

#include "chow/numeric.hpp"
#include "chow/partition.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace chow {

/// The Grassmannian Gr(k, n) of k-dimensional subspaces of an n-space.
/// Its Chow ring has the Schubert basis sigma_lambda with lambda inside the
/// k x (n-k) box; sigma_p (one row) is the p-th Chern class of the rank
/// (n-k) tautological quotient bundle, sigma_{1^i} the i-th Chern class of
/// the dual tautological subbundle, and sigma_1 the Plucker hyperplane
/// class.
struct GrassmannianSpec {
    int k = 0;
    int n = 0;

    GrassmannianSpec() = default;
    GrassmannianSpec(int k_, int n_) : k(k_), n(n_) {
        if (k <= 0 || k >= n) throw Error("Grassmannian requires 0 < k < n");
    }

    int box_rows() const { return k; }
    int box_width() const { return n - k; }
    int dimension() const { return k * (n - k); }
    Partition top_class() const {
        return Partition(std::vector<int>(static_cast<std::size_t>(k), n - k));
    }

    friend bool operator==(const GrassmannianSpec& a, const GrassmannianSpec& b) {
        return a.k == b.k && a.n == b.n;
    }
    friend bool operator!=(const GrassmannianSpec& a, const GrassmannianSpec& b) {
        return !(a == b);
    }
};

/// Element of the Chow ring of a Grassmannian in the Schubert basis.
template <typename C>
class SchubertExpr {
  public:
    SchubertExpr() = default;
    explicit SchubertExpr(GrassmannianSpec spec) : spec_(spec) {}

    static SchubertExpr zero(GrassmannianSpec spec) { return SchubertExpr(spec); }

    static SchubertExpr basis(GrassmannianSpec spec, const Partition& lambda, C coeff = C(1)) {
        if (!lambda.fits_in_box(spec.box_rows(), spec.box_width()))
            throw Error("partition " + lambda.str() + " does not fit in the Schubert box of Gr(" +
                        std::to_string(spec.k) + "," + std::to_string(spec.n) + ")");
        SchubertExpr e(spec);
        e.add_term(lambda, coeff);
        return e;
    }

    static SchubertExpr one(GrassmannianSpec spec) { return basis(spec, Partition{}); }

    const GrassmannianSpec& spec() const { return spec_; }
    const std::map<Partition, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coefficient(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Partition& lambda, C coeff) {
        if (coeff_is_zero(coeff)) return;
        if (!lambda.fits_in_box(spec_.box_rows(), spec_.box_width())) return;
        auto [it, inserted] = terms_.try_emplace(lambda, coeff);
        if (!inserted) {
            it->second += coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend SchubertExpr operator+(const SchubertExpr& a, const SchubertExpr& b) {
        a.require_same(b);
        SchubertExpr out = a;
        for (const auto& [p, c] : b.terms_) out.add_term(p, c);
        return out;
    }

    friend SchubertExpr operator-(const SchubertExpr& a, const SchubertExpr& b) {
        a.require_same(b);
        SchubertExpr out = a;
        for (const auto& [p, c] : b.terms_) out.add_term(p, C(0) - c);
        return out;
    }

    friend SchubertExpr operator*(const C& s, const SchubertExpr& a) {
        SchubertExpr out(a.spec_);
        for (const auto& [p, c] : a.terms_) out.add_term(p, s * c);
        return out;
    }

    SchubertExpr& operator+=(const SchubertExpr& o) { return *this = *this + o; }
    SchubertExpr& operator-=(const SchubertExpr& o) { return *this = *this - o; }

    friend bool operator==(const SchubertExpr& a, const SchubertExpr& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SchubertExpr& a, const SchubertExpr& b) { return !(a == b); }

    SchubertExpr degree_part(int d) const {
        SchubertExpr out(spec_);
        for (const auto& [p, c] : terms_)
            if (p.weight() == d) out.add_term(p, c);
        return out;
    }

    /// Coefficient of the full-box class.
    C integrate() const { return coefficient(spec_.top_class()); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, c] : terms_) {
            std::string cs = coeff_str(c);
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (mag == "1") os << p.str();
            else os << mag << "*" << p.str();
        }
        return os.str();
    }

    void require_same(const SchubertExpr& o) const {
        if (spec_ != o.spec_) throw Error("Grassmannian mismatch between Schubert classes");
    }

  private:
    GrassmannianSpec spec_;
    std::map<Partition, C> terms_;
};

using SchubertClass = SchubertExpr<BigInt>;
using SchubertClassQ = SchubertExpr<BigRat>;

/// Pieri rule: sigma_lambda * sigma_p as the sum over horizontal-strip
/// extensions of lambda by p boxes, truncated to the box. Out-of-range p
/// multiplies by a vanishing Chern class of the quotient bundle, giving 0.
template <typename C>
SchubertExpr<C> pieri(const GrassmannianSpec& spec, const Partition& lambda, int p) {
    if (!lambda.fits_in_box(spec.box_rows(), spec.box_width()))
        throw Error("partition " + lambda.str() + " does not fit in the Schubert box");
    if (p < 0) throw Error("pieri exponent must be nonnegative");
    SchubertExpr<C> out(spec);
    if (p > spec.box_width()) return out;
    if (p == 0) {
        out.add_term(lambda, C(1));
        return out;
    }
    // enumerate mu with mu/lambda a horizontal strip of size p
    std::vector<int> mu(static_cast<std::size_t>(spec.box_rows()), 0);
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == spec.box_rows()) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int x : mu)
                    if (x > 0) parts.push_back(x);
                out.add_term(Partition(parts), C(1));
            }
            return;
        }
        int lo = lambda.part(static_cast<std::size_t>(row));
        int hi = row == 0 ? spec.box_width()
                          : std::min(mu[static_cast<std::size_t>(row - 1)],
                                     lambda.part(static_cast<std::size_t>(row - 1)) +
                                         0); // horizontal strip: mu_{i} <= lambda_{i-1}
        if (row > 0) hi = std::min(hi, lambda.part(static_cast<std::size_t>(row - 1)));
        for (int v = lo; v <= hi; ++v) {
            int used = v - lo;
            if (used > remaining) break;
            mu[static_cast<std::size_t>(row)] = v;
            self(self, row + 1, remaining - used);
        }
        mu[static_cast<std::size_t>(row)] = 0;
    };
    rec(rec, 0, p);
    return out;
}

template <typename C>
SchubertExpr<C> pieri(const SchubertExpr<C>& a, int p) {
    SchubertExpr<C> out(a.spec());
    for (const auto& [lambda, c] : a.terms())
        out += c * pieri<C>(a.spec(), lambda, p);
    return out;
}

/// Giambelli expansion of sigma_lambda as a signed sum of products of
/// one-row classes: the Leibniz expansion of det(sigma_{lambda_i + j - i}).
struct GiambelliTerm {
    int sign = 1;
    std::vector<int> row_classes; // factors sigma_p, p >= 1
};

inline std::vector<GiambelliTerm> giambelli_expansion(const Partition& lambda) {
    const int l = static_cast<int>(lambda.length());
    std::vector<GiambelliTerm> out;
    std::vector<int> perm(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) perm[static_cast<std::size_t>(i)] = i;
    // iterate over permutations; sizes here are tiny (l <= k)
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::vector<int> choice(static_cast<std::size_t>(l), 0);
    auto rec = [&](auto&& self, int row, int sign) -> void {
        if (row == l) {
            GiambelliTerm t;
            t.sign = sign;
            for (int i = 0; i < l; ++i) {
                int p = lambda.part(static_cast<std::size_t>(i)) + choice[static_cast<std::size_t>(i)] - i;
                if (p < 0) return; // sigma_{negative} = 0
                if (p > 0) t.row_classes.push_back(p);
            }
            out.push_back(std::move(t));
            return;
        }
        for (int j = 0; j < l; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            int p = lambda.part(static_cast<std::size_t>(row)) + j - row;
            if (p < 0) continue;
            used[static_cast<std::size_t>(j)] = true;
            choice[static_cast<std::size_t>(row)] = j;
            // parity of the transposition count relative to identity
            int inv = 0;
            for (int r = 0; r < row; ++r)
                if (choice[static_cast<std::size_t>(r)] > j) ++inv;
            self(self, row + 1, inv % 2 == 0 ? sign : -sign);
            used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec(rec, 0, 1);
    return out;
}

/// Product in the Schubert basis, by expanding the second factor through
/// Giambelli and applying the Pieri rule repeatedly.
template <typename C>
SchubertExpr<C> multiply(const SchubertExpr<C>& a, const SchubertExpr<C>& b) {
    a.require_same(b);
    SchubertExpr<C> out(a.spec());
    for (const auto& [mu, cmu] : b.terms()) {
        if (mu.is_empty()) {
            out += cmu * a;
            continue;
        }
        for (const auto& term : giambelli_expansion(mu)) {
            SchubertExpr<C> acc = a;
            for (int p : term.row_classes) acc = pieri(acc, p);
            out += (cmu * C(term.sign)) * acc;
        }
    }
    return out;
}

template <typename C>
SchubertExpr<C> operator*(const SchubertExpr<C>& a, const SchubertExpr<C>& b) {
    return multiply(a, b);
}

/// Degree-style integral: the coefficient of the full-box class.
template <typename C>
C integrate_gr(const SchubertExpr<C>& a) {
    return a.integrate();
}

enum class Tautological { Subbundle, DualSubbundle, Quotient };

/// Total Chern class of a tautological bundle as a list of Schubert classes
/// by degree: c_i(quotient) = sigma_i, c_i(dual subbundle) = sigma_{1^i},
/// and the subbundle is the dual with alternating signs.
template <typename C>
std::vector<SchubertExpr<C>> tautological_chern(const GrassmannianSpec& spec, Tautological which) {
    std::vector<SchubertExpr<C>> out;
    out.push_back(SchubertExpr<C>::one(spec));
    int rank = which == Tautological::Quotient ? spec.box_width() : spec.box_rows();
    for (int i = 1; i <= rank; ++i) {
        Partition lambda = which == Tautological::Quotient
                               ? Partition{i}
                               : Partition(std::vector<int>(static_cast<std::size_t>(i), 1));
        C coeff = (which == Tautological::Subbundle && i % 2 == 1) ? C(-1) : C(1);
        out.push_back(SchubertExpr<C>::basis(spec, lambda, coeff));
    }
    return out;
}

inline int tautological_rank(const GrassmannianSpec& spec, Tautological which) {
    return which == Tautological::Quotient ? spec.box_width() : spec.box_rows();
}

} // namespace chow
