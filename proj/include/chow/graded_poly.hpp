#pragma once

#include "chow/monomial.hpp"
#include "chow/numeric.hpp"
#include "chow/ring_spec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace chow {

/// Sparse element of a graded ring described by a RingSpec. Terms are kept
/// in normal form: no zero coefficients, no monomials killed by nilpotency
/// or the global degree cap. Coefficients are exact (BigInt, BigRat or F2).
template <typename C>
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(RingSpecPtr spec) : spec_(std::move(spec)) {}

    static GradedPoly zero(RingSpecPtr spec) { return GradedPoly(std::move(spec)); }

    static GradedPoly constant(RingSpecPtr spec, C value) {
        GradedPoly p(std::move(spec));
        p.add_term(Monomial(), std::move(value));
        return p;
    }

    static GradedPoly one(RingSpecPtr spec) { return constant(std::move(spec), C(1)); }

    static GradedPoly variable(RingSpecPtr spec, std::uint32_t var, std::uint32_t exp = 1) {
        GradedPoly p(spec);
        p.add_term(Monomial::variable(var, exp), C(1));
        return p;
    }

    static GradedPoly variable(RingSpecPtr spec, const std::string& name,
                               std::uint32_t exp = 1) {
        auto idx = spec->find_variable(name);
        if (!idx) throw Error("unknown variable: " + name);
        return variable(std::move(spec), *idx, exp);
    }

    const RingSpecPtr& spec() const { return spec_; }
    const std::map<Monomial, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    C constant_term() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? C(0) : it->second;
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, C coeff) {
        if (coeff_is_zero(coeff) || !spec_->admits(m)) return;
        auto [it, inserted] = terms_.try_emplace(m, coeff);
        if (!inserted) {
            it->second += coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
        a.require_same_ring(b);
        GradedPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) {
        a.require_same_ring(b);
        GradedPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, C(0) - c);
        return out;
    }

    friend GradedPoly operator-(const GradedPoly& a) {
        GradedPoly out(a.spec_);
        for (const auto& [m, c] : a.terms_) out.add_term(m, C(0) - c);
        return out;
    }

    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
        a.require_same_ring(b);
        GradedPoly out(a.spec_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend GradedPoly operator*(const C& s, const GradedPoly& a) {
        GradedPoly out(a.spec_);
        for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
        return out;
    }

    GradedPoly& operator+=(const GradedPoly& o) { return *this = *this + o; }
    GradedPoly& operator-=(const GradedPoly& o) { return *this = *this - o; }
    GradedPoly& operator*=(const GradedPoly& o) { return *this = *this * o; }

    friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }

    GradedPoly pow(unsigned e) const {
        GradedPoly r = one(spec_);
        GradedPoly b = *this;
        while (e != 0) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e != 0) b *= b;
        }
        return r;
    }

    GradedPoly degree_part(int d) const {
        GradedPoly out(spec_);
        for (const auto& [m, c] : terms_)
            if (spec_->degree(m) == d) out.add_term(m, c);
        return out;
    }

    bool is_homogeneous(int* degree_out = nullptr) const {
        bool first = true;
        int deg = 0;
        for (const auto& [m, c] : terms_) {
            int d = spec_->degree(m);
            if (first) { deg = d; first = false; }
            else if (d != deg) return false;
        }
        if (degree_out && !first) *degree_out = deg;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, spec_->degree(m));
        return d;
    }

    /// Coefficient of the fundamental-class monomial; zero for anything
    /// below the top degree.
    C integrate() const {
        const auto& f = spec_->fundamental_class();
        if (!f) throw Error("ring has no fundamental class to integrate against");
        return coefficient(*f);
    }

    /// Canonical text form, e.g. "3*h1^2*h2 - 2*h2^3". Terms are listed by
    /// total degree, then lexicographically with earlier variables' powers
    /// first within a degree.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, C>> sorted(terms_.begin(), terms_.end());
        std::stable_sort(sorted.begin(), sorted.end(),
                         [&](const auto& x, const auto& y) {
                             int dx = spec_->degree(x.first), dy = spec_->degree(y.first);
                             if (dx != dy) return dx < dy;
                             return x.first < y.first;
                         });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : sorted) {
            std::string cs = coeff_str(c);
            bool negative = !cs.empty() && cs[0] == '-';
            std::string mag = negative ? cs.substr(1) : cs;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string ms = monomial_str(m);
            if (ms.empty()) os << mag;
            else if (mag == "1") os << ms;
            else os << mag << "*" << ms;
        }
        return os.str();
    }

  private:
    void require_same_ring(const GradedPoly& o) const {
        if (spec_ != o.spec_) throw Error("ring mismatch between graded elements");
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [v, e] : m.entries()) {
            if (!first) os << "*";
            first = false;
            os << spec_->variable(v).name;
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    RingSpecPtr spec_;
    std::map<Monomial, C> terms_;
};

using PolyZ = GradedPoly<BigInt>;
using PolyQ = GradedPoly<BigRat>;
using PolyF2 = GradedPoly<F2>;

inline PolyQ to_rational(const PolyZ& p) {
    PolyQ out(p.spec());
    for (const auto& [m, c] : p.terms()) out.add_term(m, BigRat(c));
    return out;
}

inline bool has_integer_coefficients(const PolyQ& p) {
    for (const auto& [m, c] : p.terms())
        if (!is_integer(c)) return false;
    return true;
}

inline PolyZ to_integral(const PolyQ& p, const char* context = "element") {
    PolyZ out(p.spec());
    for (const auto& [m, c] : p.terms()) out.add_term(m, to_integer(c, context));
    return out;
}

} // namespace chow
