#pragma once

#include "chow/graded_poly.hpp"
#include "chow/numeric.hpp"
#include "chow/schubert.hpp"

#include <concepts>
#include <memory>
#include <string>
#include <vector>

namespace chow {

/// A graded ring with a top degree and an integration functional reading
/// off the coefficient of the fundamental class. Elements carry exact
/// rational coefficients; integrality is asserted at the boundaries that
/// need it.
template <typename R>
concept IntersectionRing = requires(const R& r, const typename R::Elem& a,
                                    const typename R::Elem& b, const BigRat& s, int d) {
    typename R::Elem;
    { r.dimension() } -> std::convertible_to<int>;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.sub(a, b) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.scale(s, a) } -> std::same_as<typename R::Elem>;
    { r.degree_part(a, d) } -> std::same_as<typename R::Elem>;
    { r.integrate(a) } -> std::same_as<BigRat>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.is_integral(a) } -> std::convertible_to<bool>;
    { r.str(a) } -> std::convertible_to<std::string>;
};

/// Chow ring of a product of projective spaces, rational coefficients.
class ProductRing {
  public:
    using Elem = PolyQ;

    explicit ProductRing(std::vector<int> factor_dims)
        : factor_dims_(std::move(factor_dims)),
          spec_(RingSpec::projective_product(factor_dims_)) {
        dim_ = 0;
        for (int d : factor_dims_) dim_ += d;
    }

    const RingSpecPtr& spec() const { return spec_; }
    const std::vector<int>& factor_dims() const { return factor_dims_; }

    int dimension() const { return dim_; }
    Elem zero() const { return PolyQ::zero(spec_); }
    Elem one() const { return PolyQ::one(spec_); }
    Elem hyperplane(std::size_t factor) const {
        return PolyQ::variable(spec_, static_cast<std::uint32_t>(factor));
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem scale(const BigRat& s, const Elem& a) const { return s * a; }
    Elem degree_part(const Elem& a, int d) const { return a.degree_part(d); }
    BigRat integrate(const Elem& a) const { return a.integrate(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_integral(const Elem& a) const { return has_integer_coefficients(a); }
    std::string str(const Elem& a) const { return a.str(); }

  private:
    std::vector<int> factor_dims_;
    RingSpecPtr spec_;
    int dim_ = 0;
};

/// Chow ring of a Grassmannian in the Schubert basis, rational coefficients.
class GrassmannianRing {
  public:
    using Elem = SchubertClassQ;

    explicit GrassmannianRing(GrassmannianSpec spec) : spec_(spec) {}
    GrassmannianRing(int k, int n) : spec_(k, n) {}

    const GrassmannianSpec& spec() const { return spec_; }

    int dimension() const { return spec_.dimension(); }
    Elem zero() const { return SchubertClassQ::zero(spec_); }
    Elem one() const { return SchubertClassQ::one(spec_); }
    Elem sigma(const Partition& lambda) const { return SchubertClassQ::basis(spec_, lambda); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return multiply(a, b); }
    Elem scale(const BigRat& s, const Elem& a) const { return s * a; }
    Elem degree_part(const Elem& a, int d) const { return a.degree_part(d); }
    BigRat integrate(const Elem& a) const { return a.integrate(); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool is_integral(const Elem& a) const {
        for (const auto& [p, c] : a.terms())
            if (!is_integer(c)) return false;
        return true;
    }
    std::string str(const Elem& a) const { return a.str(); }

  private:
    GrassmannianSpec spec_;
};

/// Chow ring of a projective bundle P(E) of lines in E over a base ring.
/// zeta is the first Chern class of the dual of the tautological subline
/// bundle; powers of zeta at and above the rank are rewritten through the
/// relation sum_{i=0}^{r} c_i(E) zeta^{r-i} = 0, so that pushing forward an
/// element just reads off its top zeta coefficient. Pushforward of
/// zeta^{r-1+j} is then the j-th Segre class, with s(E) c(E) = 1.
template <typename Base>
    requires IntersectionRing<Base>
class BundleRing {
  public:
    // coefficients of zeta^0 .. zeta^{r-1}
    using Elem = std::vector<typename Base::Elem>;
    using BaseElem = typename Base::Elem;

    BundleRing(std::shared_ptr<const Base> base, int rank, std::vector<BaseElem> chern)
        : base_(std::move(base)), rank_(rank), chern_(std::move(chern)) {
        if (rank_ < 1) throw Error("projective bundle needs rank >= 1");
        chern_.resize(static_cast<std::size_t>(rank_) + 1, base_->zero());
        dim_ = base_->dimension() + rank_ - 1;
    }

    const Base& base() const { return *base_; }
    const std::shared_ptr<const Base>& base_ptr() const { return base_; }
    int rank() const { return rank_; }
    const std::vector<BaseElem>& chern_of_bundle() const { return chern_; }

    int dimension() const { return dim_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(rank_), base_->zero()); }

    Elem one() const {
        Elem e = zero();
        e[0] = base_->one();
        return e;
    }

    Elem pullback(const BaseElem& a) const {
        Elem e = zero();
        e[0] = a;
        return e;
    }

    Elem zeta() const {
        Elem e = zero();
        if (rank_ == 1) {
            // rank-1 bundle: P(E) = base and zeta = -c1(E)
            e[0] = base_->sub(base_->zero(), chern_[1]);
        } else {
            e[1] = base_->one();
        }
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem out = zero();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_->add(a[i], b[i]);
        return out;
    }

    Elem sub(const Elem& a, const Elem& b) const {
        Elem out = zero();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_->sub(a[i], b[i]);
        return out;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<BaseElem> raw(2 * static_cast<std::size_t>(rank_) - 1, base_->zero());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (base_->is_zero(a[i])) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                raw[i + j] = base_->add(raw[i + j], base_->mul(a[i], b[j]));
        }
        reduce(raw);
        raw.resize(static_cast<std::size_t>(rank_), base_->zero());
        return raw;
    }

    Elem scale(const BigRat& s, const Elem& a) const {
        Elem out = zero();
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = base_->scale(s, a[i]);
        return out;
    }

    Elem degree_part(const Elem& a, int d) const {
        Elem out = zero();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int bd = d - static_cast<int>(i);
            if (bd >= 0) out[i] = base_->degree_part(a[i], bd);
        }
        return out;
    }

    /// Pushforward to the base: the zeta^{r-1} coefficient.
    BaseElem pushforward(const Elem& a) const { return a[static_cast<std::size_t>(rank_) - 1]; }

    BigRat integrate(const Elem& a) const { return base_->integrate(pushforward(a)); }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (!base_->is_zero(c)) return false;
        return true;
    }

    bool is_integral(const Elem& a) const {
        for (const auto& c : a)
            if (!base_->is_integral(c)) return false;
        return true;
    }

    std::string str(const Elem& a) const {
        std::string out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (base_->is_zero(a[i])) continue;
            if (!out.empty()) out += " + ";
            out += "(" + base_->str(a[i]) + ")";
            if (i == 1) out += "*z";
            else if (i > 1) out += "*z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

  private:
    // rewrite zeta^m for m >= rank via zeta^r = -sum_{i>=1} c_i(E) zeta^{r-i}
    void reduce(std::vector<BaseElem>& coeffs) const {
        for (std::size_t m = coeffs.size(); m-- > static_cast<std::size_t>(rank_);) {
            if (base_->is_zero(coeffs[m])) continue;
            BaseElem top = coeffs[m];
            coeffs[m] = base_->zero();
            for (int i = 1; i <= rank_; ++i) {
                std::size_t target = m - static_cast<std::size_t>(i);
                coeffs[target] = base_->sub(coeffs[target],
                                            base_->mul(top, chern_[static_cast<std::size_t>(i)]));
            }
        }
    }

    std::shared_ptr<const Base> base_;
    int rank_ = 0;
    std::vector<BaseElem> chern_;
    int dim_ = 0;
};

template <typename R>
    requires IntersectionRing<R>
typename R::Elem power(const R& ring, const typename R::Elem& a, unsigned e) {
    auto r = ring.one();
    auto b = a;
    while (e != 0) {
        if (e & 1u) r = ring.mul(r, b);
        e >>= 1u;
        if (e != 0) b = ring.mul(b, b);
    }
    return r;
}

static_assert(IntersectionRing<ProductRing>);
static_assert(IntersectionRing<GrassmannianRing>);
static_assert(IntersectionRing<BundleRing<ProductRing>>);
static_assert(IntersectionRing<BundleRing<GrassmannianRing>>);

} // namespace chow
