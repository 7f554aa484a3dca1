#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace chow {

/// A monomial in the variables of some ring spec: a sparse exponent vector.
/// Entries are (variable index, exponent) pairs sorted by variable index,
/// with all exponents strictly positive. The empty monomial is the unit.
class Monomial {
  public:
    using Entry = std::pair<std::uint32_t, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(std::uint32_t var, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.entries_.push_back({var, exp});
        return m;
    }

    const std::vector<Entry>& entries() const { return entries_; }
    bool is_unit() const { return entries_.empty(); }

    std::uint32_t exponent(std::uint32_t var) const {
        for (const auto& [v, e] : entries_)
            if (v == var) return e;
        return 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.entries_.reserve(a.entries_.size() + b.entries_.size());
        auto ia = a.entries_.begin(), ib = b.entries_.begin();
        while (ia != a.entries_.end() && ib != b.entries_.end()) {
            if (ia->first < ib->first) out.entries_.push_back(*ia++);
            else if (ib->first < ia->first) out.entries_.push_back(*ib++);
            else {
                out.entries_.push_back({ia->first, ia->second + ib->second});
                ++ia; ++ib;
            }
        }
        out.entries_.insert(out.entries_.end(), ia, a.entries_.end());
        out.entries_.insert(out.entries_.end(), ib, b.entries_.end());
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Plain lexicographic order on the sparse exponent vectors; used as the
    // map key order. Display order (graded lex) is applied at serialization.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(
            a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
            [](const Entry& x, const Entry& y) {
                // same variable: higher exponent first, so h^2 < h requires care;
                // we order by (var asc, exp desc) to make x^3 precede x^2 y.
                if (x.first != y.first) return x.first < y.first;
                return x.second > y.second;
            });
    }

  private:
    std::vector<Entry> entries_;
};

} // namespace chow
