#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracles {

using chow::BigInt;
using chow::Partition;

BigInt hook_length_count(const Partition& lambda) {
    const auto& parts = lambda.parts();
    if (parts.empty()) return 1;
    Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) {
            int arm = parts[i] - j - 1;
            int leg = conj.part(static_cast<std::size_t>(j)) - static_cast<int>(i) - 1;
            hooks *= BigInt(arm + leg + 1);
        }
    return chow::factorial(static_cast<unsigned>(lambda.weight())) / hooks;
}

namespace {

// dense exponent-vector polynomial in k variables with BigInt coefficients
using Mono = std::vector<int>;
using SymPoly = std::map<Mono, BigInt>;

void add_to(SymPoly& p, const Mono& m, const BigInt& c) {
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

SymPoly mul(const SymPoly& a, const SymPoly& b, int k) {
    SymPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                m[static_cast<std::size_t>(i)] =
                    ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
            add_to(out, m, ca * cb);
        }
    return out;
}

// Schur polynomial by enumerating semistandard tableaux with entries 1..k.
SymPoly schur_poly(const Partition& lambda, int k) {
    SymPoly out;
    if (static_cast<int>(lambda.length()) > k) return out; // zero in k variables
    if (lambda.is_empty()) {
        out.emplace(Mono(static_cast<std::size_t>(k), 0), BigInt(1));
        return out;
    }
    const int rows = static_cast<int>(lambda.length());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(
                                                  static_cast<std::size_t>(i))),
                                              0);
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            Mono m(static_cast<std::size_t>(k), 0);
            for (const auto& row : t)
                for (int v : row) ++m[static_cast<std::size_t>(v - 1)];
            add_to(out, m, BigInt(1));
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= static_cast<int>(t[static_cast<std::size_t>(r)].size())) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
        if (r > 0 && c < static_cast<int>(t[static_cast<std::size_t>(r - 1)].size()))
            lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        for (int v = lo; v <= k; ++v) {
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            fill(nr, nc);
        }
        t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = 0;
    };
    fill(0, 0);
    return out;
}

Mono leading_monomial(const SymPoly& p) {
    // lexicographically largest exponent vector; for a symmetric polynomial
    // it is weakly decreasing, i.e. a partition
    Mono best;
    bool first = true;
    for (const auto& [m, c] : p) {
        if (first || std::lexicographical_compare(best.begin(), best.end(), m.begin(), m.end())) {
            best = m;
            first = false;
        }
    }
    return best;
}

std::map<Partition, BigInt> decompose_in_schur_basis(SymPoly p, int k) {
    std::map<Partition, BigInt> out;
    while (!p.empty()) {
        Mono lead = leading_monomial(p);
        std::vector<int> parts;
        for (int x : lead)
            if (x > 0) parts.push_back(x);
        Partition lambda(parts);
        BigInt coeff = p.at(lead);
        out[lambda] = coeff;
        SymPoly s = schur_poly(lambda, k);
        for (const auto& [m, c] : s) add_to(p, m, BigInt(-coeff * c));
    }
    return out;
}

} // namespace

std::map<Partition, BigInt> schur_product_full(const Partition& a, const Partition& b, int k) {
    SymPoly pa = schur_poly(a, k);
    SymPoly pb = schur_poly(b, k);
    return decompose_in_schur_basis(mul(pa, pb, k), k);
}

std::map<Partition, BigInt> schur_product(const Partition& a, const Partition& b, int k,
                                          int width) {
    auto full = schur_product_full(a, b, k);
    std::map<Partition, BigInt> out;
    for (const auto& [p, c] : full)
        if (p.fits_in_box(k, width)) out.emplace(p, c);
    return out;
}

namespace {

// elements of a finite group as tuples modulo the generator orders
using Tuple = std::vector<long long>;

std::vector<Tuple> enumerate(const std::vector<BigInt>& orders) {
    std::vector<Tuple> out;
    Tuple cur(orders.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == orders.size()) {
            out.push_back(cur);
            return;
        }
        long long ord = orders[i].convert_to<long long>();
        for (long long v = 0; v < ord; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

Tuple apply(const chow::IntegerMatrix& m, const Tuple& x, const std::vector<BigInt>& dst_orders) {
    Tuple out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m.at(i, j) * x[j];
        long long ord = dst_orders[i].convert_to<long long>();
        long long v = (acc % ord).convert_to<long long>();
        out[i] = ((v % ord) + ord) % ord;
    }
    return out;
}

} // namespace

bool finite_exactness(const chow::ExactSequenceInstance& seq, unsigned max_order) {
    for (const auto& g : seq.groups) {
        if (g.free_rank != 0) throw chow::Error("finite oracle needs finite groups");
        BigInt order = 1;
        for (const auto& t : g.torsion) order *= t;
        if (order > max_order) throw chow::Error("group too large for the finite oracle");
    }
    for (std::size_t node = 1; node + 1 < seq.groups.size(); ++node) {
        auto orders_prev = seq.groups[node - 1].generator_orders();
        auto orders_here = seq.groups[node].generator_orders();
        auto orders_next = seq.groups[node + 1].generator_orders();
        std::vector<Tuple> image;
        for (const auto& x : enumerate(orders_prev))
            image.push_back(apply(seq.maps[node - 1], x, orders_here));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::vector<Tuple> kernel;
        for (const auto& x : enumerate(orders_here)) {
            Tuple y = apply(seq.maps[node], x, orders_next);
            bool zero = std::all_of(y.begin(), y.end(), [](long long v) { return v == 0; });
            if (zero) kernel.push_back(x);
        }
        std::sort(kernel.begin(), kernel.end());
        if (image != kernel) return false;
    }
    return true;
}

Partition random_partition_in_box(Rng& rng, int rows, int width) {
    std::vector<int> parts;
    int prev = width;
    for (int i = 0; i < rows; ++i) {
        int p = rng.uniform(0, prev);
        if (p == 0) break;
        parts.push_back(p);
        prev = p;
    }
    return Partition(parts);
}

chow::IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_abs) {
    chow::IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.uniform(-max_abs, max_abs);
    return m;
}

} // namespace oracles
