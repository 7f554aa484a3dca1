#pragma once

#include "chow/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace chow {

/// An integer partition: weakly decreasing, strictly positive parts.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw Error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw Error("partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    bool is_empty() const { return parts_.empty(); }

    /// At most `rows` parts, each at most `width`.
    bool fits_in_box(int rows, int width) const {
        if (static_cast<int>(parts_.size()) > rows) return false;
        return parts_.empty() || parts_.front() <= width;
    }

    /// lambda <= mu componentwise.
    bool contained_in(const Partition& mu) const {
        for (std::size_t i = 0; i < parts_.size(); ++i)
            if (parts_[i] > mu.part(i)) return false;
        return true;
    }

    /// The complement (width - lambda_{rows}, ..., width - lambda_1) inside
    /// a rows x width box; requires the partition to fit.
    Partition complement_in_box(int rows, int width) const {
        if (!fits_in_box(rows, width)) throw Error("partition does not fit in box");
        std::vector<int> out;
        for (int i = rows - 1; i >= 0; --i) {
            int p = width - part(static_cast<std::size_t>(i));
            if (p > 0) out.push_back(p);
        }
        return Partition(std::move(out));
    }

    Partition conjugate() const {
        std::vector<int> out;
        for (int c = 1; parts_.empty() ? false : c <= parts_.front(); ++c) {
            int count = 0;
            for (int p : parts_)
                if (p >= c) ++count;
            out.push_back(count);
        }
        return Partition(std::move(out));
    }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts_ < b.parts_;
    }

    /// "s[2,1]"; the unit class prints as "s[]".
    std::string str() const {
        std::ostringstream os;
        os << "s[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        os << "]";
        return os.str();
    }

  private:
    std::vector<int> parts_;
};

/// mu/lambda is a horizontal strip: lambda <= mu and mu_{i+1} <= lambda_i.
inline bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contained_in(mu)) return false;
    for (std::size_t i = 0; i + 1 < mu.length(); ++i)
        if (mu.part(i + 1) > lambda.part(i)) return false;
    return true;
}

/// All partitions of weight w fitting in a rows x width box.
inline std::vector<Partition> partitions_in_box(int w, int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int maxpart, int slots) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (slots == 0) return;
        for (int p = std::min(remaining, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p, slots - 1);
            cur.pop_back();
        }
    };
    if (w >= 0 && w <= rows * width) rec(rec, w, width, rows);
    return out;
}

inline std::vector<Partition> all_partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    for (int w = 0; w <= rows * width; ++w) {
        auto batch = partitions_in_box(w, rows, width);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace chow
