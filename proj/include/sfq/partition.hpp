#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "sfq/errors.hpp"
#include "sfq/poly_qt.hpp"

namespace sfq {

/// Weak composition: ordered sequence of nonnegative integers.
using Composition = std::vector<int>;

/// Integer partition: weakly decreasing positive parts.
///
/// Diagrams follow the French convention (rows shrink upward); the arm of a
/// cell counts cells strictly east, the leg cells strictly north.
class Partition {
  public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw Error("partition parts must be positive");
            if (i > 0 && parts_[i - 1] < parts_[i])
                throw Error("partition parts must be weakly decreasing");
        }
    }

    /// Builds a partition from an arbitrary nonnegative sequence by sorting
    /// and dropping zeros.
    static Partition from_unsorted(std::vector<int> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        while (!v.empty() && v.back() == 0) v.pop_back();
        return Partition(std::move(v));
    }

    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the length read as zero.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(parts_[0]);
            for (int j = 0; j < parts_[0]; ++j) {
                int count = 0;
                for (int p : parts_)
                    if (p > j) ++count;
                cols[j] = count;
            }
        }
        return Partition(std::move(cols));
    }

    /// n(mu) = sum (i-1) mu_i.
    long n_stat() const {
        long s = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += static_cast<long>(i) * parts_[i];
        return s;
    }

    /// mu subset of lambda as diagrams.
    bool contained_in(const Partition& lam) const {
        if (length() > lam.length()) return false;
        for (int i = 1; i <= length(); ++i)
            if (part(i) > lam.part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

    std::string str() const {
        if (parts_.empty()) return "-";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
        return os << p.str();
    }

  private:
    std::vector<int> parts_;
};

inline Partition parse_partition(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "-" || trimmed.empty()) return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < trimmed.size()) {
        std::size_t start = pos;
        while (pos < trimmed.size() && std::isdigit(static_cast<unsigned char>(trimmed[pos])))
            ++pos;
        if (start == pos) throw ParseError("expected part in partition", pos);
        parts.push_back(std::stoi(trimmed.substr(start, pos - start)));
        if (pos < trimmed.size()) {
            if (trimmed[pos] != ',') throw ParseError("expected ','", pos);
            ++pos;
            if (pos == trimmed.size()) throw ParseError("trailing ','", pos);
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(e.what(), 0);
    }
}

/// Arm and leg hook products of Eqs-style cell statistics:
/// h  = prod over cells (1 - q^arm * t^(leg+1)),
/// h' = prod over cells (1 - q^(arm+1) * t^leg).
inline std::pair<PolyQT, PolyQT> hook_products(const Partition& lam) {
    PolyQT h = PolyQT::one();
    PolyQT hp = PolyQT::one();
    Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i) {
        for (int j = 1; j <= lam.part(i); ++j) {
            int arm = lam.part(i) - j;
            int leg = conj.part(j) - i;
            h *= PolyQT::one() - PolyQT::monomial(1, arm, leg + 1);
            hp *= PolyQT::one() - PolyQT::monomial(1, arm + 1, leg);
        }
    }
    return {h, hp};
}

/// Prepend a column of length k: parts become (mu_1+1,...,mu_l+1,1,...,1)
/// padded to length k.  Requires l(mu) <= k.
inline Partition add_column(const Partition& mu, int k) {
    if (mu.length() > k)
        throw LengthExceedsK("add_column: partition longer than column");
    std::vector<int> parts(static_cast<std::size_t>(k), 1);
    for (int i = 1; i <= mu.length(); ++i) parts[i - 1] = mu.part(i) + 1;
    return Partition(std::move(parts));
}

/// Prepend a row of length k (valid when mu_1 <= k): the partition (k, mu).
inline Partition add_row(const Partition& mu, int k) {
    if (mu.part(1) > k) throw Error("add_row: first part exceeds new row");
    std::vector<int> parts;
    parts.push_back(k);
    for (int p : mu.parts()) parts.push_back(p);
    return Partition(std::move(parts));
}

/// All partitions of n, in reverse-lexicographic order: (n) first, (1^n)
/// last.  This order refines dominance and keys every matrix the engine
/// emits.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw Error("partitions_of: negative n");
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// Dominance order: a <= b iff the partial sums of a never exceed those of b.
/// Only meaningful for |a| == |b|.
inline bool dominated_by(const Partition& a, const Partition& b) {
    long sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

/// lambda/mu is a vertical k-strip: mu inside lambda, k cells added, no two
/// in the same row.
inline bool is_vertical_strip(const Partition& lam, const Partition& mu, int k) {
    if (!mu.contained_in(lam)) return false;
    if (lam.size() - mu.size() != k) return false;
    for (int i = 1; i <= lam.length(); ++i)
        if (lam.part(i) - mu.part(i) > 1) return false;
    return true;
}

/// lambda/mu is a horizontal k-strip: no two added cells in the same column.
inline bool is_horizontal_strip(const Partition& lam, const Partition& mu, int k) {
    if (!mu.contained_in(lam)) return false;
    if (lam.size() - mu.size() != k) return false;
    for (int i = 2; i <= lam.length(); ++i)
        if (lam.part(i) > mu.part(i - 1)) return false;
    return true;
}

/// z_lambda = prod i^{m_i} m_i!, the centralizer size of the cycle type.
inline Zint z_stat(const Partition& lam) {
    Zint z = 1;
    int prev = -1, mult = 0;
    auto flush = [&]() {
        for (int j = 1; j <= mult; ++j) z *= j;
        for (int j = 0; j < mult; ++j) z *= prev;
    };
    for (int p : lam.parts()) {
        if (p == prev) {
            ++mult;
        } else {
            flush();
            prev = p;
            mult = 1;
        }
    }
    flush();
    return z;
}

}  // namespace sfq
