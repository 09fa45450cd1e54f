#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sfq/symfun.hpp"

namespace sfq {

// ---------------------------------------------------------------------------
// The TLV operator: column adder for Hall-Littlewood Q functions, given by
// explicit signed-Schur coefficients on the monomial basis.
// ---------------------------------------------------------------------------

namespace detail {

/// Distinct rearrangements of lam padded with zeros to length n.
inline std::vector<Composition> rearrangements(const Partition& lam, int n) {
    std::vector<int> v(lam.parts());
    v.resize(n, 0);
    std::sort(v.begin(), v.end());
    std::vector<Composition> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// All 0/1 indicator vectors of length n with k ones.
inline std::vector<Composition> indicator_vectors(int n, int k) {
    std::vector<Composition> out;
    Composition eps(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (left == 0) {
            out.push_back(eps);
            return;
        }
        if (pos >= n || n - pos < left) return;
        eps[pos] = 1;
        self(self, pos + 1, left - 1);
        eps[pos] = 0;
        self(self, pos + 1, left);
    };
    rec(rec, 0, k);
    return out;
}

}  // namespace detail

/// TLV_k on a monomial-basis input: kills m_lam with l(lam) > k, otherwise
/// sums c_{eps,p}(t) S_{p+eps} over indicator vectors eps of weight k and
/// rearrangements p of lam, with straightening.  The coefficients pass
/// through Laurent powers of t; the assembled output is polynomial.
inline SymFun<PolyQT> tlv_apply(const SymFun<PolyQT>& f, int k, int n) {
    if (f.basis() != Basis::m)
        throw Error("tlv_apply: input must be in the monomial basis");
    if (k > n) throw Error("tlv_apply: k exceeds alphabet size");

    SymFun<PolyQT> out(Basis::s);
    const auto epsilons = detail::indicator_vectors(n, k);
    const PolyQT one = PolyQT::one();

    for (const auto& [lam, c_lam] : f.terms()) {
        if (lam.length() > k) continue;
        if (lam.length() > n) continue;
        for (const auto& p : detail::rearrangements(lam, n)) {
            for (const auto& eps : epsilons) {
                // support condition: p_i != 0 implies eps_i = 1
                bool supported = true;
                for (int i = 0; i < n && supported; ++i)
                    if (p[i] != 0 && eps[i] == 0) supported = false;
                if (!supported) continue;

                PolyQT coeff =
                    PolyQT::monomial(((n - k) % 2 == 0) ? 1 : -1, 0,
                                     (n - k) * (n - k - 1) / 2);
                for (int i = 0; i < n; ++i) {
                    int expo = k - i;  // k + 1 - (i+1) with 1-based rows
                    if (eps[i] == 0)
                        coeff *= PolyQT::monomial(-1, 0, expo);
                    else if (eps[i] + p[i] == 1)
                        coeff *= one - PolyQT::t(expo);
                    if (coeff.is_zero()) break;
                }
                if (coeff.is_zero()) continue;

                Composition sum(n);
                for (int i = 0; i < n; ++i) sum[i] = p[i] + eps[i];
                auto [sign, part] = straighten(sum);
                if (sign == 0) continue;
                out.add_term(part, sign > 0 ? coeff * c_lam : -(coeff * c_lam));
            }
        }
    }
    return out;
}

/// Hall-Littlewood Q_mu[X;t] by the TLV Rodriguez chain over the conjugate
/// column lengths, shortest column first.  The alphabet for each step
/// defaults to current degree + k; n adds a stability margin beyond |mu|.
inline SymFun<PolyQT> hl_Q(const Partition& mu, int n = -1) {
    int margin = 0;
    if (n >= 0) {
        if (n < mu.size())
            throw AlphabetTooSmall("hl_Q: alphabet smaller than |mu|");
        margin = n - mu.size();
    }
    SymFun<PolyQT> f = SymFun<PolyQT>::one(Basis::s);
    int degree = 0;
    const auto& cols = mu.conjugate().parts();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        int k = *it;
        SymFun<PolyQT> fm = convert(f, Basis::m);
        f = tlv_apply(fm, k, degree + k + margin);
        degree += k;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Kostka-Foulkes matrices.
// ---------------------------------------------------------------------------

/// Matrix of polynomials in t keyed by pairs of partitions of n, rows and
/// columns ordered by the reverse-lexicographic enumeration.
struct KFMatrix {
    int n = 0;
    std::vector<Partition> order;
    std::map<std::pair<Partition, Partition>, PolyQT> entries;

    PolyQT entry(const Partition& lam, const Partition& mu) const {
        auto it = entries.find({lam, mu});
        return it == entries.end() ? PolyQT::zero() : it->second;
    }

    void set(const Partition& lam, const Partition& mu, PolyQT v) {
        if (v.is_zero())
            entries.erase({lam, mu});
        else
            entries[{lam, mu}] = std::move(v);
    }

    friend bool operator==(const KFMatrix& a, const KFMatrix& b) {
        return a.n == b.n && a.order == b.order && a.entries == b.entries;
    }
};

/// H_mu[X;t] = Q_mu[X/(1-t); t] in the Schur basis; its coefficients are the
/// Kostka-Foulkes polynomials.
inline SymFun<PolyQT> hl_H(const Partition& mu) {
    SymFun<PolyQT> q = hl_Q(mu);
    return pleth_scale(q, RatQT(PolyQT::one(), PolyQT::one() - PolyQT::t()));
}

/// (K(t), K(t)^{-1}) for partitions of n.  The inverse is computed by a
/// unitriangular back-substitution over Z[t]; a non-unit diagonal raises
/// InverseNotPolynomial.
inline std::pair<KFMatrix, KFMatrix> kostka_foulkes_matrix(int n) {
    KFMatrix K, Kinv;
    K.n = Kinv.n = n;
    K.order = Kinv.order = partitions_of(n);

    for (const auto& mu : K.order) {
        SymFun<PolyQT> h = hl_H(mu);
        for (const auto& [lam, c] : h.terms()) K.set(lam, mu, c);
    }

    // ascending dominance order = reversed enumeration
    std::vector<Partition> asc(K.order.rbegin(), K.order.rend());
    for (const auto& lam : K.order) {
        // column lam of the inverse: s_lam = sum_mu Kinv_{mu,lam} H_mu
        for (const auto& mu : asc) {
            if (!dominated_by(lam, mu)) continue;  // entries live above lam
            PolyQT diag = K.entry(mu, mu);
            if (!(diag == PolyQT::one()))
                throw InverseNotPolynomial("Kostka-Foulkes diagonal is not 1 at " +
                                           mu.str());
            if (mu == lam) {
                Kinv.set(mu, lam, PolyQT::one());
                continue;
            }
            PolyQT acc;
            for (const auto& rho : asc) {
                if (rho == mu) continue;
                PolyQT k_murho = K.entry(mu, rho);
                if (k_murho.is_zero()) continue;
                PolyQT b = Kinv.entry(rho, lam);
                if (b.is_zero()) continue;
                acc += k_murho * b;
            }
            Kinv.set(mu, lam, -acc);
        }
    }
    return {K, Kinv};
}

/// Shared memoized access to (K(t), K(t)^{-1}).
inline const std::pair<KFMatrix, KFMatrix>& kf_matrices(int n) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<int, std::pair<KFMatrix, KFMatrix>> memo;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    return memo.emplace(n, kostka_foulkes_matrix(n)).first->second;
}

// ---------------------------------------------------------------------------
// Charge oracle: K_{lam,mu}(t) as the charge generating function over
// semistandard tableaux of shape lam and content mu.
// ---------------------------------------------------------------------------

namespace detail {

/// Charge of a word with partition content: repeatedly extract a standard
/// subword (rightmost 1, then each next letter by leftward cyclic scan) and
/// sum its index statistic.
inline long charge_of_word(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    std::vector<bool> used(len, false);
    long total = 0;
    int remaining = len;
    while (remaining > 0) {
        // rightmost unused 1
        int cur = -1;
        for (int i = len - 1; i >= 0; --i)
            if (!used[i] && word[i] == 1) {
                cur = i;
                break;
            }
        if (cur < 0) throw Error("charge: content is not a partition");
        used[cur] = true;
        --remaining;
        std::vector<int> positions;
        positions.push_back(cur);
        for (int v = 2;; ++v) {
            bool exists = false;
            for (int i = 0; i < len; ++i)
                if (!used[i] && word[i] == v) {
                    exists = true;
                    break;
                }
            if (!exists) break;
            int found = -1;
            for (int step = 1; step <= len; ++step) {
                int i = (cur - step % len + len) % len;
                if (!used[i] && word[i] == v) {
                    found = i;
                    break;
                }
            }
            used[found] = true;
            --remaining;
            positions.push_back(found);
            cur = found;
        }
        // index statistic on the extracted standard subword
        long index = 0;
        for (std::size_t v = 1; v < positions.size(); ++v) {
            if (positions[v] > positions[v - 1]) ++index;
            total += index;
        }
    }
    return total;
}

}  // namespace detail

/// Sum of t^charge over SSYT of shape lam, content mu.  Tableaux are
/// enumerated as chains of horizontal strips; the reading word concatenates
/// rows top to bottom.
inline PolyQT charge_oracle(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw Error("charge_oracle: shape and content sizes differ");
    PolyQT acc;
    if (lam.empty()) return PolyQT::one();

    int values = mu.length();
    // chain[v] = shape after placing letters 1..v
    std::vector<Partition> chain(values + 1);
    chain[0] = Partition();
    auto rec = [&](auto&& self, int v) -> void {
        if (v > values) {
            // build the reading word: rows top to bottom, left to right
            std::vector<int> word;
            for (int row = lam.length(); row >= 1; --row)
                for (int col = 1; col <= lam.part(row); ++col) {
                    for (int val = 1; val <= values; ++val)
                        if (chain[val - 1].part(row) < col && col <= chain[val].part(row)) {
                            word.push_back(val);
                            break;
                        }
                }
            acc += PolyQT::t(static_cast<int>(detail::charge_of_word(word)));
            return;
        }
        for (const auto& next : detail::pieri_row_strips(chain[v - 1], mu.part(v))) {
            if (!next.contained_in(lam)) continue;
            chain[v] = next;
            self(self, v + 1);
        }
        chain[v] = Partition();
    };
    rec(rec, 1);
    return acc;
}

// ---------------------------------------------------------------------------
// Cocharge companions.
// ---------------------------------------------------------------------------

/// H~_mu[X;t] = sum_lam s_lam t^{n(mu)} K_{lam,mu}(1/t), the cocharge
/// Hall-Littlewood function.
inline SymFun<PolyQT> hl_Htilde(const Partition& mu) {
    const auto& K = kf_matrices(mu.size()).first;
    int nmu = static_cast<int>(mu.n_stat());
    SymFun<PolyQT> out(Basis::s);
    for (const auto& lam : K.order) {
        PolyQT e = K.entry(lam, mu);
        if (e.is_zero()) continue;
        out.add_term(lam, e.inverted_t().shifted(0, nmu));
    }
    return out;
}

}  // namespace sfq
