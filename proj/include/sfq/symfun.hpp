#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sfq/errors.hpp"
#include "sfq/partition.hpp"
#include "sfq/poly_qt.hpp"
#include "sfq/rat_qt.hpp"

namespace sfq {

enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's' };

inline char basis_char(Basis b) { return static_cast<char>(b); }

inline Basis basis_from_char(char c) {
    switch (c) {
        case 'm': return Basis::m;
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
        case 's': return Basis::s;
        default: throw Error(std::string("unknown basis tag '") + c + "'");
    }
}

/// Shared lock for all conversion caches.  Recursive because the
/// Murnaghan-Nakayama and product memos call back into each other.
inline std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex m;
    return m;
}

/// Finite linear combination of basis elements indexed by partitions.
/// Coefficients live in R (PolyQT or RatQT).  No zero coefficient is stored.
template <class R>
class SymFun {
  public:
    SymFun() : basis_(Basis::s) {}
    explicit SymFun(Basis b) : basis_(b) {}

    static SymFun zero(Basis b = Basis::s) { return SymFun(b); }

    static SymFun one(Basis b = Basis::s) {
        SymFun f(b);
        f.add_term(Partition(), R(Zint(1)));
        return f;
    }

    static SymFun element(Basis b, const Partition& lam, R c = R(Zint(1))) {
        SymFun f(b);
        f.add_term(lam, std::move(c));
        return f;
    }

    Basis basis() const { return basis_; }
    const std::map<Partition, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    R coeff(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? R(Zint(0)) : it->second;
    }

    void add_term(const Partition& lam, const R& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(lam, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void set_term(const Partition& lam, R c) {
        if (c.is_zero())
            terms_.erase(lam);
        else
            terms_[lam] = std::move(c);
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [lam, c] : terms_) d = std::max(d, lam.size());
        return d;
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [lam, c] : terms_) {
            if (d < 0) d = lam.size();
            if (lam.size() != d) return false;
        }
        return true;
    }

    /// Terms of total degree d.
    SymFun component(int d) const {
        SymFun f(basis_);
        for (const auto& [lam, c] : terms_)
            if (lam.size() == d) f.terms_[lam] = c;
        return f;
    }

    SymFun truncated(int dmax) const {
        SymFun f(basis_);
        for (const auto& [lam, c] : terms_)
            if (lam.size() <= dmax) f.terms_[lam] = c;
        return f;
    }

    SymFun& operator+=(const SymFun& o) {
        require_same_basis(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, c);
        return *this;
    }
    SymFun& operator-=(const SymFun& o) {
        require_same_basis(o);
        for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
        return *this;
    }
    friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
    friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }

    SymFun operator-() const {
        SymFun f(basis_);
        for (const auto& [lam, c] : terms_) f.terms_[lam] = -c;
        return f;
    }

    friend SymFun operator*(const SymFun& f, const R& c) {
        SymFun g(f.basis_);
        if (c.is_zero()) return g;
        for (const auto& [lam, fc] : f.terms_) g.add_term(lam, fc * c);
        return g;
    }
    friend SymFun operator*(const R& c, const SymFun& f) { return f * c; }

    friend bool operator==(const SymFun& a, const SymFun& b) {
        return a.basis_ == b.basis_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")*" << basis_char(basis_) << "[" << lam.str() << "]";
            first = false;
        }
        return os.str();
    }

  private:
    void require_same_basis(const SymFun& o) const {
        if (basis_ != o.basis_)
            throw Error("SymFun arithmetic requires matching bases");
    }

    Basis basis_;
    std::map<Partition, R> terms_;
};

template <class R>
std::ostream& operator<<(std::ostream& os, const SymFun<R>& f) {
    return os << f.str();
}

inline SymFun<RatQT> promote(const SymFun<PolyQT>& f) {
    SymFun<RatQT> g(f.basis());
    for (const auto& [lam, c] : f.terms()) g.set_term(lam, RatQT(c));
    return g;
}
inline const SymFun<RatQT>& promote(const SymFun<RatQT>& f) { return f; }

/// Demote a rational-coefficient function to polynomial coefficients;
/// throws NotDivisible when some coefficient is not polynomial.
inline SymFun<PolyQT> demote(const SymFun<RatQT>& f) {
    SymFun<PolyQT> g(f.basis());
    for (const auto& [lam, c] : f.terms()) g.set_term(lam, c.to_poly());
    return g;
}

template <class R, class F>
auto map_coeffs(const SymFun<R>& f, F&& fn) {
    using S = std::decay_t<decltype(fn(std::declval<R>()))>;
    SymFun<S> g(f.basis());
    for (const auto& [lam, c] : f.terms()) {
        S v = fn(c);
        if (!v.is_zero()) g.set_term(lam, std::move(v));
    }
    return g;
}

template <class R>
SymFun<R> swap_qt(const SymFun<R>& f) {
    return map_coeffs(f, [](const R& c) { return c.swapped_qt(); });
}

// ---------------------------------------------------------------------------
// Conversion tables (all memoized behind cache_mutex).
// ---------------------------------------------------------------------------

namespace detail {

/// Partitions lam containing nu with lam/nu a horizontal r-strip.
inline std::vector<Partition> pieri_row_strips(const Partition& nu, int r) {
    std::vector<Partition> out;
    int rows = nu.length() + 1;
    std::vector<int> lam(rows, 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i > rows) {
            if (rem == 0) {
                std::vector<int> parts(lam.begin(), lam.begin() + rows);
                while (!parts.empty() && parts.back() == 0) parts.pop_back();
                out.emplace_back(std::move(parts));
            }
            return;
        }
        int lo = nu.part(i);
        int hi = (i == 1) ? nu.part(1) + rem : std::min(nu.part(i - 1), nu.part(i) + rem);
        for (int v = lo; v <= hi; ++v) {
            lam[i - 1] = v;
            self(self, i + 1, rem - (v - lo));
        }
        lam[i - 1] = 0;
    };
    rec(rec, 1, r);
    return out;
}

/// Irreducible character chi^lam(rho) by rim-hook removal on beta numbers.
inline Zint character_value(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size())
        throw Error("character_value: size mismatch");
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::pair<Partition, Partition>, Zint> memo;
    auto key = std::make_pair(lam, rho);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    Zint result = 0;
    if (lam.empty()) {
        result = 1;
    } else {
        int r = rho.part(1);
        std::vector<int> rho_rest(rho.parts().begin() + 1, rho.parts().end());
        Partition rest(rho_rest);
        int l = lam.length();
        std::vector<int> beta(l);
        for (int i = 1; i <= l; ++i) beta[i - 1] = lam.part(i) + (l - i);
        for (int i = 0; i < l; ++i) {
            int b = beta[i] - r;
            if (b < 0) continue;
            if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
            int crossings = 0;
            for (int k = 0; k < l; ++k)
                if (k != i && beta[k] > b && beta[k] < beta[i]) ++crossings;
            std::vector<int> nb = beta;
            nb[i] = b;
            std::sort(nb.begin(), nb.end(), std::greater<int>());
            std::vector<int> parts;
            for (int j = 0; j < l; ++j) {
                int pj = nb[j] - (l - 1 - j);
                if (pj > 0) parts.push_back(pj);
            }
            Zint sub = character_value(Partition(parts), rest);
            result += (crossings % 2 == 0) ? sub : -sub;
        }
    }
    memo.emplace(std::move(key), result);
    return result;
}

/// Kostka numbers for degree d: K[(lam,mu)] = #SSYT(lam, mu), built by
/// iterated row Pieri on h_mu.
inline const std::map<std::pair<Partition, Partition>, Zint>& kostka_table(int d) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<int, std::map<std::pair<Partition, Partition>, Zint>> memo;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;

    std::map<std::pair<Partition, Partition>, Zint> table;
    for (const auto& mu : partitions_of(d)) {
        std::map<Partition, Zint> acc;
        acc[Partition()] = 1;
        for (int part : mu.parts()) {
            std::map<Partition, Zint> next;
            for (const auto& [nu, c] : acc)
                for (const auto& lam : pieri_row_strips(nu, part)) next[lam] += c;
            acc = std::move(next);
        }
        for (auto& [lam, c] : acc)
            if (c != 0) table[{lam, mu}] = c;
    }
    return memo.emplace(d, std::move(table)).first->second;
}

/// Expansion of each m_mu of degree d in the Schur basis (inverse Kostka).
inline const std::map<Partition, std::map<Partition, Zint>>& m_to_s_table(int d) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<int, std::map<Partition, std::map<Partition, Zint>>> memo;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;

    const auto& kostka = kostka_table(d);
    auto K = [&](const Partition& lam, const Partition& mu) -> Zint {
        auto k = kostka.find({lam, mu});
        return k == kostka.end() ? Zint(0) : k->second;
    };

    std::map<Partition, std::map<Partition, Zint>> table;
    auto order = partitions_of(d);
    // Process in increasing dominance (reverse enumeration): lower terms first.
    for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        const Partition& mu = *rit;
        std::map<Partition, Zint> expansion;
        expansion[mu] = 1;  // s_mu leading term
        for (const auto& nu : order) {
            if (nu == mu || !dominated_by(nu, mu)) continue;
            Zint k = K(mu, nu);
            if (k == 0) continue;
            for (const auto& [lam, c] : table.at(nu)) {
                expansion[lam] -= k * c;
                if (expansion[lam] == 0) expansion.erase(lam);
            }
        }
        table[mu] = std::move(expansion);
    }
    return memo.emplace(d, std::move(table)).first->second;
}

/// Jacobi-Trudi expansion of s_lam in products of complete homogeneous
/// functions: determinant det(h_{lam_i - i + j}) expanded over permutations.
inline const std::map<Partition, Zint>& schur_in_h(const Partition& lam) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<Partition, std::map<Partition, Zint>> memo;
    auto it = memo.find(lam);
    if (it != memo.end()) return it->second;

    std::map<Partition, Zint> result;
    int l = lam.length();
    if (l == 0) {
        result[Partition()] = 1;
    } else {
        std::vector<int> perm(l);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            int inv = 0;
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j)
                    if (perm[i] > perm[j]) ++inv;
            std::vector<int> idx;
            bool ok = true;
            for (int i = 1; i <= l && ok; ++i) {
                int e = lam.part(i) - i + perm[i - 1];
                if (e < 0) ok = false;
                else if (e > 0) idx.push_back(e);
            }
            if (!ok) continue;
            Partition mu = Partition::from_unsorted(idx);
            result[mu] += (inv % 2 == 0) ? 1 : -1;
            if (result[mu] == 0) result.erase(mu);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return memo.emplace(lam, std::move(result)).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Basis conversion.  The Schur basis is the hub: p->s via characters,
// m->s via inverse Kostka, h/e->s via Kostka numbers, and the reverse
// directions via characters over z, Kostka, and Jacobi-Trudi determinants.
// ---------------------------------------------------------------------------

namespace detail {

template <class R>
SymFun<R> to_schur(const SymFun<R>& f) {
    switch (f.basis()) {
        case Basis::s: return f;
        case Basis::p: {
            SymFun<R> g(Basis::s);
            for (const auto& [rho, c] : f.terms())
                for (const auto& lam : partitions_of(rho.size())) {
                    Zint chi = character_value(lam, rho);
                    if (chi != 0) g.add_term(lam, c * R(chi));
                }
            return g;
        }
        case Basis::m: {
            SymFun<R> g(Basis::s);
            for (const auto& [mu, c] : f.terms())
                for (const auto& [lam, k] : m_to_s_table(mu.size()).at(mu))
                    g.add_term(lam, c * R(k));
            return g;
        }
        case Basis::h: {
            SymFun<R> g(Basis::s);
            for (const auto& [mu, c] : f.terms()) {
                const auto& kostka = kostka_table(mu.size());
                for (const auto& lam : partitions_of(mu.size())) {
                    auto it = kostka.find({lam, mu});
                    if (it != kostka.end()) g.add_term(lam, c * R(it->second));
                }
            }
            return g;
        }
        case Basis::e: {
            SymFun<R> g(Basis::s);
            for (const auto& [mu, c] : f.terms()) {
                const auto& kostka = kostka_table(mu.size());
                for (const auto& lam : partitions_of(mu.size())) {
                    auto it = kostka.find({lam.conjugate(), mu});
                    if (it != kostka.end()) g.add_term(lam, c * R(it->second));
                }
            }
            return g;
        }
    }
    throw Error("unreachable");
}

inline SymFun<RatQT> schur_to_p(const SymFun<RatQT>& f) {
    SymFun<RatQT> g(Basis::p);
    for (const auto& [lam, c] : f.terms())
        for (const auto& rho : partitions_of(lam.size())) {
            Zint chi = character_value(lam, rho);
            if (chi != 0) g.add_term(rho, c * RatQT(PolyQT(chi), PolyQT(z_stat(rho))));
        }
    return g;
}

template <class R>
SymFun<R> from_schur(const SymFun<R>& f, Basis target) {
    switch (target) {
        case Basis::s: return f;
        case Basis::m: {
            SymFun<R> g(Basis::m);
            for (const auto& [lam, c] : f.terms()) {
                const auto& kostka = kostka_table(lam.size());
                for (const auto& mu : partitions_of(lam.size())) {
                    auto it = kostka.find({lam, mu});
                    if (it != kostka.end()) g.add_term(mu, c * R(it->second));
                }
            }
            return g;
        }
        case Basis::h: {
            SymFun<R> g(Basis::h);
            for (const auto& [lam, c] : f.terms())
                for (const auto& [mu, k] : schur_in_h(lam)) g.add_term(mu, c * R(k));
            return g;
        }
        case Basis::e: {
            // dual Jacobi-Trudi: s_lam = det(e_{lam'_i - i + j})
            SymFun<R> g(Basis::e);
            for (const auto& [lam, c] : f.terms())
                for (const auto& [mu, k] : schur_in_h(lam.conjugate()))
                    g.add_term(mu, c * R(k));
            return g;
        }
        case Basis::p: {
            if constexpr (std::is_same_v<R, RatQT>) {
                return schur_to_p(f);
            } else {
                return demote(schur_to_p(promote(f)));
            }
        }
    }
    throw Error("unreachable");
}

}  // namespace detail

/// Re-express f in the target basis.  Round trips are exact.  Converting
/// PolyQT coefficients to the power-sum basis demotes through RatQT and
/// throws NotDivisible when the expansion is not integral.
template <class R>
SymFun<R> convert(const SymFun<R>& f, Basis target) {
    if (f.basis() == target) return f;
    return detail::from_schur(detail::to_schur(f), target);
}

// ---------------------------------------------------------------------------
// Products.
// ---------------------------------------------------------------------------

namespace detail {

inline Partition union_parts(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

}  // namespace detail

/// Product s_lam * s_mu in the Schur basis, computed through the power-sum
/// basis and memoized; coefficients are the Littlewood-Richardson numbers.
inline const SymFun<PolyQT>& schur_product(const Partition& lam, const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::pair<Partition, Partition>, SymFun<PolyQT>> memo;
    auto key = lam < mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    SymFun<RatQT> a = detail::schur_to_p(promote(SymFun<PolyQT>::element(Basis::s, key.first)));
    SymFun<RatQT> b = detail::schur_to_p(promote(SymFun<PolyQT>::element(Basis::s, key.second)));
    SymFun<RatQT> prod(Basis::p);
    for (const auto& [ra, ca] : a.terms())
        for (const auto& [rb, cb] : b.terms())
            prod.add_term(detail::union_parts(ra, rb), ca * cb);
    SymFun<PolyQT> result = demote(detail::to_schur(prod));
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

/// Ring product.  Multiplicative bases (p, e, h) multiply termwise by part
/// union; everything else routes through the power-sum basis.  The result is
/// returned in the basis of the first factor.
template <class R>
SymFun<R> multiply(const SymFun<R>& f, const SymFun<R>& g) {
    Basis out = f.basis();
    if (f.basis() == g.basis() &&
        (f.basis() == Basis::p || f.basis() == Basis::e || f.basis() == Basis::h)) {
        SymFun<R> prod(f.basis());
        for (const auto& [la, ca] : f.terms())
            for (const auto& [lb, cb] : g.terms())
                prod.add_term(detail::union_parts(la, lb), ca * cb);
        return prod;
    }
    SymFun<R> fs = detail::to_schur(f);
    SymFun<R> gs = detail::to_schur(g);
    SymFun<R> prod(Basis::s);
    for (const auto& [la, ca] : fs.terms())
        for (const auto& [lb, cb] : gs.terms())
            for (const auto& [lam, k] : schur_product(la, lb).terms())
                prod.add_term(lam, ca * cb * R(k.coeff(0, 0)));
    return detail::from_schur(prod, out);
}

// ---------------------------------------------------------------------------
// Skew Schur functions and straightening.
// ---------------------------------------------------------------------------

/// Schur expansion of s_{lam/mu}; coefficients are Littlewood-Richardson
/// numbers, obtained from memoized Schur products.
inline const SymFun<PolyQT>& skew_schur(const Partition& lam, const Partition& mu) {
    if (!mu.contained_in(lam))
        throw NotContained("skew_schur: inner shape not contained in outer");
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::pair<Partition, Partition>, SymFun<PolyQT>> memo;
    auto key = std::make_pair(lam, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    SymFun<PolyQT> result(Basis::s);
    int d = lam.size() - mu.size();
    for (const auto& nu : partitions_of(d)) {
        PolyQT c = schur_product(mu, nu).coeff(lam);
        if (!c.is_zero()) result.add_term(nu, c);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

/// Straighten the formal Schur indexed by a composition: antisymmetrize
/// alpha + delta with delta = (n-1,...,1,0).  Returns (sign, partition) with
/// sign 0 when an exponent repeats.
inline std::pair<int, Partition> straighten(const Composition& alpha) {
    int n = static_cast<int>(alpha.size());
    std::vector<int> v(alpha);
    for (int i = 0; i < n; ++i) {
        if (v[i] < 0) throw Error("straighten: negative entry");
        v[i] += n - 1 - i;
    }
    int sign = 1;
    // insertion sort descending, tracking swap parity
    for (int i = 1; i < n; ++i) {
        int j = i;
        while (j > 0 && v[j] > v[j - 1]) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
            --j;
        }
        if (j > 0 && v[j] == v[j - 1]) return {0, Partition()};
    }
    std::vector<int> parts;
    for (int i = 0; i < n; ++i) {
        int p = v[i] - (n - 1 - i);
        if (p < 0) throw Error("straighten: internal underflow");
        if (p > 0) parts.push_back(p);
    }
    return {sign, Partition(std::move(parts))};
}

// ---------------------------------------------------------------------------
// The omega involution and the Hall pairing.
// ---------------------------------------------------------------------------

/// p_k -> (-1)^{k-1} p_k; equivalently s_lam -> s_{lam'}.
template <class R>
SymFun<R> omega(const SymFun<R>& f) {
    if (f.basis() == Basis::p) {
        SymFun<R> g(Basis::p);
        for (const auto& [rho, c] : f.terms()) {
            int sgn = (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
            g.add_term(rho, sgn > 0 ? c : -c);
        }
        return g;
    }
    if (f.basis() == Basis::s) {
        SymFun<R> g(Basis::s);
        for (const auto& [lam, c] : f.terms()) g.add_term(lam.conjugate(), c);
        return g;
    }
    return detail::from_schur(omega(detail::to_schur(f)), f.basis());
}

/// Hall inner product: the Schur basis is orthonormal,
/// <p_lam, p_mu> = delta * z_lam.
template <class R>
R hall_inner(const SymFun<R>& f, const SymFun<R>& g) {
    SymFun<R> fs = detail::to_schur(f);
    SymFun<R> gs = detail::to_schur(g);
    R acc{Zint(0)};
    for (const auto& [lam, c] : fs.terms()) {
        R d = gs.coeff(lam);
        if (!d.is_zero()) acc += c * d;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Plethysm by a scaled single alphabet: p_k -> c(q^k, t^k) p_k.
// ---------------------------------------------------------------------------

/// Substitute the alphabet c*X where c is a coefficient template evaluated
/// at k by q -> q^k, t -> t^k.  This covers X(1-t), X/(1-t), X(1-q), qX.
template <class R>
SymFun<R> pleth_scale(const SymFun<R>& f, const RatQT& c) {
    SymFun<RatQT> p = detail::schur_to_p(detail::to_schur(promote(f)));
    SymFun<RatQT> g(Basis::p);
    for (const auto& [rho, coeff] : p.terms()) {
        RatQT factor = coeff;
        for (int part : rho.parts()) factor *= c.exponents_scaled(part);
        g.add_term(rho, factor);
    }
    SymFun<RatQT> back = detail::from_schur(detail::to_schur(g), f.basis());
    if constexpr (std::is_same_v<R, RatQT>)
        return back;
    else
        return demote(back);
}

/// Memoized s_mu[(1 - a)X] for a in {q, t}; the integral workhorse of the
/// operator twist.
inline const SymFun<PolyQT>& schur_pleth_one_minus(const Partition& mu, char param) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::pair<Partition, char>, SymFun<PolyQT>> memo;
    auto key = std::make_pair(mu, param);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    PolyQT a = (param == 'q') ? PolyQT::q() : PolyQT::t();
    SymFun<PolyQT> f = SymFun<PolyQT>::element(Basis::s, mu);
    SymFun<PolyQT> result = pleth_scale(f, RatQT(PolyQT::one() - a));
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace sfq
