#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "sfq/symfun.hpp"

namespace sfq {

/// Polynomial in a finite alphabet x_1..x_n over RatQT.  Exponent vectors
/// all have length n; no zero coefficients are stored.
class XPoly {
  public:
    using Exps = std::vector<int>;

    XPoly() : n_(0) {}
    explicit XPoly(int n) : n_(n) {
        if (n < 0) throw Error("XPoly: negative alphabet size");
    }

    static XPoly zero(int n) { return XPoly(n); }

    static XPoly constant(int n, const RatQT& c) {
        XPoly p(n);
        if (!c.is_zero()) p.terms_[Exps(n, 0)] = c;
        return p;
    }
    static XPoly one(int n) { return constant(n, RatQT(1)); }

    static XPoly monomial(int n, Exps e, const RatQT& c) {
        if (static_cast<int>(e.size()) != n)
            throw Error("XPoly::monomial: exponent length mismatch");
        XPoly p(n);
        if (!c.is_zero()) p.terms_[std::move(e)] = c;
        return p;
    }

    static XPoly variable(int n, int i) {
        Exps e(n, 0);
        e.at(i) = 1;
        return monomial(n, std::move(e), RatQT(1));
    }

    int nvars() const { return n_; }
    const std::map<Exps, RatQT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    int max_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    void add_term(const Exps& e, const RatQT& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XPoly& operator+=(const XPoly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    XPoly& operator-=(const XPoly& o) {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }

    XPoly operator-() const {
        XPoly r(n_);
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend XPoly operator*(const XPoly& a, const XPoly& b) {
        a.require_same(b);
        XPoly r(a.n_);
        Exps e(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

    friend XPoly operator*(const XPoly& a, const RatQT& c) {
        XPoly r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : a.terms_) r.terms_[e] = v * c;
        return r;
    }
    friend XPoly operator*(const RatQT& c, const XPoly& a) { return a * c; }

    friend bool operator==(const XPoly& a, const XPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

    /// x_i -> c * x_i for i in I.
    XPoly scaled_subset(const std::vector<int>& idx, const RatQT& c) const {
        XPoly r(n_);
        for (const auto& [e, v] : terms_) {
            int total = 0;
            for (int i : idx) total += e.at(i);
            r.add_term(e, v * c.pow(total));
        }
        return r;
    }

    /// x_i -> 0 for i in I (variable deletion on expansions).
    XPoly vars_deleted(const std::vector<int>& idx) const {
        XPoly r(n_);
        for (const auto& [e, v] : terms_) {
            bool keep = true;
            for (int i : idx)
                if (e.at(i) != 0) {
                    keep = false;
                    break;
                }
            if (keep) r.terms_[e] = v;
        }
        return r;
    }

    /// Terms of total degree exactly d / at most d.
    XPoly component(int d) const {
        XPoly r(n_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_[e] = c;
        return r;
    }
    XPoly truncated(int d) const {
        XPoly r(n_);
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), 0) <= d) r.terms_[e] = c;
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")";
            for (int i = 0; i < n_; ++i)
                if (e[i] != 0) {
                    os << "*x" << (i + 1);
                    if (e[i] != 1) os << "^" << e[i];
                }
            first = false;
        }
        return os.str();
    }

  private:
    void require_same(const XPoly& o) const {
        if (n_ != o.n_) throw Error("XPoly arithmetic requires equal alphabets");
    }

    int n_;
    std::map<Exps, RatQT> terms_;
};

/// Exact multivariate division (lex order); throws NotDivisible when no
/// polynomial quotient exists.
inline XPoly xdiv_exact(const XPoly& a, const XPoly& b) {
    if (b.is_zero()) throw NotDivisible("XPoly division by zero");
    if (a.is_zero()) return XPoly::zero(a.nvars());
    if (a.nvars() != b.nvars()) throw Error("XPoly division: alphabet mismatch");

    const int n = a.nvars();
    XPoly rem = a;
    XPoly quot(n);
    const auto& blt = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlt = *rem.terms().rbegin();
        XPoly::Exps e(n);
        for (int i = 0; i < n; ++i) {
            e[i] = rlt.first[i] - blt.first[i];
            if (e[i] < 0) throw NotDivisible("XPoly quotient does not exist");
        }
        XPoly term = XPoly::monomial(n, e, rlt.second / blt.second);
        quot += term;
        rem -= term * b;
    }
    return quot;
}

/// The elementary symmetric polynomial e_k on n variables.
inline XPoly elementary_xpoly(int n, int k) {
    XPoly r(n);
    if (k < 0 || k > n) return r;
    std::vector<int> choice(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            XPoly::Exps e(n, 0);
            for (int i : choice) e[i] = 1;
            r.add_term(e, RatQT(1));
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            choice[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return r;
}

/// Vandermonde product over the window (defaults to the whole alphabet).
inline XPoly vandermonde(int n, const std::vector<int>& window) {
    XPoly r = XPoly::one(n);
    for (std::size_t a = 0; a < window.size(); ++a)
        for (std::size_t b = a + 1; b < window.size(); ++b)
            r *= XPoly::variable(n, window[a]) - XPoly::variable(n, window[b]);
    return r;
}

inline std::vector<int> full_window(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

/// Evaluation of a symmetric function at x_1 + ... + x_n.
template <class R>
XPoly expand(const SymFun<R>& f, int n) {
    SymFun<RatQT> fm = convert(promote(f), Basis::m);
    XPoly r(n);
    for (const auto& [lam, c] : fm.terms()) {
        if (lam.length() > n) continue;
        std::vector<int> e(lam.parts());
        e.resize(n, 0);
        std::sort(e.begin(), e.end());
        do {
            r.add_term(e, c);
        } while (std::next_permutation(e.begin(), e.end()));
    }
    return r;
}

/// The unique symmetric function (monomial basis) restricting to p; valid
/// when the total degree does not exceed the alphabet size.
inline SymFun<RatQT> lift(const XPoly& p) {
    const int n = p.nvars();
    SymFun<RatQT> f(Basis::m);
    std::map<Partition, RatQT> reps;
    for (const auto& [e, c] : p.terms()) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (deg > n)
            throw DegreeExceedsAlphabet("lift: degree " + std::to_string(deg) +
                                        " exceeds alphabet " + std::to_string(n));
        std::vector<int> sorted(e);
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
        Partition lam(sorted);
        auto it = reps.find(lam);
        if (it == reps.end())
            reps.emplace(lam, c);
        else if (it->second != c)
            throw NotSymmetric("lift: orbit coefficients differ");
    }
    // completeness: every permutation of each orbit must be present
    for (const auto& [lam, c] : reps) {
        std::vector<int> e(lam.parts());
        e.resize(n, 0);
        std::sort(e.begin(), e.end());
        do {
            auto it = p.terms().find(e);
            if (it == p.terms().end() || it->second != c)
                throw NotSymmetric("lift: orbit incomplete");
        } while (std::next_permutation(e.begin(), e.end()));
        f.set_term(lam, c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// The Macdonald operator, in both the subset-sum and determinantal forms.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& window) {
    std::vector<std::vector<int>> out;
    const std::size_t n = window.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) s.push_back(window[i]);
        out.push_back(std::move(s));
    }
    return out;
}

/// A_I * Delta as a polynomial: t^{C(|I|,2)} * sign * prod_{i in I, j notin I}
/// (t x_i - x_j) * prod_{noncrossing pairs} (x_i - x_j).
inline XPoly a_coeff_times_vandermonde(int n, const std::vector<int>& window,
                                       const std::vector<int>& I) {
    std::vector<bool> in_I(n, false);
    for (int i : I) in_I[i] = true;

    int inv = 0;  // crossing pairs (b < a) with b outside I, a inside
    for (std::size_t x = 0; x < window.size(); ++x)
        for (std::size_t y = x + 1; y < window.size(); ++y) {
            int b = window[x], a = window[y];
            if (!in_I[b] && in_I[a]) ++inv;
        }

    int choose2 = static_cast<int>(I.size()) * (static_cast<int>(I.size()) - 1) / 2;
    RatQT scale(PolyQT::monomial(inv % 2 == 0 ? 1 : -1, 0, choose2));
    XPoly r = XPoly::constant(n, scale);
    RatQT tval(PolyQT::t());
    for (int i : window) {
        for (int j : window) {
            if (i == j) continue;
            if (in_I[i] && !in_I[j])
                r *= tval * XPoly::variable(n, i) - XPoly::variable(n, j);
        }
    }
    for (std::size_t x = 0; x < window.size(); ++x)
        for (std::size_t y = x + 1; y < window.size(); ++y) {
            int i = window[x], j = window[y];
            if (in_I[i] == in_I[j])
                r *= XPoly::variable(n, i) - XPoly::variable(n, j);
        }
    return r;
}

}  // namespace detail

/// M(u) p = sum_r u^r sum_{|I|=r} A_I[window; t] T_I^q p, computed over the
/// common Vandermonde denominator and divided out exactly at the end.  When
/// q_to_zero is set, T_I^q is replaced by variable deletion (the q=0 form).
inline XPoly macdonald_sum_form(const XPoly& p, const RatQT& u,
                                const std::vector<int>& window, bool q_to_zero = false) {
    const int n = p.nvars();
    const RatQT qval(PolyQT::q());
    XPoly acc(n);
    for (const auto& I : detail::subsets_of(window)) {
        XPoly moved = q_to_zero ? p.vars_deleted(I) : p.scaled_subset(I, qval);
        XPoly coeff = detail::a_coeff_times_vandermonde(n, window, I);
        acc += coeff * moved * u.pow(static_cast<int>(I.size()));
    }
    XPoly delta = vandermonde(n, window);
    try {
        return xdiv_exact(acc, delta);
    } catch (const NotDivisible&) {
        throw NotDivisibleByVandermonde("macdonald_sum_form: sum not divisible");
    }
}

inline XPoly macdonald_sum_form(const XPoly& p, const RatQT& u) {
    return macdonald_sum_form(p, u, full_window(p.nvars()));
}

/// The determinantal form (1/Delta) sum_sigma sign(sigma) x^{sigma delta}
/// prod_i (1 + u t^{n - sigma_i} T_i^q) p; cross-validates the sum form.
inline XPoly macdonald_det_form(const XPoly& p, const RatQT& u) {
    const int n = p.nvars();
    const RatQT qval(PolyQT::q());

    // precompute T_I^q p for all subsets
    auto subsets = detail::subsets_of(full_window(n));
    std::vector<XPoly> moved;
    moved.reserve(subsets.size());
    for (const auto& I : subsets) moved.push_back(p.scaled_subset(I, qval));

    XPoly acc(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        XPoly::Exps mono(n);
        for (int i = 0; i < n; ++i) mono[i] = n - perm[i];
        XPoly lead = XPoly::monomial(n, mono, RatQT(Zint(inv % 2 == 0 ? 1 : -1)));

        XPoly inner(n);
        for (std::size_t si = 0; si < subsets.size(); ++si) {
            int texp = 0;
            for (int i : subsets[si]) texp += n - perm[i];
            RatQT factor = u.pow(static_cast<int>(subsets[si].size())) *
                           RatQT(PolyQT::t(texp));
            inner += moved[si] * factor;
        }
        acc += lead * inner;
    } while (std::next_permutation(perm.begin(), perm.end()));

    XPoly delta = vandermonde(n, full_window(n));
    try {
        return xdiv_exact(acc, delta);
    } catch (const NotDivisible&) {
        throw NotDivisibleByVandermonde("macdonald_det_form: sum not divisible");
    }
}

// ---------------------------------------------------------------------------
// Pochhammer prefactors and the Lapointe-Vinet / W raising operators.
// ---------------------------------------------------------------------------

/// (a; t)_m = (1-a)(1-a t)...(1-a t^{m-1}) for a a Laurent monomial in q,t.
inline PolyQT pochhammer(const PolyQT& a, const PolyQT& tstep, int m) {
    PolyQT r = PolyQT::one();
    PolyQT power = PolyQT::one();
    for (int i = 0; i < m; ++i) {
        r *= PolyQT::one() - a * power;
        power *= tstep;
    }
    return r;
}

/// LV_k on n variables: (1/(1/q;1/t)_{n-k}) M(-1/(q t^{n-k-1})) e_k[X_n].
/// Raises columns on the Macdonald integral forms.
template <class R>
SymFun<RatQT> lv_apply(const SymFun<R>& f, int k, int n) {
    if (k < 0 || k > n) throw Error("lv_apply: k out of range");
    SymFun<RatQT> fr = promote(f);
    if (fr.max_degree() + k > n)
        throw DegreeExceedsAlphabet("lv_apply: degree(f) + k exceeds alphabet");

    XPoly xp = expand(fr, n) * elementary_xpoly(n, k);
    RatQT u0(PolyQT::monomial(-1, -1, -(n - k - 1)));
    XPoly applied = macdonald_sum_form(xp, u0);
    PolyQT pref = pochhammer(PolyQT::q(-1), PolyQT::t(-1), n - k);
    RatQT inv_pref = RatQT(PolyQT::one(), pref);
    return convert(lift(applied * inv_pref), Basis::s);
}

/// W_k on n variables (plain, untwisted): subset sum with coefficients
/// B_I = (1/Delta) T_I^t(Delta e_k) and variable deletion P[X - X_I].
template <class R>
SymFun<RatQT> w_apply(const SymFun<R>& f, int k, int n) {
    if (k < 0 || k > n) throw Error("w_apply: k out of range");
    SymFun<RatQT> fr = promote(f);
    if (fr.max_degree() + k > n)
        throw DegreeExceedsAlphabet("w_apply: degree(f) + k exceeds alphabet");

    XPoly xp = expand(fr, n);
    XPoly delta = vandermonde(n, full_window(n));
    XPoly de = delta * elementary_xpoly(n, k);
    const RatQT tval(PolyQT::t());

    XPoly acc(n);
    for (const auto& I : detail::subsets_of(full_window(n))) {
        RatQT sign_pow(PolyQT::monomial((I.size() % 2 == 0) ? 1 : -1, 0,
                                        -static_cast<int>(I.size()) * (n - k)));
        acc += de.scaled_subset(I, tval) * xp.vars_deleted(I) * sign_pow;
    }
    XPoly result;
    try {
        result = xdiv_exact(acc, delta);
    } catch (const NotDivisible&) {
        throw NotDivisibleByVandermonde("w_apply: sum not divisible");
    }
    PolyQT pref = pochhammer(PolyQT::t(-1), PolyQT::t(-1), n - k);
    return convert(lift(result * RatQT(PolyQT::one(), pref)), Basis::s);
}

}  // namespace sfq
