#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sfq/graded_op.hpp"
#include "sfq/hall_littlewood.hpp"
#include "sfq/xpoly.hpp"

namespace sfq {

// ---------------------------------------------------------------------------
// Production path: modified Macdonald polynomials by q-twisted column adders.
// The twisted images are memoized per basis element, so chains share work
// across different target partitions.
// ---------------------------------------------------------------------------

namespace detail {

/// Image of s_lam under the trivial column adder, lazily memoized.
inline const SymFun<PolyQT>& adder_image(int k, AdderFamily fam, const Partition& lam) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::tuple<int, int, Partition>, SymFun<PolyQT>> memo;
    auto key = std::make_tuple(k, static_cast<int>(fam), lam);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int d = lam.size();
    const auto& Kinv = kf_matrices(d).second;
    const auto& Kbig = kf_matrices(d + k).first;
    SymFun<PolyQT> img(Basis::s);
    for (const auto& mu : Kinv.order) {
        PolyQT c = Kinv.entry(mu, lam);
        if (c.is_zero()) continue;
        if (mu.length() > k) continue;
        if (fam == AdderFamily::Htilde_t)
            c = c.inverted_t().shifted(0, -static_cast<int>(mu.n_stat()));
        Partition raised = add_column(mu, k);
        for (const auto& nu : Kbig.order) {
            PolyQT e = Kbig.entry(nu, raised);
            if (e.is_zero()) continue;
            if (fam == AdderFamily::Htilde_t)
                e = e.inverted_t().shifted(0, static_cast<int>(raised.n_stat()));
            img.add_term(nu, c * e);
        }
    }
    return memo.emplace(std::move(key), std::move(img)).first->second;
}

/// Image of s_lam under the q-twisted column adder, lazily memoized.
inline const SymFun<PolyQT>& twisted_adder_image(int k, AdderFamily fam,
                                                 const Partition& lam) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<std::tuple<int, int, Partition>, SymFun<PolyQT>> memo;
    auto key = std::make_tuple(k, static_cast<int>(fam), lam);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto apply_plain = [&](const SymFun<PolyQT>& g) {
        SymFun<PolyQT> out(Basis::s);
        for (const auto& [nu, c] : g.terms())
            for (const auto& [rho, e] : adder_image(k, fam, nu).terms())
                out.add_term(rho, c * e);
        return out;
    };
    SymFun<PolyQT> img = twist_image<PolyQT>(lam, 'q', apply_plain);
    return memo.emplace(std::move(key), std::move(img)).first->second;
}

}  // namespace detail

/// Apply the q-twisted trivial column adder to a Schur-basis input.
inline SymFun<PolyQT> twisted_adder_apply(int k, AdderFamily fam,
                                          const SymFun<PolyQT>& f) {
    SymFun<PolyQT> fs = detail::to_schur(f);
    SymFun<PolyQT> out(Basis::s);
    for (const auto& [lam, c] : fs.terms())
        for (const auto& [nu, e] : detail::twisted_adder_image(k, fam, lam).terms())
            out.add_term(nu, c * e);
    return out;
}

namespace detail {

inline SymFun<PolyQT> rodriguez_chain(const Partition& mu, AdderFamily fam) {
    SymFun<PolyQT> f = SymFun<PolyQT>::one(Basis::s);
    const auto& cols = mu.conjugate().parts();
    // rightmost factor first: consume column lengths in increasing order so
    // every intermediate satisfies l <= next k
    for (auto it = cols.rbegin(); it != cols.rend(); ++it)
        f = twisted_adder_apply(*it, fam, f);
    return f;
}

}  // namespace detail

/// H_mu[X;q,t] from the Rodriguez chain of q-twisted column adders.
/// Polynomiality of the coefficients is structural on this route.
inline const SymFun<PolyQT>& rodriguez_H(const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<Partition, SymFun<PolyQT>> memo;
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    return memo.emplace(mu, detail::rodriguez_chain(mu, AdderFamily::H_t))
        .first->second;
}

/// H~_mu[X;q,t] from the Rodriguez chain in the cocharge family.
inline const SymFun<PolyQT>& rodriguez_Htilde(const Partition& mu) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<Partition, SymFun<PolyQT>> memo;
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    return memo.emplace(mu, detail::rodriguez_chain(mu, AdderFamily::Htilde_t))
        .first->second;
}

/// The alternative construction of H~_mu: rescale the Schur coefficients of
/// H_mu by K(q,t) -> t^{n(mu)} K(q, 1/t).  Both routes must agree.
inline SymFun<PolyQT> htilde_by_rescale(const Partition& mu) {
    const SymFun<PolyQT>& h = rodriguez_H(mu);
    int nmu = static_cast<int>(mu.n_stat());
    SymFun<PolyQT> out(Basis::s);
    for (const auto& [lam, c] : h.terms())
        out.add_term(lam, c.inverted_t().shifted(0, nmu));
    return out;
}

/// Integral form J_mu[X;q,t] = H_mu[X(1-t);q,t].
inline SymFun<PolyQT> J_from_H(const Partition& mu) {
    return pleth_scale(rodriguez_H(mu), RatQT(PolyQT::one() - PolyQT::t()));
}

// ---------------------------------------------------------------------------
// Oracle 1: Gram-Schmidt against the q,t-deformed Hall pairing.
// ---------------------------------------------------------------------------

/// <p_lam, p_mu>_{q,t} = delta_{lam,mu} z_lam prod (1-q^{lam_i})/(1-t^{lam_i}).
inline RatQT qt_inner(const SymFun<RatQT>& f, const SymFun<RatQT>& g) {
    SymFun<RatQT> fp = convert(f, Basis::p);
    SymFun<RatQT> gp = convert(g, Basis::p);
    RatQT acc(0);
    for (const auto& [rho, c] : fp.terms()) {
        RatQT d = gp.coeff(rho);
        if (d.is_zero()) continue;
        RatQT weight{PolyQT(z_stat(rho))};
        for (int part : rho.parts())
            weight *= RatQT(PolyQT::one() - PolyQT::q(part),
                            PolyQT::one() - PolyQT::t(part));
        acc += c * d * weight;
    }
    return acc;
}

namespace detail {

inline const std::map<Partition, SymFun<RatQT>>& gram_schmidt_degree(int d) {
    std::lock_guard<std::recursive_mutex> lock(cache_mutex());
    static std::map<int, std::map<Partition, SymFun<RatQT>>> memo;
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;

    std::map<Partition, SymFun<RatQT>> table;
    auto order = partitions_of(d);
    // ascending dominance: project each m_mu against already-built P's
    for (auto rit = order.rbegin(); rit != order.rend(); ++rit) {
        const Partition& mu = *rit;
        SymFun<RatQT> p = SymFun<RatQT>::element(Basis::m, mu);
        for (const auto& [nu, built] : table) {
            RatQT num = qt_inner(p, built);
            if (num.is_zero()) continue;
            RatQT den = qt_inner(built, built);
            if (den.is_zero()) throw SingularGram("vanishing norm at " + nu.str());
            p -= built * (num / den);
        }
        table.emplace(mu, std::move(p));
    }
    return memo.emplace(d, std::move(table)).first->second;
}

}  // namespace detail

/// Macdonald P_mu (monic on m_mu, dominance-triangular, orthogonal for the
/// q,t pairing), built by Gram-Schmidt over the rational function field.
inline const SymFun<RatQT>& gram_schmidt_P(const Partition& mu, int n) {
    if (n < mu.size())
        throw AlphabetTooSmall("gram_schmidt_P: alphabet smaller than |mu|");
    return detail::gram_schmidt_degree(mu.size()).at(mu);
}

/// Integral form via the oracle: J_mu = h_mu(q,t) P_mu.
inline SymFun<RatQT> gs_J(const Partition& mu) {
    const SymFun<RatQT>& p = gram_schmidt_P(mu, mu.size());
    return convert(p * RatQT(hook_products(mu).first), Basis::s);
}

/// Macdonald Q_mu = J_mu / h'_mu.
inline SymFun<RatQT> gs_Q(const Partition& mu) {
    const SymFun<RatQT>& p = gram_schmidt_P(mu, mu.size());
    auto [h, hp] = hook_products(mu);
    return convert(p * (RatQT(h) / RatQT(hp)), Basis::s);
}

// ---------------------------------------------------------------------------
// Oracle 2: the Lapointe-Vinet route.
// ---------------------------------------------------------------------------

/// J_mu by chained LV raising operators over the conjugate column lengths.
inline SymFun<RatQT> lv_J(const Partition& mu, int n) {
    if (n < mu.size())
        throw AlphabetTooSmall("lv_J: alphabet smaller than |mu|");
    SymFun<RatQT> f = SymFun<RatQT>::one(Basis::s);
    const auto& cols = mu.conjugate().parts();
    for (auto it = cols.rbegin(); it != cols.rend(); ++it)
        f = lv_apply(f, *it, n);
    return f;
}

// ---------------------------------------------------------------------------
// The q,t-Kostka matrix.
// ---------------------------------------------------------------------------

/// Matrix of the K_{lam,mu}(q,t), rows and columns in enumeration order.
/// Every entry must be a genuine polynomial with integer coefficients.
struct QtKostkaMatrix {
    int n = 0;
    std::vector<Partition> order;
    std::map<std::pair<Partition, Partition>, PolyQT> entries;

    PolyQT entry(const Partition& lam, const Partition& mu) const {
        auto it = entries.find({lam, mu});
        return it == entries.end() ? PolyQT::zero() : it->second;
    }

    friend bool operator==(const QtKostkaMatrix& a, const QtKostkaMatrix& b) {
        return a.n == b.n && a.order == b.order && a.entries == b.entries;
    }
};

/// Columns are the Schur coefficients of rodriguez_H(mu) for mu of n.
/// The structural polynomiality check (nonnegative exponents in both
/// variables) throws PolynomialityViolation on failure.
inline QtKostkaMatrix qt_kostka_matrix(int n) {
    QtKostkaMatrix M;
    M.n = n;
    M.order = partitions_of(n);
    for (const auto& mu : M.order) {
        const SymFun<PolyQT>& h = rodriguez_H(mu);
        for (const auto& [lam, c] : h.terms()) {
            if (c.has_negative_exponent())
                throw PolynomialityViolation("negative exponent in K at (" +
                                             lam.str() + ", " + mu.str() + ")");
            M.entries[{lam, mu}] = c;
        }
    }
    return M;
}

}  // namespace sfq
