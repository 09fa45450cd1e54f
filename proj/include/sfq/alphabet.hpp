#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sfq/symfun.hpp"

namespace sfq {

/// One plethystic alphabet argument: a sum of coefficient-scaled alphabets.
/// Each summand pairs a coefficient template (a RatQT evaluated at level k by
/// q -> q^k, t -> t^k) with one of the alphabets X, Y, or the product XY.
class AlphabetExpr {
  public:
    enum class Tag { X, Y, XY };

    struct Summand {
        RatQT coeff;
        Tag tag;
    };

    AlphabetExpr() = default;
    explicit AlphabetExpr(std::vector<Summand> s) : summands_(std::move(s)) {
        for (const auto& sm : summands_)
            if (sm.coeff.den().is_zero())
                throw PoleInCoefficient("alphabet coefficient has zero denominator");
    }

    static AlphabetExpr X(RatQT c = RatQT(1)) {
        return AlphabetExpr({{std::move(c), Tag::X}});
    }
    static AlphabetExpr Y(RatQT c = RatQT(1)) {
        return AlphabetExpr({{std::move(c), Tag::Y}});
    }
    static AlphabetExpr XY(RatQT c = RatQT(1)) {
        return AlphabetExpr({{std::move(c), Tag::XY}});
    }

    friend AlphabetExpr operator+(AlphabetExpr a, const AlphabetExpr& b) {
        for (const auto& sm : b.summands_) a.summands_.push_back(sm);
        return a;
    }

    const std::vector<Summand>& summands() const { return summands_; }

    bool uses_y() const {
        for (const auto& sm : summands_)
            if (sm.tag != Tag::X) return true;
        return false;
    }

    /// Coefficient templates instantiated at level k.
    std::vector<Summand> at_level(int k) const {
        std::vector<Summand> out;
        for (const auto& sm : summands_) {
            RatQT c = sm.coeff.exponents_scaled(k);
            if (c.den().is_zero())
                throw PoleInCoefficient("alphabet coefficient degenerates at level " +
                                        std::to_string(k));
            out.push_back({std::move(c), sm.tag});
        }
        return out;
    }

  private:
    std::vector<Summand> summands_;
};

/// Element of the two-alphabet ring, stored in the power-sum basis on both
/// sides: a finite sum c * p_rho[X] * p_tau[Y].
class SymFun2 {
  public:
    using Key = std::pair<Partition, Partition>;

    SymFun2() = default;

    static SymFun2 one() {
        SymFun2 f;
        f.terms_[{Partition(), Partition()}] = RatQT(1);
        return f;
    }

    static SymFun2 pk(AlphabetExpr::Tag tag, int k, const RatQT& c) {
        SymFun2 f;
        Partition part({k});
        switch (tag) {
            case AlphabetExpr::Tag::X: f.terms_[{part, Partition()}] = c; break;
            case AlphabetExpr::Tag::Y: f.terms_[{Partition(), part}] = c; break;
            case AlphabetExpr::Tag::XY: f.terms_[{part, part}] = c; break;
        }
        return f;
    }

    const std::map<Key, RatQT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const RatQT& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFun2& operator+=(const SymFun2& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    friend SymFun2 operator+(SymFun2 a, const SymFun2& b) { return a += b; }

    friend SymFun2 operator*(const SymFun2& a, const SymFun2& b) {
        SymFun2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({detail::union_parts(ka.first, kb.first),
                            detail::union_parts(ka.second, kb.second)},
                           ca * cb);
        return r;
    }
    SymFun2& operator*=(const SymFun2& o) { return *this = *this * o; }

    friend SymFun2 operator*(const SymFun2& a, const RatQT& c) {
        SymFun2 r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : a.terms_) r.add_term(k, v * c);
        return r;
    }

    friend bool operator==(const SymFun2& a, const SymFun2& b) {
        return a.terms_ == b.terms_;
    }

    /// Keep terms with X-degree <= dx and Y-degree <= dy.
    SymFun2 truncated(int dx, int dy) const {
        SymFun2 r;
        for (const auto& [k, c] : terms_)
            if (k.first.size() <= dx && k.second.size() <= dy) r.terms_[k] = c;
        return r;
    }

    /// Terms of exact bidegree (dx, dy).
    SymFun2 component(int dx, int dy) const {
        SymFun2 r;
        for (const auto& [k, c] : terms_)
            if (k.first.size() == dx && k.second.size() == dy) r.terms_[k] = c;
        return r;
    }

    /// The X-side as a one-alphabet function; requires the Y side be trivial.
    SymFun<RatQT> to_single() const {
        SymFun<RatQT> f(Basis::p);
        for (const auto& [k, c] : terms_) {
            if (!k.second.empty())
                throw Error("SymFun2::to_single: Y side present");
            f.add_term(k.first, c);
        }
        return f;
    }

  private:
    std::map<Key, RatQT> terms_;
};

/// Plethystic substitution of the alphabet expression into f:
/// p_k -> sum of c(q^k,t^k) p_k over the chosen alphabets.
template <class R>
SymFun2 plethysm_alphabet(const SymFun<R>& f, const AlphabetExpr& a) {
    SymFun<RatQT> p = detail::schur_to_p(detail::to_schur(promote(f)));
    SymFun2 out;
    for (const auto& [rho, coeff] : p.terms()) {
        SymFun2 prod = SymFun2::one() * coeff;
        for (int part : rho.parts()) {
            SymFun2 factor;
            for (const auto& sm : a.at_level(part))
                factor += SymFun2::pk(sm.tag, part, sm.coeff);
            prod *= factor;
        }
        out += prod;
    }
    return out;
}

/// Graded components of the kernel Omega[a] = exp(sum_k p_k[a]/k) up to
/// total degree d (X-degree plus Y-degree).
inline SymFun2 omega_kernel(const AlphabetExpr& a, int d) {
    if (d < 0) throw Error("omega_kernel: negative degree bound");
    SymFun2 log_term;  // sum_k p_k[a]/k, truncated
    for (int k = 1; k <= d; ++k) {
        SymFun2 pk_a;
        for (const auto& sm : a.at_level(k)) pk_a += SymFun2::pk(sm.tag, k, sm.coeff);
        log_term += pk_a * RatQT(PolyQT::one(), PolyQT(k));
    }
    log_term = log_term.truncated(d, d);

    SymFun2 result = SymFun2::one();
    SymFun2 power = SymFun2::one();
    Zint factorial = 1;
    for (int m = 1; m <= d; ++m) {
        power = (power * log_term).truncated(d, d);
        // drop terms whose total degree exceeds d
        SymFun2 filtered;
        for (const auto& [k, c] : power.terms())
            if (k.first.size() + k.second.size() <= d) filtered.add_term(k, c);
        power = filtered;
        if (power.is_zero()) break;
        factorial *= m;
        result += power * RatQT(PolyQT::one(), PolyQT(factorial));
    }
    // final total-degree filter
    SymFun2 out;
    for (const auto& [k, c] : result.terms())
        if (k.first.size() + k.second.size() <= d) out.add_term(k, c);
    return out;
}

}  // namespace sfq
