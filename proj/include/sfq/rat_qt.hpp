#pragma once

#include <string>
#include <utility>

#include "sfq/poly_qt.hpp"

namespace sfq {

/// Rational function in q,t: a pair num/den of PolyQT values.
///
/// Canonical form: den nonzero, den free of pure-monomial factors (the
/// monomial content is moved into num's exponents), integer contents of num
/// and den coprime, den's grlex-leading coefficient positive.  Full bivariate
/// gcd reduction is not attempted; instead an exact-division probe clears the
/// denominator whenever it divides the numerator.  Equality is decided by
/// cross-multiplication and is therefore independent of reduction state.
class RatQT {
  public:
    RatQT() : num_(), den_(PolyQT::one()) {}
    RatQT(long c) : num_(c), den_(PolyQT::one()) {}
    RatQT(const Zint& c) : num_(c), den_(PolyQT::one()) {}
    RatQT(const PolyQT& p) : num_(p), den_(PolyQT::one()) {}

    RatQT(PolyQT num, PolyQT den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw ZeroDenominator("rational with zero denominator");
        canonicalize();
    }

    const PolyQT& num() const { return num_; }
    const PolyQT& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_one(); }

    /// Demote to PolyQT; throws NotDivisible when the value is not polynomial.
    PolyQT to_poly() const {
        if (den_.is_one()) return num_;
        return div_exact(num_, den_);
    }

    RatQT operator-() const {
        RatQT r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    RatQT inverse() const {
        if (num_.is_zero()) throw ZeroDenominator("inverse of zero");
        return RatQT(den_, num_);
    }

    friend RatQT operator+(const RatQT& a, const RatQT& b) {
        if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
        return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQT operator-(const RatQT& a, const RatQT& b) {
        if (a.den_ == b.den_) return RatQT(a.num_ - b.num_, a.den_);
        return RatQT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQT operator*(const RatQT& a, const RatQT& b) {
        if (a.den_.is_one() && b.den_.is_one()) {
            RatQT r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RatQT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatQT operator/(const RatQT& a, const RatQT& b) {
        if (b.num_.is_zero()) throw ZeroDenominator("division by zero rational");
        return RatQT(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
    RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
    RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
    RatQT& operator/=(const RatQT& o) { return *this = *this / o; }

    /// Equality by cross-multiplication.
    friend bool operator==(const RatQT& a, const RatQT& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

    RatQT pow(int n) const {
        if (n < 0) return inverse().pow(-n);
        RatQT r(1);
        RatQT base = *this;
        unsigned m = static_cast<unsigned>(n);
        while (m > 0) {
            if (m & 1u) r *= base;
            base *= base;
            m >>= 1u;
        }
        return r;
    }

    /// q -> q^k, t -> t^k on both numerator and denominator.
    RatQT exponents_scaled(int k) const {
        RatQT r;
        r.num_ = num_.exponents_scaled(k);
        r.den_ = den_.exponents_scaled(k);
        r.canonicalize();
        return r;
    }

    RatQT swapped_qt() const { return RatQT(num_.swapped_qt(), den_.swapped_qt()); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatQT& r) {
        return os << r.str();
    }

    /// Total order for container keys; compares cross-multiplied forms is not
    /// stable across representations, so order canonical pairs instead.
    friend bool operator<(const RatQT& a, const RatQT& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

  private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = PolyQT::one();
            return;
        }
        // Move the denominator's monomial content into the numerator.
        int mq = den_.min_q_exp(), mt = den_.min_t_exp();
        if (mq != 0 || mt != 0) {
            den_ = den_.shifted(-mq, -mt);
            num_ = num_.shifted(-mq, -mt);
        }
        if (!den_.is_one()) {
            // Clear the denominator entirely when it divides the numerator.
            try {
                num_ = div_exact(num_, den_);
                den_ = PolyQT::one();
            } catch (const NotDivisible&) {
            }
        }
        // Coprime integer contents; positive leading coefficient downstairs.
        Zint cn = num_.content(), cd = den_.content();
        Zint g;
        mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (g > 1) {
            num_ = divide_content(num_, g);
            den_ = divide_content(den_, g);
        }
        if (den_.leading().second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    static PolyQT divide_content(const PolyQT& p, const Zint& g) {
        PolyQT r;
        for (const auto& [e, c] : p.terms()) r.set_coeff(e, c / g);
        return r;
    }

    PolyQT num_;
    PolyQT den_;
};

/// Canonical-form rational equal to num/den.
inline RatQT rat_reduce(const PolyQT& num, const PolyQT& den) {
    return RatQT(num, den);
}

/// Exact evaluation of p at q = q_val, t = t_val.  Substituting the identity
/// values q,t returns p itself.  Negative exponents require nonzero values.
inline RatQT specialize(const PolyQT& p, const RatQT& q_val, const RatQT& t_val) {
    RatQT acc(0);
    for (const auto& [e, c] : p.terms()) {
        if (e.q < 0 && q_val.is_zero())
            throw PoleAtZero("negative q exponent at q=0");
        if (e.t < 0 && t_val.is_zero())
            throw PoleAtZero("negative t exponent at t=0");
        acc += RatQT(c) * q_val.pow(e.q) * t_val.pow(e.t);
    }
    return acc;
}

inline RatQT specialize(const RatQT& r, const RatQT& q_val, const RatQT& t_val) {
    RatQT den = specialize(r.den(), q_val, t_val);
    if (den.is_zero()) throw PoleAtZero("denominator vanishes under specialization");
    return specialize(r.num(), q_val, t_val) / den;
}

/// Limit q -> 0 of a rational whose numerator and denominator may carry
/// explicit powers of q.  Factors out the minimal q power on both sides
/// first, so expressions like (q - q*t)/(q) evaluate to 1 - t.
inline RatQT limit_q_to_zero(const RatQT& r) {
    if (r.is_zero()) return RatQT(0);
    int a = r.num().min_q_exp();
    int b = r.den().min_q_exp();
    if (a > b) return RatQT(0);
    if (a < b) throw PoleAtZero("pole at q=0");
    PolyQT n0 = r.num().shifted(-a, 0).at_q_zero();
    PolyQT d0 = r.den().shifted(-b, 0).at_q_zero();
    return RatQT(n0, d0);
}

}  // namespace sfq
