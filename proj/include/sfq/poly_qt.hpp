#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "sfq/errors.hpp"

namespace sfq {

/// Arbitrary-precision integer, the coefficient scalar of the whole engine.
using Zint = mpz_class;

/// Exponent pair of a monomial q^a * t^b.  Both entries may be negative.
struct ExpQT {
    int q = 0;
    int t = 0;

    int total() const { return q + t; }
    friend bool operator==(const ExpQT&, const ExpQT&) = default;
};

/// Graded lexicographic term order with q before t: compare total degree,
/// then the q exponent.  Total order on Z^2, translation invariant, so
/// leading terms are multiplicative.
struct GrlexLess {
    bool operator()(const ExpQT& a, const ExpQT& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.q < b.q;
    }
};

/// Sparse exact Laurent polynomial in the two formal parameters q and t.
///
/// Invariants: no stored coefficient is zero, each exponent pair appears at
/// most once, and the zero polynomial is the empty map.  Negative exponents
/// are permitted; public outputs that must be genuine polynomials assert
/// nonnegativity separately.
class PolyQT {
  public:
    using TermMap = std::map<ExpQT, Zint, GrlexLess>;

    PolyQT() = default;

    explicit PolyQT(long c) {
        if (c != 0) terms_[ExpQT{0, 0}] = Zint(c);
    }
    explicit PolyQT(const Zint& c) {
        if (c != 0) terms_[ExpQT{0, 0}] = c;
    }

    static PolyQT zero() { return PolyQT(); }
    static PolyQT one() { return PolyQT(1); }

    static PolyQT monomial(Zint c, int qe, int te) {
        PolyQT p;
        if (c != 0) p.terms_[ExpQT{qe, te}] = std::move(c);
        return p;
    }
    static PolyQT q(int e = 1) { return monomial(1, e, 0); }
    static PolyQT t(int e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ExpQT{0, 0} &&
               terms_.begin()->second == 1;
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == ExpQT{0, 0});
    }
    bool is_monomial() const { return terms_.size() == 1; }

    std::size_t num_terms() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^a t^b (zero if absent).
    Zint coeff(int qe, int te) const {
        auto it = terms_.find(ExpQT{qe, te});
        return it == terms_.end() ? Zint(0) : it->second;
    }

    void set_coeff(const ExpQT& e, Zint c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = std::move(c);
    }

    void add_term(const ExpQT& e, const Zint& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Leading term under the grlex order.
    const std::pair<const ExpQT, Zint>& leading() const {
        return *terms_.rbegin();
    }

    bool has_negative_exponent() const {
        for (const auto& [e, c] : terms_)
            if (e.q < 0 || e.t < 0) return true;
        return false;
    }

    int min_q_exp() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.q < m) m = e.q;
            first = false;
        }
        return m;
    }
    int min_t_exp() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.t < m) m = e.t;
            first = false;
        }
        return m;
    }
    int min_total_degree() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.total() < m) m = e.total();
            first = false;
        }
        return m;
    }
    int max_total_degree() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.total();
    }

    /// gcd of all integer coefficients (nonnegative; 0 for the zero poly).
    Zint content() const {
        Zint g = 0;
        for (const auto& [e, c] : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    PolyQT& operator+=(const PolyQT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    PolyQT& operator-=(const PolyQT& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend PolyQT operator+(PolyQT a, const PolyQT& b) { return a += b; }
    friend PolyQT operator-(PolyQT a, const PolyQT& b) { return a -= b; }

    PolyQT operator-() const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend PolyQT operator*(const PolyQT& a, const PolyQT& b) {
        PolyQT r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ExpQT{ea.q + eb.q, ea.t + eb.t}, ca * cb);
        return r;
    }
    PolyQT& operator*=(const PolyQT& o) { return *this = *this * o; }

    friend PolyQT operator*(const PolyQT& a, const Zint& s) {
        PolyQT r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = c * s;
        return r;
    }
    friend PolyQT operator*(const Zint& s, const PolyQT& a) { return a * s; }

    /// Shift every exponent by (dq, dt); multiplication by the monomial q^dq t^dt.
    PolyQT shifted(int dq, int dt) const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.terms_[ExpQT{e.q + dq, e.t + dt}] = c;
        return r;
    }

    /// Multiply every exponent pair by k >= 1; realizes q -> q^k, t -> t^k.
    PolyQT exponents_scaled(int k) const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.terms_[ExpQT{e.q * k, e.t * k}] = c;
        return r;
    }

    /// Exchange the roles of q and t.
    PolyQT swapped_qt() const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.terms_[ExpQT{e.t, e.q}] = c;
        return r;
    }

    /// Substitute t -> 1/t (negate t exponents).
    PolyQT inverted_t() const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.terms_[ExpQT{e.q, -e.t}] = c;
        return r;
    }

    /// Substitute q = 0.  Requires no negative q exponent.
    PolyQT at_q_zero() const {
        PolyQT r;
        for (const auto& [e, c] : terms_) {
            if (e.q < 0)
                throw PoleAtZero("q=0 substitution meets negative q exponent");
            if (e.q == 0) r.terms_[e] = c;
        }
        return r;
    }

    /// Substitute q = t; exponents merge into t.
    PolyQT at_q_equals_t() const {
        PolyQT r;
        for (const auto& [e, c] : terms_) r.add_term(ExpQT{0, e.q + e.t}, c);
        return r;
    }

    PolyQT pow(unsigned n) const {
        PolyQT r = one();
        PolyQT base = *this;
        while (n > 0) {
            if (n & 1u) r *= base;
            base *= base;
            n >>= 1u;
        }
        return r;
    }

    friend bool operator==(const PolyQT& a, const PolyQT& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PolyQT& a, const PolyQT& b) { return !(a == b); }

    /// Strict total order (for use as a map key); grlex on term sequences.
    friend bool operator<(const PolyQT& a, const PolyQT& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        GrlexLess less;
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (less(ia->first, ib->first)) return true;
            if (less(ib->first, ia->first)) return false;
            int c = cmp(ia->second, ib->second);
            if (c != 0) return c < 0;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const PolyQT& p) {
        return os << p.str();
    }

  private:
    TermMap terms_;
};

inline PolyQT add(const PolyQT& a, const PolyQT& b) { return a + b; }
inline PolyQT sub(const PolyQT& a, const PolyQT& b) { return a - b; }
inline PolyQT mul(const PolyQT& a, const PolyQT& b) { return a * b; }

/// Exact division: returns c with b*c == a, or throws NotDivisible.
/// Works on Laurent supports; termination is guarded by corner-exponent
/// bounds, which are multiplicative for the orders used.
inline PolyQT div_exact(const PolyQT& a, const PolyQT& b) {
    if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
    if (a.is_zero()) return PolyQT::zero();

    const int deg_min = a.min_total_degree() - b.min_total_degree();
    const int q_min = a.min_q_exp() - b.min_q_exp();

    PolyQT rem = a;
    PolyQT quot;
    const auto& blead = b.leading();
    while (!rem.is_zero()) {
        const auto& rlead = rem.leading();
        ExpQT e{rlead.first.q - blead.first.q, rlead.first.t - blead.first.t};
        if (e.total() < deg_min || e.q < q_min)
            throw NotDivisible("polynomial quotient does not exist");
        Zint c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rlead.second.get_mpz_t(),
                    blead.second.get_mpz_t());
        if (r != 0) throw NotDivisible("leading coefficient not divisible");
        PolyQT term = PolyQT::monomial(c, e.q, e.t);
        quot += term;
        rem -= term * b;
    }
    return quot;
}

inline bool divides(const PolyQT& b, const PolyQT& a) {
    try {
        div_exact(a, b);
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Canonical string format and its parser.
//
// Terms are printed in descending grlex order; coefficients carry explicit
// signs; exponent 1 is omitted; unit coefficients are omitted except for the
// constant term.  Example: "q*t^2 + 2*t - 1".  The parser accepts exactly
// this grammar, ignoring whitespace.
// ---------------------------------------------------------------------------

inline std::string PolyQT::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const ExpQT& e = it->first;
        const Zint& c = it->second;
        Zint a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = (e.q != 0 || e.t != 0);
        bool coeff_shown = (a != 1 || !has_vars);
        if (coeff_shown) os << a.get_str();
        if (e.q != 0) {
            if (coeff_shown) os << "*";
            os << "q";
            if (e.q != 1) os << "^" << e.q;
        }
        if (e.t != 0) {
            if (coeff_shown || e.q != 0) os << "*";
            os << "t";
            if (e.t != 1) os << "^" << e.t;
        }
    }
    return os.str();
}

namespace detail {

class PolyParser {
  public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    PolyQT parse() {
        PolyQT result;
        skip_ws();
        if (done()) throw ParseError("empty polynomial string", pos_);
        bool first = true;
        while (true) {
            skip_ws();
            if (done()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-' between terms", pos_);
            }
            skip_ws();
            parse_term(sign, result);
            first = false;
        }
        if (first) throw ParseError("no terms found", pos_);
        return result;
    }

  private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void parse_term(int sign, PolyQT& out) {
        Zint coeff = 1;
        bool saw_number = false, saw_var = false;
        int qe = 0, te = 0;
        if (done()) throw ParseError("expected term", pos_);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_integer();
            saw_number = true;
        }
        while (true) {
            skip_ws();
            std::size_t save = pos_;
            if (!done() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (done() || (peek() != 'q' && peek() != 't'))
                    throw ParseError("expected variable after '*'", pos_);
            }
            if (done() || (peek() != 'q' && peek() != 't')) {
                pos_ = save;
                break;
            }
            char v = peek();
            ++pos_;
            int e = 1;
            skip_ws();
            if (!done() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_exponent();
            }
            if (v == 'q')
                qe += e;
            else
                te += e;
            saw_var = true;
        }
        if (!saw_number && !saw_var)
            throw ParseError("expected coefficient or variable", pos_);
        out.add_term(ExpQT{qe, te}, sign < 0 ? Zint(-coeff) : coeff);
    }

    Zint parse_integer() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected integer", pos_);
        return Zint(s_.substr(start, pos_ - start));
    }

    int parse_exponent() {
        bool neg = false;
        if (!done() && peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw ParseError("expected exponent digits", pos_);
        int e = std::stoi(s_.substr(start, pos_ - start));
        return neg ? -e : e;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline PolyQT parse_poly(const std::string& s) {
    return detail::PolyParser(s).parse();
}

}  // namespace sfq
