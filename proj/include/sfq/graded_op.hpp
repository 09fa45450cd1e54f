#pragma once

#include <map>
#include <vector>

#include "sfq/hall_littlewood.hpp"
#include "sfq/symfun.hpp"

namespace sfq {

/// Degree-graded linear map on the Schur basis with a fixed degree shift k,
/// stored extensionally: for every partition of each degree d <= cap, the
/// image is a homogeneous Schur expansion of degree d + k.
template <class R>
class GradedOp {
  public:
    GradedOp() : shift_(0), cap_(-1) {}
    GradedOp(int shift, int cap) : shift_(shift), cap_(cap) {}

    int shift() const { return shift_; }
    int cap() const { return cap_; }

    void set_image(const Partition& lam, SymFun<R> image) {
        if (lam.size() > cap_) throw CapExceeded("set_image beyond cap");
        if (image.basis() != Basis::s)
            throw Error("GradedOp images must be in the Schur basis");
        for (const auto& [nu, c] : image.terms())
            if (nu.size() != lam.size() + shift_)
                throw Error("GradedOp image is not homogeneous of degree d + shift");
        images_[lam] = std::move(image);
    }

    const SymFun<R>& image(const Partition& lam) const {
        auto it = images_.find(lam);
        if (it == images_.end()) {
            if (lam.size() > cap_)
                throw CapExceeded("GradedOp: input degree " +
                                  std::to_string(lam.size()) + " exceeds cap " +
                                  std::to_string(cap_));
            static const SymFun<R> zero = SymFun<R>::zero(Basis::s);
            return zero;
        }
        return it->second;
    }

    const std::map<Partition, SymFun<R>>& images() const { return images_; }

    friend bool operator==(const GradedOp& a, const GradedOp& b) {
        if (a.shift_ != b.shift_ || a.cap_ != b.cap_) return false;
        // compare as maps without stored zeros
        auto nonzero = [](const std::map<Partition, SymFun<R>>& m) {
            std::map<Partition, SymFun<R>> out;
            for (const auto& [k, v] : m)
                if (!v.is_zero()) out.emplace(k, v);
            return out;
        };
        return nonzero(a.images_) == nonzero(b.images_);
    }

  private:
    int shift_;
    int cap_;
    std::map<Partition, SymFun<R>> images_;
};

/// Linear extension of the stored basis images.
template <class R>
SymFun<R> apply(const GradedOp<R>& V, const SymFun<R>& f) {
    SymFun<R> fs = detail::to_schur(f);
    SymFun<R> out(Basis::s);
    for (const auto& [lam, c] : fs.terms()) {
        if (lam.size() > V.cap())
            throw CapExceeded("apply: input degree exceeds operator cap");
        for (const auto& [nu, k] : V.image(lam).terms()) out.add_term(nu, c * k);
    }
    return out;
}

template <class R>
GradedOp<R> identity_op(int cap) {
    GradedOp<R> op(0, cap);
    for (int d = 0; d <= cap; ++d)
        for (const auto& lam : partitions_of(d))
            op.set_image(lam, SymFun<R>::element(Basis::s, lam));
    return op;
}

inline GradedOp<RatQT> promote(const GradedOp<PolyQT>& V) {
    GradedOp<RatQT> out(V.shift(), V.cap());
    for (const auto& [lam, img] : V.images()) out.set_image(lam, promote(img));
    return out;
}

template <class R>
GradedOp<R> swap_qt(const GradedOp<R>& V) {
    GradedOp<R> out(V.shift(), V.cap());
    for (const auto& [lam, img] : V.images()) out.set_image(lam, swap_qt(img));
    return out;
}

namespace detail {

/// All partitions mu contained in lam (any size).
inline std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int prev) -> void {
        if (row > lam.length()) {
            std::vector<int> parts(cur);
            while (!parts.empty() && parts.back() == 0) parts.pop_back();
            out.emplace_back(std::move(parts));
            return;
        }
        int hi = std::min(prev, lam.part(row));
        for (int v = 0; v <= hi; ++v) {
            cur.push_back(v);
            self(self, row + 1, v == 0 ? 0 : v);
            cur.pop_back();
        }
    };
    rec(rec, 1, lam.empty() ? 0 : lam.part(1));
    // dedupe: different zero paddings collapse to the same partition
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Core of the parameter twist on one Schur basis element:
///   twisted(V) s_lam = sum_{mu inside lam} a^{|lam|-|mu|}
///                      s_{lam/mu} * V(s_mu[(1-a)X]),
/// with a the chosen parameter and the product taken in the Schur basis.
template <class R, class ApplyFn>
SymFun<R> twist_image(const Partition& lam, char param, ApplyFn&& apply_v) {
    PolyQT a = (param == 'q') ? PolyQT::q() : PolyQT::t();
    SymFun<R> acc(Basis::s);
    for (const auto& mu : detail::subpartitions(lam)) {
        const SymFun<PolyQT>& pl = schur_pleth_one_minus(mu, param);
        SymFun<R> v_of;
        if constexpr (std::is_same_v<R, PolyQT>)
            v_of = apply_v(pl);
        else
            v_of = apply_v(promote(pl));
        if (v_of.is_zero()) continue;
        const SymFun<PolyQT>& skew = skew_schur(lam, mu);
        SymFun<R> skew_r;
        if constexpr (std::is_same_v<R, PolyQT>)
            skew_r = skew;
        else
            skew_r = promote(skew);
        SymFun<R> prod = multiply(skew_r, v_of);
        R scale{a.pow(static_cast<unsigned>(lam.size() - mu.size()))};
        acc += prod * scale;
    }
    return acc;
}

/// The q-twist (or t-twist) of a graded operator; same shift and cap.
template <class R>
GradedOp<R> param_twist(const GradedOp<R>& V, char param) {
    if (param != 'q' && param != 't') throw Error("param_twist: param must be q or t");
    GradedOp<R> out(V.shift(), V.cap());
    auto apply_v = [&](const SymFun<R>& g) { return apply(V, g); };
    for (int d = 0; d <= V.cap(); ++d)
        for (const auto& lam : partitions_of(d))
            out.set_image(lam, twist_image<R>(lam, param, apply_v));
    return out;
}

/// Conjugation by F^t (the substitution X -> X(1-t)): returns F^t V F^{t,-1}.
template <class R>
GradedOp<RatQT> f_t_conjugate(const GradedOp<R>& V) {
    GradedOp<RatQT> Vr = [&] {
        if constexpr (std::is_same_v<R, RatQT>)
            return V;
        else
            return promote(V);
    }();
    GradedOp<RatQT> out(Vr.shift(), Vr.cap());
    RatQT one_minus_t(PolyQT::one() - PolyQT::t());
    RatQT inv_one_minus_t = RatQT(PolyQT::one(), PolyQT::one() - PolyQT::t());
    for (int d = 0; d <= Vr.cap(); ++d)
        for (const auto& lam : partitions_of(d)) {
            SymFun<RatQT> pre =
                pleth_scale(SymFun<RatQT>::element(Basis::s, lam), inv_one_minus_t);
            SymFun<RatQT> mid = apply(Vr, pre);
            out.set_image(lam, pleth_scale(mid, one_minus_t));
        }
    return out;
}

/// Families for the trivial column adders.
enum class AdderFamily { H_t, Htilde_t };

/// The trivial column-adding operator on the chosen modified Hall-Littlewood
/// basis, expressed on the Schur basis:
///   family H_t:       H_mu[X;t]  -> H_{mu+1^k}[X;t]   (l(mu) <= k, else 0)
///   family Htilde_t:  H~_mu[X;t] -> H~_{mu+1^k}[X;t]  (l(mu) <= k, else 0)
inline GradedOp<PolyQT> make_column_adder(int k, int D, AdderFamily family) {
    if (k < 1) throw Error("make_column_adder: k must be positive");
    GradedOp<PolyQT> op(k, D);
    for (int d = 0; d <= D; ++d) {
        const auto& [K, Kinv] = kf_matrices(d);
        const auto& Kbig = kf_matrices(d + k).first;
        for (const auto& lam : K.order) {
            SymFun<PolyQT> img(Basis::s);
            for (const auto& mu : K.order) {
                // s_lam = sum_mu c_mu * (H-basis element mu)
                PolyQT c = Kinv.entry(mu, lam);
                if (c.is_zero()) continue;
                if (mu.length() > k) continue;
                if (family == AdderFamily::Htilde_t) {
                    // coefficients in the H~ basis: row-rescaled inverse
                    c = c.inverted_t().shifted(0, -static_cast<int>(mu.n_stat()));
                }
                Partition raised = add_column(mu, k);
                for (const auto& nu : Kbig.order) {
                    PolyQT e = Kbig.entry(nu, raised);
                    if (e.is_zero()) continue;
                    if (family == AdderFamily::Htilde_t)
                        e = e.inverted_t().shifted(0,
                                                   static_cast<int>(raised.n_stat()));
                    img.add_term(nu, c * e);
                }
            }
            op.set_image(lam, img);
        }
    }
    return op;
}

}  // namespace sfq
