// q-calculus primitives: q-bracket, q-derivative coefficients, the infinite
// q-Pochhammer product and the Jackson q-integral on [-1,1].
//
// All operations are pure functions of immutable inputs; identical inputs and
// PrecisionCfg give bit-identical results.

#ifndef QDS_QCORE_HPP
#define QDS_QCORE_HPP

#include "qds/bigfloat.hpp"
#include "qds/errors.hpp"

#include <functional>
#include <string>
#include <utility>

namespace qds {

// Problem instance: 0 < q < 1 strictly, kappa >= 0.
struct QParams {
    using value_type = real;

    real q;
    real kappa;

    QParams(real q_, real kappa_) : q(std::move(q_)), kappa(std::move(kappa_)) {
        if (!(q > 0 && q < 1)) throw config_error("q must lie in (0,1)");
        if (!(kappa >= 0)) throw config_error("kappa must be >= 0");
    }
};

// Rational instance for the exact-identity test mode.  kappa is restricted
// to integers so that every exponent of the form c + m*kappa stays integral
// and the whole identity chain remains inside Q.
struct QParamsExact {
    using value_type = rational;

    rational q;
    long kappa;

    QParamsExact(rational q_, long kappa_) : q(std::move(q_)), kappa(kappa_) {
        if (!(q > 0 && q < 1)) throw config_error("q must lie in (0,1)");
        if (kappa < 0) throw config_error("kappa must be >= 0");
    }
};

// q^(c + kmul*kappa); every exponent in the string equation has this shape.
inline real qpow(const QParams& p, long c, int kmul) {
    if (kmul == 0) return pow(p.q, c);
    return pow(p.q, kmul > 0 ? real(c) + p.kappa : real(c) - p.kappa);
}

inline rational qpow(const QParamsExact& p, long c, int kmul) {
    return rat_pow(p.q, c + static_cast<long>(kmul) * p.kappa);
}

// Working precision and truncation control for every numeric routine.
struct PrecisionCfg {
    unsigned working_bits;
    real tail_tol;
    long max_terms;

    static PrecisionCfg make(unsigned bits, const std::string& tail_tol_dec = "",
                             long max_terms = 200000);

    // Same bits, tighter truncation: tail_tol * 2^-shift.
    PrecisionCfg tightened(long shift) const {
        PrecisionCfg c = *this;
        c.tail_tol = tail_tol * pow2(-shift);
        return c;
    }
};

// [n]_q = (1-q^n)/(1-q).
template <class P>
typename P::value_type q_bracket(long n, const P& p) {
    using T = typename P::value_type;
    if (n == 0) return T(0);
    return (T(1) - qpow(p, n, 0)) / (T(1) - p.q);
}

// Coefficient of the monomial rule D_q x^n = [n]_q x^{n-1}; 0 for constants.
template <class P>
typename P::value_type q_derivative_monomial(long n, const P& p) {
    if (n <= 0) return typename P::value_type(0);
    return q_bracket(n, p);
}

struct PochhammerResult {
    real value;
    real error_bound;  // certified bound on |value - exact|
    bool exact_zero;   // a factor vanished exactly
    long terms;
};

// (a;q)_inf = prod_{j>=0} (1 - a q^j), truncated once |a q^j| < tail_tol.
PochhammerResult q_pochhammer_inf(const real& a, const real& qq, const PrecisionCfg& cfg);

// (1-q) sum_{k>=0} (f(q^k) + f(-q^k)) q^k, truncated under a certified
// geometric tail bound.  The +/- pair is summed termwise, so an odd f
// integrates to exact zero.
real q_integral(const std::function<real(const real&)>& f, const QParams& p,
                const PrecisionCfg& cfg);

}  // namespace qds

#endif
