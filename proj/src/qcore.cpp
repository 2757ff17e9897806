#include "qds/qcore.hpp"

namespace qds {

PrecisionCfg PrecisionCfg::make(unsigned bits, const std::string& tail_tol_dec,
                                long max_terms) {
    if (bits < 64) throw config_error("working_bits must be >= 64");
    if (max_terms < 16) throw config_error("max_terms must be >= 16");
    PrecisionScope scope(bits);
    real tol = tail_tol_dec.empty() ? pow2(-static_cast<long>(3ul * bits / 4ul))
                                    : real(tail_tol_dec);
    if (!(tol > 0)) throw config_error("tail_tol must be > 0");
    if (!(tol > pow2(-static_cast<long>(bits) + 8)))
        throw config_error("tail_tol not expressible at working_bits (need tail_tol > 2^(8-bits))");
    return PrecisionCfg{bits, tol, max_terms};
}

PochhammerResult q_pochhammer_inf(const real& a, const real& qq, const PrecisionCfg& cfg) {
    if (!(qq > 0 && qq < 1)) throw domain_error("q_pochhammer_inf: base must lie in (0,1)");
    if (!is_finite(a)) throw domain_error("q_pochhammer_inf: non-finite argument");

    real prod(1);
    real t = a;  // a * qq^j
    for (long j = 0; j < cfg.max_terms; ++j) {
        real factor = 1 - t;
        if (factor == 0) return {real(0), real(0), true, j + 1};
        prod *= factor;
        t *= qq;
        if (abs(t) < cfg.tail_tol) {
            // |log prod_tail| <= sum_{j'>j} |a| qq^j' = |t|/(1-qq); for
            // |t|/(1-qq) <= 1/2 the relative truncation error is <= 2|t|/(1-qq).
            real ratio = abs(t) / (1 - qq);
            if (ratio <= real(1) / 2)
                return {prod, 2 * abs(prod) * ratio, false, j + 1};
        }
    }
    throw tolerance_unreachable("q_pochhammer_inf: tolerance unreachable within max_terms");
}

real q_integral(const std::function<real(const real&)>& f, const QParams& p,
                const PrecisionCfg& cfg) {
    real sum(0);
    real x(1);      // q^k
    real weight(1); // q^k again, kept separate from the abscissa on purpose
    real observed_max(0);
    for (long k = 0; k < cfg.max_terms; ++k) {
        real fp = f(x);
        real fm = f(-x);
        if (!is_finite(fp) || !is_finite(fm))
            throw nonfinite_value(k, "q_integral: integrand non-finite at lattice index " +
                                         std::to_string(k));
        real pair = fp + fm;  // exact cancellation for odd integrands
        real term = pair * weight;
        sum += term;
        real mag = abs(fp);
        if (abs(fm) > mag) mag = abs(fm);
        if (mag > observed_max) observed_max = mag;
        x *= p.q;
        weight *= p.q;
        // Tail after k terms: (1-q) sum_{j>k} |pair_j| q^j <= 2 M q^{k+1}.
        if (k >= 4 && abs(term) < cfg.tail_tol &&
            2 * observed_max * weight < cfg.tail_tol)
            return (1 - p.q) * sum;
    }
    throw tolerance_unreachable("q_integral: tolerance unreachable within max_terms");
}

}  // namespace qds
