#include "qds/weight.hpp"

namespace qds {

real weight_eval(const real& x, const QParams& p, const PrecisionCfg& cfg) {
    if (abs(x) > 1) throw domain_error("weight_eval: |x| > 1");
    if (x == 0) return p.kappa > 0 ? real(0) : real(1);
    real qx = p.q * x;
    real qx2 = qx * qx;
    real arg = qx2 * qx2;  // (qx)^4, even in x by construction
    real base = pow(p.q, 4);
    real poch = q_pochhammer_inf(arg, base, cfg).value;
    if (p.kappa == 0) return poch;
    return poch * pow(abs(x), p.kappa) * pow(1 - p.q, -p.kappa / 4);
}

NormalizedWeight normalize(const QParams& p, const PrecisionCfg& cfg) {
    // The mass is O(1); a 16x tighter truncation keeps the normalization
    // defect of eval well inside the 8*tail_tol contract.
    PrecisionCfg tight = cfg.tightened(4);
    real Z = q_integral([&](const real& x) { return weight_eval(x, p, tight); }, p, tight);
    if (!(Z > 0))
        throw error("normalize: non-positive mass; q_pochhammer_inf is broken");
    return NormalizedWeight(p, Z, cfg);
}

}  // namespace qds
