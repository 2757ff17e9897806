// The q-lattice weight ((qx)^4; q^4)_inf |x|^kappa (1-q)^{-kappa/4} and its
// normalization to a probability measure on [-1,1].

#ifndef QDS_WEIGHT_HPP
#define QDS_WEIGHT_HPP

#include "qds/qcore.hpp"

namespace qds {

// w(x) for |x| <= 1.  x = 0 is defined by continuous extension (never hit by
// the lattice); |x| > 1 is a domain error.
real weight_eval(const real& x, const QParams& p, const PrecisionCfg& cfg);

// w(x)/Z with Z = int_{-1}^{1} w d_q x computed numerically, never assumed.
class NormalizedWeight {
  public:
    NormalizedWeight(QParams p, real Z, PrecisionCfg cfg)
        : params_(std::move(p)), Z_(std::move(Z)), cfg_(std::move(cfg)) {}

    real eval(const real& x) const { return weight_eval(x, params_, cfg_) / Z_; }

    const QParams& params() const { return params_; }
    const real& Z() const { return Z_; }
    const PrecisionCfg& cfg() const { return cfg_; }

  private:
    QParams params_;
    real Z_;
    PrecisionCfg cfg_;
};

NormalizedWeight normalize(const QParams& p, const PrecisionCfg& cfg);

}  // namespace qds

#endif
