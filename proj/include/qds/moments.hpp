// Even-moment table of the normalized measure: mu_2 from quadrature, the rest
// from the exact stride-4 recursion mu_{n+4} = (1 - q^{n+kappa+1}) mu_n, plus
// an independent double-quadrature verifier of that recursion.

#ifndef QDS_MOMENTS_HPP
#define QDS_MOMENTS_HPP

#include "qds/parallel.hpp"
#include "qds/weight.hpp"

#include <span>
#include <vector>

namespace qds {

enum class MomentSource { quadrature, recursion, symmetry };

struct MomentTable {
    QParams params;
    long max_order;
    std::vector<real> mu;              // index 0..max_order
    std::vector<MomentSource> source;  // provenance per entry

    const real& at(long n) const;
};

// int x^n dmu by q-quadrature; exact 0 for odd n (termwise cancellation).
real moment_by_quadrature(long n, const NormalizedWeight& w, const PrecisionCfg& cfg);

// Seeds mu_0 = 1 and mu_2 from quadrature, fills even orders by the
// recursion, sets odd orders to exact zero.
MomentTable build_table(long max_order, const NormalizedWeight& w, const PrecisionCfg& cfg);

struct RecursionEntry {
    long n;
    real lhs;       // (1 - q^{n+kappa+1}) * quad(x^n)
    real rhs;       // quad(x^{n+4})
    real abs_diff;
    real rel_diff;
};

struct RecursionReport {
    std::vector<RecursionEntry> entries;
    real max_rel{0};
    real max_abs{0};
};

// Both sides by independent quadrature for each order; entries are
// independent and run under the requested execution policy.
RecursionReport verify_recursion(std::span<const long> orders, const NormalizedWeight& w,
                                 const PrecisionCfg& cfg, Exec exec = Exec::parallel);

// Cholesky test of H_N = (mu_{i+j})_{0<=i,j<=N} at working precision.
bool hankel_positive_definite(const MomentTable& table, long N);

}  // namespace qds

#endif
