#include "qds/moments.hpp"

namespace qds {

const real& MomentTable::at(long n) const {
    if (n < 0 || n > max_order)
        throw domain_error("MomentTable: order " + std::to_string(n) + " exceeds max_order " +
                           std::to_string(max_order));
    return mu[static_cast<size_t>(n)];
}

real moment_by_quadrature(long n, const NormalizedWeight& w, const PrecisionCfg& cfg) {
    return q_integral(
        [&](const real& x) { return pow(x, static_cast<unsigned>(n)) * w.eval(x); },
        w.params(), cfg);
}

MomentTable build_table(long max_order, const NormalizedWeight& w, const PrecisionCfg& cfg) {
    if (max_order < 4 || max_order % 2 != 0)
        throw domain_error("build_table: max_order must be an even integer >= 4");
    MomentTable t{w.params(), max_order,
                  std::vector<real>(static_cast<size_t>(max_order) + 1, real(0)),
                  std::vector<MomentSource>(static_cast<size_t>(max_order) + 1,
                                            MomentSource::symmetry)};
    t.mu[0] = 1;
    t.source[0] = MomentSource::quadrature;
    t.mu[2] = moment_by_quadrature(2, w, cfg);
    t.source[2] = MomentSource::quadrature;
    for (long n = 0; n + 4 <= max_order; n += 2) {
        t.mu[static_cast<size_t>(n + 4)] =
            (1 - qpow(t.params, n + 1, 1)) * t.mu[static_cast<size_t>(n)];
        t.source[static_cast<size_t>(n + 4)] = MomentSource::recursion;
    }
    return t;
}

RecursionReport verify_recursion(std::span<const long> orders, const NormalizedWeight& w,
                                 const PrecisionCfg& cfg, Exec exec) {
    RecursionReport report;
    report.entries.resize(orders.size());
    if (orders.empty()) return report;
    // Quadrature errors are O(tail_tol) absolute; a 2^-30 tighter truncation
    // keeps the relative discrepancy driven by the identity, not the tails.
    PrecisionCfg tight = cfg.tightened(30);
    for_each_index(static_cast<long>(orders.size()), exec, [&](long i) {
        long n = orders[static_cast<size_t>(i)];
        real lhs = (1 - qpow(w.params(), n + 1, 1)) * moment_by_quadrature(n, w, tight);
        real rhs = moment_by_quadrature(n + 4, w, tight);
        real ad = abs(lhs - rhs);
        real scale = abs(lhs) > abs(rhs) ? abs(lhs) : abs(rhs);
        real rd = scale > 0 ? real(ad / scale) : real(0);
        report.entries[static_cast<size_t>(i)] = {n, lhs, rhs, ad, rd};
    });
    for (const auto& e : report.entries) {
        if (e.rel_diff > report.max_rel) report.max_rel = e.rel_diff;
        if (e.abs_diff > report.max_abs) report.max_abs = e.abs_diff;
    }
    return report;
}

bool hankel_positive_definite(const MomentTable& table, long N) {
    if (2 * N > table.max_order)
        throw domain_error("hankel_positive_definite: needs moments through order 2N");
    size_t m = static_cast<size_t>(N) + 1;
    std::vector<real> a(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) a[i * m + j] = table.mu[i + j];
    // In-place Cholesky; any non-positive pivot means not positive definite.
    for (size_t k = 0; k < m; ++k) {
        real pivot = a[k * m + k];
        for (size_t s = 0; s < k; ++s) pivot -= a[k * m + s] * a[k * m + s];
        if (!(pivot > 0)) return false;
        real root = sqrt(pivot);
        a[k * m + k] = root;
        for (size_t i = k + 1; i < m; ++i) {
            real v = a[i * m + k];
            for (size_t s = 0; s < k; ++s) v -= a[i * m + s] * a[k * m + s];
            a[i * m + k] = v / root;
        }
    }
    return true;
}

}  // namespace qds
