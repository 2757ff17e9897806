// Error taxonomy shared by all modules.

#ifndef QDS_ERRORS_HPP
#define QDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qds {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid QParams / PrecisionCfg / CLI input.
struct config_error : error {
    using error::error;
};

// Argument outside an operation's mathematical domain.
struct domain_error : error {
    using error::error;
};

// A series/product cannot certify its tail below tail_tol within max_terms.
struct tolerance_unreachable : error {
    using error::error;
};

// <P_n,P_n> lost positivity at working precision; raise working_bits.
struct precision_exhausted : error {
    precision_exhausted(long n, const std::string& what) : error(what), index(n) {}
    long index;
};

// Forward step with a vanishing linear coefficient.
struct degenerate_step : error {
    degenerate_step(long n, const std::string& what) : error(what), index(n) {}
    long index;
};

// Shooting bracket whose endpoints do not differ in violation signature.
struct invalid_bracket : error {
    using error::error;
};

// Integrand returned a non-finite value at a lattice point.
struct nonfinite_value : error {
    nonfinite_value(long k, const std::string& what) : error(what), lattice_index(k) {}
    long lattice_index;
};

}  // namespace qds

#endif
