// Arbitrary-precision scalar types and precision management.
//
// Production arithmetic runs on MPFR binary floats (via Boost.Multiprecision)
// whose precision is chosen at runtime from PrecisionCfg::working_bits.  The
// exact-rational test mode runs the same generic algebra on GMP rationals.
//
// Precision is a process-global default in this Boost version, so it must
// only ever be changed from serial code.  Arithmetic results inherit the
// largest operand precision, which keeps values computed inside OpenMP
// regions at the precision selected before the region was entered.

#ifndef QDS_BIGFLOAT_HPP
#define QDS_BIGFLOAT_HPP

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace qds {

using real = boost::multiprecision::mpfr_float;
using rational = boost::multiprecision::mpq_rational;

// Smallest digits10 request whose MPFR backend precision is >= bits.
inline unsigned digits10_for_bits(unsigned bits) {
    return static_cast<unsigned>((static_cast<unsigned long>(bits) * 301ul + 999ul) / 1000ul);
}

// Digit count that guarantees decimal round-trip at `bits` of binary
// precision: ceil(bits*log10(2)) + 2.
inline unsigned roundtrip_digits(unsigned bits) {
    return static_cast<unsigned>((static_cast<unsigned long>(bits) * 30103ul + 99999ul) / 100000ul) + 2u;
}

inline void set_default_precision_bits(unsigned bits) {
    real::default_precision(digits10_for_bits(bits));
}

// RAII guard for the global default precision.  Serial sections only.
class PrecisionScope {
  public:
    explicit PrecisionScope(unsigned bits) : saved_(real::default_precision()) {
        set_default_precision_bits(bits);
    }
    ~PrecisionScope() { real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

inline bool is_finite(const real& x) {
    return mpfr_number_p(x.backend().data()) != 0;
}

// Copy of x rounded (or exactly extended) to `bits` of binary precision.
inline real round_to_bits(const real& x, unsigned bits) {
    real y = x;
    mpfr_prec_round(y.backend().data(), static_cast<mpfr_prec_t>(bits), MPFR_RNDN);
    return y;
}

inline real pow2(long e) { return ldexp(real(1), static_cast<int>(e)); }

inline std::string decimal_string(const real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

// Integer power of a rational, negative exponents allowed.
inline rational rat_pow(const rational& base, long e) {
    if (e == 0) return rational(1);
    rational b = e < 0 ? rational(1) / base : base;
    unsigned long k = e < 0 ? 0ul - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    rational r(1);
    while (k != 0) {
        if (k & 1ul) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

}  // namespace qds

#endif
