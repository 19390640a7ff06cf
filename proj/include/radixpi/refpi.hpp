#pragma once

#include <gmpxx.h>

#include <string>

#include "radixpi/real.hpp"

namespace radixpi::refpi {

/// Independent reference for pi: Machin's identity
///     pi = 16 arctan(1/5) - 4 arctan(1/239)
/// evaluated in GMP integer fixed point. This path shares no code with the
/// chord-doubling engine it is used to measure (it never touches MPFR sqrt
/// or the radical recurrences).
///
/// Two interchangeable kernels are provided:
///   - arctan_fixed_iter: plain term-by-term accumulation, serial. Kept as
///     the reference implementation for testing.
///   - arctan_fixed_binsplit: binary splitting over the term range, split
///     into OpenMP tasks. The production kernel.
/// Both return floor-ish approximations of arctan(1/q) * 2^frac_bits, off by
/// at most a few units plus one unit per accumulated term.

/// arctan(1/q) * 2^frac_bits, iterative serial evaluation.
mpz_class arctan_fixed_iter(unsigned long q, long frac_bits);

/// arctan(1/q) * 2^frac_bits via binary splitting; `parallel` enables the
/// OpenMP task decomposition. Result is identical for both settings (the
/// splitting is exact integer arithmetic).
mpz_class arctan_fixed_binsplit(unsigned long q, long frac_bits, bool parallel = true);

/// pi * 2^frac_bits using the binary-splitting kernel.
mpz_class pi_fixed(long frac_bits, bool parallel = true);

/// pi * 2^frac_bits using the serial iterative kernel.
mpz_class pi_fixed_iter(long frac_bits);

/// pi rounded (nearest-even) to `bits` of precision, computed at
/// bits + 64 fixed-point guard bits.
Real reference_pi(mpfr_prec_t bits);

/// pi as a decimal string with `sig` significant digits, round-half-even
/// ("3" for sig=1, "3.141592654" for sig=10).
std::string pi_digits(size_t sig);

}  // namespace radixpi::refpi
