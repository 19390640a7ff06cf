#include "radixpi/refpi.hpp"

#include <omp.h>

#include <cmath>
#include <stdexcept>

namespace radixpi::refpi {

namespace {

long terms_needed(unsigned long q, long frac_bits) {
    // Stop once q^(2n+1) * (2n+1) > 2^frac_bits.
    double bits_per_term = 2.0 * std::log2(static_cast<double>(q));
    return static_cast<long>(static_cast<double>(frac_bits) / bits_per_term) + 2;
}

// Partial sum T(a,b) = sum_{k=a}^{b-1} (-1)^k q^(-2(k-a)) / (2k+1) as an
// exact fraction num/den. arctan(1/q) = (1/q) * T(0,n) + tail.
void split_range(unsigned long q, long a, long b, mpz_class& num, mpz_class& den,
                 bool parallel, long task_cutoff) {
    if (b - a == 1) {
        num = (a % 2 == 0) ? 1 : -1;
        den = 2 * a + 1;
        return;
    }
    long m = a + (b - a) / 2;
    mpz_class ln, ld, rn, rd;
    if (parallel && b - a > task_cutoff) {
#pragma omp task shared(ln, ld) firstprivate(q, a, m, task_cutoff)
        split_range(q, a, m, ln, ld, true, task_cutoff);
        split_range(q, m, b, rn, rd, true, task_cutoff);
#pragma omp taskwait
    } else {
        split_range(q, a, m, ln, ld, false, task_cutoff);
        split_range(q, m, b, rn, rd, false, task_cutoff);
    }
    // T(a,b) = T(a,m) + q^(-2(m-a)) T(m,b)
    mpz_class qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), q, static_cast<unsigned long>(2 * (m - a)));
    num = ln * rd * qpow + rn * ld;
    den = ld * rd * qpow;
}

}  // namespace

mpz_class arctan_fixed_iter(unsigned long q, long frac_bits) {
    if (q < 2 || frac_bits < 8) throw std::invalid_argument("arctan_fixed_iter: bad arguments");
    mpz_class scale = mpz_class(1) << static_cast<unsigned long>(frac_bits);
    mpz_class power = scale / q;  // (1/q)^(2k+1) * 2^frac_bits
    mpz_class acc = 0;
    unsigned long q2 = q * q;
    for (unsigned long k = 0; power != 0; ++k) {
        mpz_class term = power / (2 * k + 1);
        if (k % 2 == 0)
            acc += term;
        else
            acc -= term;
        power /= q2;
    }
    return acc;
}

mpz_class arctan_fixed_binsplit(unsigned long q, long frac_bits, bool parallel) {
    if (q < 2 || frac_bits < 8) throw std::invalid_argument("arctan_fixed_binsplit: bad arguments");
    long n = terms_needed(q, frac_bits);
    mpz_class num, den;
    if (parallel) {
#pragma omp parallel
#pragma omp single
        split_range(q, 0, n, num, den, true, 64);
    } else {
        split_range(q, 0, n, num, den, false, 64);
    }
    // arctan(1/q) = num / (den * q); scale to fixed point.
    mpz_class scaled = num << static_cast<unsigned long>(frac_bits);
    den *= q;
    return scaled / den;
}

mpz_class pi_fixed(long frac_bits, bool parallel) {
    return 16 * arctan_fixed_binsplit(5, frac_bits, parallel) -
           4 * arctan_fixed_binsplit(239, frac_bits, parallel);
}

mpz_class pi_fixed_iter(long frac_bits) {
    return 16 * arctan_fixed_iter(5, frac_bits) - 4 * arctan_fixed_iter(239, frac_bits);
}

Real reference_pi(mpfr_prec_t bits) {
    long frac = static_cast<long>(bits) + 64;
    mpz_class z = pi_fixed(frac);
    size_t zbits = mpz_sizeinbase(z.get_mpz_t(), 2);
    Real wide = Real::from_integer(z, static_cast<mpfr_prec_t>(zbits + 2));
    return wide.mul_2si(-frac).to_precision(bits);
}

std::string pi_digits(size_t sig) {
    if (sig == 0) throw std::invalid_argument("pi_digits: need at least one digit");
    mpfr_prec_t bits = static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(sig) * 3.3219280948873623)) + 32;
    return reference_pi(bits).to_fixed(sig);
}

}  // namespace radixpi::refpi
