#include "lucasian/lucas.hpp"

namespace lucasian {

namespace {

inline void reduce(mpz_class& x, const mpz_class& modulus) {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
}

}  // namespace

Natural lucas_v_mod(const LucasParams& params, const Natural& n, const Natural& modulus) {
    if (modulus < 2 || mpz_even_p(modulus.get_mpz_t())) {
        throw InvalidArgument("lucas_v_mod: modulus must be odd and at least 3, got " + modulus.get_str());
    }
    if (sgn(n) < 0) throw InvalidArgument("lucas_v_mod: negative index");

    const Natural p = mod_floor(params.p, modulus);
    const Natural q = mod_floor(params.q, modulus);
    const bool unit_q = (q == 1);

    Natural v_lo = 2 % modulus;  // V_j
    Natural v_hi = p;            // V_{j+1}
    Natural q_pow = 1;           // Q^j
    Natural t;

    const mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (mp_bitcnt_t i = bits; i-- > 0;) {
        const bool bit = mpz_tstbit(n.get_mpz_t(), i) != 0;
        // V_{2j+1} = V_j V_{j+1} - P Q^j
        t = v_lo * v_hi;
        t -= unit_q ? p : Natural(p * q_pow);
        reduce(t, modulus);
        if (bit) {
            // V_{2j+2} = V_{j+1}^2 - 2 Q^{j+1}
            v_lo = v_hi * v_hi;
            v_lo -= unit_q ? Natural(2) : Natural(2 * q_pow * q);
            reduce(v_lo, modulus);
            std::swap(v_lo, t);
            v_hi = std::move(t);
            if (!unit_q) {
                q_pow = q_pow * q_pow * q;
                reduce(q_pow, modulus);
            }
        } else {
            // V_{2j} = V_j^2 - 2 Q^j
            v_hi = std::move(t);
            v_lo = v_lo * v_lo;
            v_lo -= unit_q ? Natural(2) : Natural(2 * q_pow);
            reduce(v_lo, modulus);
            if (!unit_q) {
                q_pow = q_pow * q_pow;
                reduce(q_pow, modulus);
            }
        }
    }
    return v_lo;
}

Integer lucas_v_naive(const LucasParams& params, std::uint64_t n) {
    Integer prev = 2;
    Integer cur = params.p;
    if (n == 0) return prev;
    for (std::uint64_t i = 1; i < n; ++i) {
        Integer next = params.p * cur - params.q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer lucas_v_sum(const LucasParams& params, std::uint64_t n) {
    if (n == 0) return 2;
    const Integer minus_q = -params.q;
    Integer total = 0;
    Integer coeff, p_pow, q_pow;
    for (std::uint64_t r = 0; 2 * r <= n; ++r) {
        mpz_bin_uiui(coeff.get_mpz_t(), n - r, r);
        coeff *= static_cast<unsigned long>(n);
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), n - r);
        mpz_pow_ui(p_pow.get_mpz_t(), params.p.get_mpz_t(), n - 2 * r);
        mpz_pow_ui(q_pow.get_mpz_t(), minus_q.get_mpz_t(), r);
        total += coeff * p_pow * q_pow;
    }
    return total;
}

SIterationTrace s_iterate(const Natural& x, std::uint64_t iterations, const Natural& modulus) {
    if (modulus < 2) {
        throw InvalidArgument("s_iterate: modulus must be at least 2, got " + modulus.get_str());
    }
    if (sgn(x) < 0 || x >= modulus) {
        throw InvalidArgument("s_iterate: seed must lie in [0, modulus)");
    }
    SIterationTrace trace{x, iterations, x};
    mpz_ptr s = trace.final.get_mpz_t();
    mpz_srcptr n = modulus.get_mpz_t();
    mpz_class wide;
    mpz_ptr w = wide.get_mpz_t();
    for (std::uint64_t i = 0; i < iterations; ++i) {
        mpz_mul(w, s, s);
        mpz_sub_ui(w, w, 2);
        mpz_mod(s, w, n);
    }
    return trace;
}

}  // namespace lucasian

namespace lucasian {

SIterationTrace s_iterate(const Natural& x, std::uint64_t iterations, const ShiftFormModulus& modulus) {
    const Natural& n = modulus.value();
    if (sgn(x) < 0 || x >= n) {
        throw InvalidArgument("s_iterate: seed must lie in [0, modulus)");
    }
    SIterationTrace trace{x, iterations, x};
    mpz_ptr s = trace.final.get_mpz_t();
    mpz_class wide;
    mpz_ptr w = wide.get_mpz_t();
    for (std::uint64_t i = 0; i < iterations; ++i) {
        mpz_mul(w, s, s);
        mpz_sub_ui(w, w, 2);
        modulus.reduce(wide);
        mpz_swap(s, w);
    }
    return trace;
}

}  // namespace lucasian
