#include "lucasian/modular.hpp"

#include <utility>

namespace lucasian {

namespace {

void require_odd_positive(const Natural& n, const char* what) {
    if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t())) {
        throw InvalidArgument(std::string(what) + ": modulus must be odd and positive, got " + n.get_str());
    }
}

void require_modulus(const Natural& modulus, const char* what) {
    if (modulus < 2) {
        throw InvalidArgument(std::string(what) + ": modulus must be at least 2, got " + modulus.get_str());
    }
}

unsigned low_bits(const mpz_class& x, unsigned mask) {
    return static_cast<unsigned>(mpz_fdiv_ui(x.get_mpz_t(), mask + 1));
}

}  // namespace

JacobiValue jacobi_value_from_int(int v) {
    if (v < -1 || v > 1) {
        throw InvalidArgument("Jacobi value out of range: " + std::to_string(v));
    }
    return static_cast<JacobiValue>(v);
}

JacobiValue jacobi(const Integer& a, const Natural& n) {
    require_odd_positive(n, "jacobi");

    int t = 1;
    mpz_class top = a;
    if (sgn(top) < 0) {
        // (-1/n) = -1 iff n = 3 (mod 4)
        if (low_bits(n, 3) == 3) t = -t;
        top = -top;
    }
    mpz_class bottom = n;
    mpz_mod(top.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());

    while (sgn(top) != 0) {
        const mp_bitcnt_t twos = mpz_scan1(top.get_mpz_t(), 0);
        if (twos != 0) {
            mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), twos);
            const unsigned r8 = low_bits(bottom, 7);
            if ((twos & 1) != 0 && (r8 == 3 || r8 == 5)) t = -t;
        }
        std::swap(top, bottom);
        if (low_bits(top, 3) == 3 && low_bits(bottom, 3) == 3) t = -t;
        mpz_mod(top.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    }
    return bottom == 1 ? static_cast<JacobiValue>(t) : JacobiValue::Zero;
}

JacobiValue jacobi(long a, const Natural& n) { return jacobi(Integer(a), n); }

Natural mod_pow(const Integer& base, const Natural& exponent, const Natural& modulus) {
    require_modulus(modulus, "mod_pow");
    if (sgn(exponent) < 0) throw InvalidArgument("mod_pow: negative exponent");
    Natural r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Natural mod_inverse(const Integer& a, const Natural& modulus) {
    require_modulus(modulus, "mod_inverse");
    Natural r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw NotInvertible(a.get_str() + " is not invertible modulo " + modulus.get_str());
    }
    return r;
}

Natural gcd(const Integer& a, const Integer& b) {
    Natural r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Natural mod_floor(const Integer& a, const Natural& modulus) {
    Natural r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Natural shifted_form(const Natural& k, std::uint64_t m, bool plus) {
    Natural n;
    mpz_mul_2exp(n.get_mpz_t(), k.get_mpz_t(), m);
    if (plus) {
        n += 1;
    } else {
        n -= 1;
    }
    return n;
}

ShiftFormModulus::ShiftFormModulus(Natural k, std::uint64_t m, bool plus)
    : k_(std::move(k)), m_(m), plus_(plus), n_(shifted_form(k_, m_, plus_)) {
    if (sgn(k_) <= 0 || n_ < 2) throw InvalidArgument("ShiftFormModulus: need k >= 1 and N >= 2");
    word_k_ = mpz_fits_ulong_p(k_.get_mpz_t()) != 0;
    if (word_k_) k_word_ = mpz_get_ui(k_.get_mpz_t());
}

void ShiftFormModulus::reduce(mpz_class& t) const {
    mpz_ptr x = t.get_mpz_t();
    if (!word_k_ || sgn(t) < 0) {
        mpz_mod(x, x, n_.get_mpz_t());
        return;
    }
    mpz_ptr hi = high_.get_mpz_t();
    mpz_ptr q = quot_.get_mpz_t();
    // t = (q k + r) 2^m + low  ==  -+q + r 2^m + low
    while (mpz_cmp(x, n_.get_mpz_t()) >= 0) {
        mpz_tdiv_q_2exp(hi, x, m_);
        if (mpz_cmp_ui(hi, k_word_) < 0) break;
        mpz_tdiv_r_2exp(x, x, m_);
        const unsigned long r = mpz_tdiv_q_ui(q, hi, k_word_);
        if (r != 0) {
            mpz_set_ui(hi, r);
            mpz_mul_2exp(hi, hi, m_);
            mpz_add(x, x, hi);
        }
        if (plus_) {
            mpz_sub(x, x, q);
        } else {
            mpz_add(x, x, q);
        }
    }
    while (sgn(t) < 0) mpz_add(x, x, n_.get_mpz_t());
    while (mpz_cmp(x, n_.get_mpz_t()) >= 0) mpz_sub(x, x, n_.get_mpz_t());
}

std::size_t decimal_digits(const Natural& n) {
    if (sgn(n) == 0) return 1;
    // mpz_sizeinbase may overshoot by one for base 10
    const std::size_t estimate = mpz_sizeinbase(n.get_mpz_t(), 10);
    Natural bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 10, estimate - 1);
    return abs(n) < bound ? estimate - 1 : estimate;
}

bool fits_u64(const Natural& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Natural& n) {
    if (!fits_u64(n)) throw OutOfRange(n.get_str() + " does not fit in 64 bits");
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return mpz_get_ui(n.get_mpz_t());
}

Natural from_u64(std::uint64_t v) {
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return Natural(static_cast<unsigned long>(v));
}

Integer parse_integer(const std::string& text) {
    const std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    bool digits = text.size() > start;
    for (std::size_t i = start; i < text.size() && digits; ++i) {
        digits = text[i] >= '0' && text[i] <= '9';
    }
    Integer r;
    if (!digits || mpz_set_str(r.get_mpz_t(), text.c_str() + (text[0] == '+' ? 1 : 0), 10) != 0) {
        throw InvalidArgument("not a decimal integer: '" + text + "'");
    }
    return r;
}

}  // namespace lucasian
