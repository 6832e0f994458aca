#include "lucasian/sun_criterion.hpp"

namespace lucasian {

std::string_view sign_symbol(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::optional<Sign> parse_sign(std::string_view text) {
    if (text == "+" || text == "plus") return Sign::Plus;
    if (text == "-" || text == "minus") return Sign::Minus;
    return std::nullopt;
}

std::optional<std::string> candidate_defect(const Candidate& cand, std::uint64_t min_exponent) {
    if (sgn(cand.k) <= 0) return "k must be positive";
    if (mpz_even_p(cand.k.get_mpz_t())) return "k must be odd";
    if (cand.m < min_exponent) return "m must be at least " + std::to_string(min_exponent);
    if (mpz_sizeinbase(cand.k.get_mpz_t(), 2) > cand.m) return "k must be below 2^m";
    return std::nullopt;
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Prime: return "prime";
        case Outcome::Composite: return "composite";
        case Outcome::NotApplicable: return "not-applicable";
    }
    return "unknown";
}

std::string sun_rule_name(const SunParams& params) {
    return "sun(b=" + params.b.get_str() + ",c=" + params.c.get_str() + ")";
}

SunConditions check_sun_conditions(const Candidate& cand, const SunParams& params) {
    SunConditions out;
    const Natural n = cand.value();
    if (sgn(params.c) == 0) {
        out.detail = "c must be nonzero";
        return out;
    }
    out.gcd_n_c = gcd(n, params.c);
    if (out.gcd_n_c != 1) {
        out.detail = "gcd(N, c) = " + out.gcd_n_c.get_str();
        return out;
    }
    out.plus_symbol = jacobi(Integer(2 * params.c + params.b), n);
    out.minus_symbol = jacobi(Integer(2 * params.c - params.b), n);
    out.c_symbol = jacobi(params.c, n);
    out.holds = out.c_symbol != JacobiValue::Zero && out.plus_symbol == -out.c_symbol &&
                out.minus_symbol == -out.c_symbol;
    out.detail = "symbols (2c+b/N)=" + std::to_string(to_int(out.plus_symbol)) +
                 " (2c-b/N)=" + std::to_string(to_int(out.minus_symbol)) +
                 " (c/N)=" + std::to_string(to_int(out.c_symbol));
    return out;
}

Natural sun_seed(const Candidate& cand, const SunParams& params) {
    const Natural n = cand.value();
    const Natural v = lucas_v_mod({params.b, params.c * params.c}, cand.k, n);
    if (params.c == 1) return v;
    const Natural c_inv = mod_inverse(params.c, n);
    return mod_floor(mod_pow(c_inv, cand.k, n) * v, n);
}

namespace {

// A nontrivial factor of n shared with value, if any.
std::optional<Natural> shared_factor(const Natural& n, const Integer& value) {
    if (sgn(value) == 0) return std::nullopt;
    Natural g = gcd(n, value);
    if (g > 1 && g < n) return g;
    return std::nullopt;
}

}  // namespace

Verdict sun_test(const Candidate& cand, const SunParams& params, std::uint64_t min_exponent) {
    Verdict v;
    v.rule = sun_rule_name(params);
    v.params = params;
    if (auto defect = candidate_defect(cand, min_exponent)) {
        v.reason = *defect;
        return v;
    }
    const SunConditions cond = check_sun_conditions(cand, params);
    if (!cond.holds) {
        const Natural n = cand.value();
        for (const Integer& probe : {params.c, Integer(2 * params.c + params.b), Integer(2 * params.c - params.b)}) {
            if (auto f = shared_factor(n, probe)) {
                v.outcome = Outcome::Composite;
                v.witness = *f;
                v.reason = "N shares the factor " + f->get_str() + " with a precondition argument";
                return v;
            }
        }
        v.reason = "preconditions fail: " + cond.detail;
        return v;
    }
    const ShiftFormModulus n(cand.k, cand.m, cand.sign == Sign::Plus);
    v.trace = s_iterate(sun_seed(cand, params), cand.m - 2, n);
    v.outcome = sgn(v.trace->final) == 0 ? Outcome::Prime : Outcome::Composite;
    return v;
}

std::optional<SunParams> find_params(const Candidate& cand, unsigned b_max, unsigned c_max) {
    if (candidate_defect(cand, kGenericMinExponent)) return std::nullopt;
    for (unsigned c = 1; c <= c_max; ++c) {
        for (unsigned b = 1; b <= b_max; ++b) {
            if (b == 2 * c) continue;
            SunParams params{Integer(b), Integer(c)};
            if (check_sun_conditions(cand, params).holds) return params;
        }
    }
    return std::nullopt;
}

}  // namespace lucasian
