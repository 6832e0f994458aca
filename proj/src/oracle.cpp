#include "lucasian/oracle.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "lucasian/class_rules.hpp"

namespace lucasian {

std::string_view oracle_outcome_name(OracleOutcome o) {
    switch (o) {
        case OracleOutcome::Prime: return "prime";
        case OracleOutcome::Composite: return "composite";
        case OracleOutcome::ProbablePrime: return "probable-prime";
    }
    return "unknown";
}

std::string_view oracle_method_name(OracleMethod m) {
    return m == OracleMethod::TrialDivision ? "trial-division" : "strong-probable-prime";
}

OracleVerdict trial_division(const Natural& n, std::uint64_t bound) {
    if (n < 2) throw InvalidArgument("trial_division: N must be at least 2");
    if (!fits_u64(n) || to_u64(n) > bound) {
        throw OutOfRange("trial_division: " + n.get_str() + " exceeds bound " + std::to_string(bound));
    }
    const std::uint64_t v = to_u64(n);
    OracleVerdict out{OracleOutcome::Prime, OracleMethod::TrialDivision, std::nullopt, std::nullopt};
    if (v % 2 == 0) {
        if (v != 2) {
            out.outcome = OracleOutcome::Composite;
            out.factor = from_u64(2);
        }
        return out;
    }
    for (std::uint64_t d = 3; d * d <= v; d += 2) {
        if (v % d == 0) {
            out.outcome = OracleOutcome::Composite;
            out.factor = from_u64(d);
            return out;
        }
    }
    return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(u128(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
    std::uint64_t r = 1 % n;
    a %= n;
    while (e != 0) {
        if (e & 1) r = mul_mod(r, a, n);
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    return r;
}

// n odd, n > 2, d * 2^s = n - 1.
bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool strong_probable_prime_big(const Natural& n, const Natural& a, const Natural& d, unsigned long s) {
    const Natural n_minus_1 = n - 1;
    Natural x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1) return true;
    }
    return false;
}

// Deterministic for every n < 2^64.
constexpr std::array<std::uint64_t, 12> kSmallBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

OracleVerdict probable_prime(const Natural& n, unsigned rounds) {
    if (n < 2) throw InvalidArgument("probable_prime: N must be at least 2");
    OracleVerdict out{OracleOutcome::Prime, OracleMethod::StrongProbablePrime, std::nullopt, std::nullopt};
    if (mpz_even_p(n.get_mpz_t())) {
        if (n != 2) {
            out.outcome = OracleOutcome::Composite;
            out.factor = from_u64(2);
        }
        return out;
    }
    if (n == 3) return out;

    if (fits_u64(n)) {
        const std::uint64_t v = to_u64(n);
        std::uint64_t d = v - 1;
        unsigned s = 0;
        while (d % 2 == 0) {
            d /= 2;
            ++s;
        }
        for (std::uint64_t a : kSmallBases) {
            if (a % v == 0) continue;
            if (!strong_probable_prime_u64(v, a, d, s)) {
                out.outcome = OracleOutcome::Composite;
                out.witness_base = from_u64(a);
                return out;
            }
        }
        return out;
    }

    const Natural n_minus_1 = n - 1;
    const unsigned long s = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    Natural d;
    mpz_tdiv_q_2exp(d.get_mpz_t(), n_minus_1.get_mpz_t(), s);
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eed);
    const Natural span = n - 3;  // bases in [2, n - 2]
    for (unsigned i = 0; i < rounds; ++i) {
        const Natural a = 2 + rng.get_z_range(span);
        if (!strong_probable_prime_big(n, a, d, s)) {
            out.outcome = OracleOutcome::Composite;
            out.witness_base = a;
            return out;
        }
    }
    out.outcome = OracleOutcome::ProbablePrime;
    return out;
}

OracleVerdict oracle_verdict(const Natural& n) {
    if (fits_u64(n) && to_u64(n) <= kTrialDivisionBound) return trial_division(n);
    return probable_prime(n);
}

void CrossCheckReport::merge(const CrossCheckReport& other) {
    cases += other.cases;
    primes += other.primes;
    composites += other.composites;
    class_comparisons += other.class_comparisons;
    for (const auto& [name, tally] : other.per_rule) {
        RuleTally& t = per_rule[name];
        t.cases += tally.cases;
        t.primes += tally.primes;
        t.composites += tally.composites;
    }
    disagreements.insert(disagreements.end(), other.disagreements.begin(), other.disagreements.end());
}

namespace {

bool agrees(Outcome lucasian, OracleOutcome oracle) {
    switch (lucasian) {
        case Outcome::Prime: return oracle != OracleOutcome::Composite;
        case Outcome::Composite: return oracle == OracleOutcome::Composite;
        case Outcome::NotApplicable: return false;
    }
    return false;
}

void record(CrossCheckReport& report, const Candidate& cand, const Verdict& v) {
    ++report.cases;
    RuleTally& t = report.per_rule[v.rule];
    ++t.cases;
    if (v.outcome == Outcome::Prime) {
        ++report.primes;
        ++t.primes;
    } else if (v.outcome == Outcome::Composite) {
        ++report.composites;
        ++t.composites;
    }
    const OracleVerdict truth = oracle_verdict(cand.value());
    if (!agrees(v.outcome, truth.outcome)) {
        report.disagreements.push_back({cand.k, cand.m, cand.sign, v.rule, v.outcome, truth.outcome, "oracle"});
    }
}

void check_one(CrossCheckReport& report, const Candidate& cand, const CrossCheckOptions& options) {
    if (options.mode == CrossCheckMode::ClassRules) {
        if (applicable_rules(cand).empty()) return;
        try {
            record(report, cand, class_test(cand, DispatchMode::VerifyAll));
        } catch (const RuleDisagreement& e) {
            ++report.cases;
            report.disagreements.push_back(
                {cand.k, cand.m, cand.sign, e.what(), Outcome::NotApplicable, std::nullopt, "class-rules"});
        }
        return;
    }
    const auto params = find_params(cand, options.b_max, options.c_max);
    if (!params) return;
    const Verdict generic = sun_test(cand, *params);
    record(report, cand, generic);
    if (!applicable_rules(cand).empty()) {
        ++report.class_comparisons;
        const Verdict by_class = class_test(cand);
        if (by_class.outcome != generic.outcome) {
            report.disagreements.push_back(
                {cand.k, cand.m, cand.sign, generic.rule + " vs " + by_class.rule, generic.outcome, std::nullopt,
                 "class-rules"});
        }
    }
}

}  // namespace

CrossCheckReport cross_check(const CrossCheckOptions& options) {
    if (options.m_min < kClassMinExponent || options.m_min > options.m_max) {
        throw InvalidArgument("cross_check: need 3 <= m_min <= m_max");
    }
    // Largest N is below 2^(2 m_max) + 1.
    if (2 * options.m_max >= 64 || (std::uint64_t(1) << (2 * options.m_max)) >= kTrialDivisionBound) {
        throw InvalidArgument("cross_check: m_max too large for exact trial division");
    }

    std::vector<Sign> signs = options.signs;
    std::sort(signs.begin(), signs.end());
    signs.erase(std::unique(signs.begin(), signs.end()), signs.end());

    unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<CrossCheckReport> partial(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::uint64_t index = 0;
                for (std::uint64_t m = options.m_min; m <= options.m_max; ++m) {
                    const std::uint64_t k_end = std::uint64_t(1) << m;
                    for (std::uint64_t k = 1; k < k_end; k += 2) {
                        if (index++ % workers != w) continue;
                        for (Sign s : signs) check_one(partial[w], Candidate{from_u64(k), m, s}, options);
                    }
                }
            });
        }
    }

    CrossCheckReport report;
    report.options = options;
    report.options.signs = signs;
    for (const auto& p : partial) report.merge(p);
    std::sort(report.disagreements.begin(), report.disagreements.end(), [](const Disagreement& a, const Disagreement& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.k != b.k) return a.k < b.k;
        return a.sign < b.sign;
    });
    return report;
}

}  // namespace lucasian
