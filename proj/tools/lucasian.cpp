// Command-line front end: test, scan, verify, cross-check, bench.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <iostream>

#include "lucasian/errors.hpp"
#include "lucasian/class_rules.hpp"
#include "lucasian/json_io.hpp"
#include "lucasian/oracle.hpp"
#include "lucasian/residue_lemmas.hpp"
#include "lucasian/scan.hpp"

namespace {

using namespace lucasian;

constexpr int kExitPrime = 0;
constexpr int kExitComposite = 1;
constexpr int kExitNotApplicable = 2;
constexpr int kExitFailure = 3;
constexpr int kExitCheckpoint = 65;  // EX_DATAERR
constexpr int kExitUsage = 64;       // EX_USAGE
constexpr int kExitInterrupted = 130;

std::atomic<bool> g_interrupted{false};

extern "C" void on_signal(int) { g_interrupted.store(true); }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Natural positive_natural(const std::string& text, const char* flag) {
    try {
        Integer v = parse_integer(text);
        if (sgn(v) > 0) return v;
    } catch (const InvalidArgument&) {
    }
    throw UsageError(std::string(flag) + " must be a positive integer, got '" + text + "'");
}

Integer any_integer(const std::string& text, const char* flag) {
    try {
        return parse_integer(text);
    } catch (const InvalidArgument&) {
        throw UsageError(std::string(flag) + " must be an integer, got '" + text + "'");
    }
}

Sign one_sign(const std::string& text) {
    if (auto s = parse_sign(text)) return *s;
    throw UsageError("--sign must be + or -, got '" + text + "'");
}

std::vector<Sign> sign_set(const std::string& text) {
    if (text == "none") return {};
    if (text == "both" || text == "+-" || text == "-+") return {Sign::Minus, Sign::Plus};
    return {one_sign(text)};
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void emit(const Json& j) { std::cout << j.dump() << '\n' << std::flush; }

struct TestArgs {
    std::string k, sign;
    std::uint64_t m = 0;
    std::string b, c;
};

int run_test(const TestArgs& a) {
    Candidate cand{positive_natural(a.k, "--k"), a.m, one_sign(a.sign)};
    if (a.b.empty() && !a.c.empty()) throw UsageError("--c requires --b");

    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    if (!a.b.empty()) {
        SunParams params{any_integer(a.b, "--b"), a.c.empty() ? Integer(1) : any_integer(a.c, "--c")};
        if (sgn(params.c) == 0) throw UsageError("--c must be nonzero");
        v = sun_test(cand, params);
    } else {
        v = class_test(cand);
    }
    const double elapsed = ms_since(start);

    Json j = to_json(make_record(cand, v, elapsed));
    if (v.params) {
        j["b"] = v.params->b.get_str();
        j["c"] = v.params->c.get_str();
    }
    emit(j);
    switch (v.outcome) {
        case Outcome::Prime: return kExitPrime;
        case Outcome::Composite: return kExitComposite;
        case Outcome::NotApplicable: return kExitNotApplicable;
    }
    return kExitFailure;
}

struct ScanArgs {
    std::string k_min = "1", k_max, signs = "-";
    std::uint64_t m_min = 3, m_max = 3;
    std::string checkpoint;
    bool resume = false;
    std::uint64_t checkpoint_every = 1000;
    std::uint64_t stop_after = 0;
    unsigned threads = 0;
    bool timing = false;
};

int run_scan_cmd(const ScanArgs& a) {
    ScanOptions opts;
    opts.range.k_min = positive_natural(a.k_min, "--k-min");
    opts.range.k_max = positive_natural(a.k_max, "--k-max");
    opts.range.m_min = a.m_min;
    opts.range.m_max = a.m_max;
    opts.range.signs = sign_set(a.signs);
    if (opts.range.k_min > opts.range.k_max || a.m_min > a.m_max) throw UsageError("scan range is empty");

    const char* dir = std::getenv(kCheckpointDirEnv);
    if (!a.checkpoint.empty()) {
        std::filesystem::path p = a.checkpoint;
        if (p.is_relative() && dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
        opts.checkpoint = p;
    } else if (dir != nullptr && *dir != '\0') {
        opts.checkpoint = std::filesystem::path(dir) / "scan-checkpoint.json";
    }
    opts.resume = a.resume;
    opts.checkpoint_every = a.checkpoint_every;
    if (a.stop_after != 0) opts.stop_after = a.stop_after;
    opts.threads = a.threads;
    opts.timing = a.timing;
    opts.interrupt = &g_interrupted;

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    const ScanSummary s = run_scan(opts, std::cout);

    Json summary{{"processed", s.processed},
                 {"emitted", s.emitted},
                 {"primes", s.primes},
                 {"completed", s.completed},
                 {"total_processed", s.state.processed}};
    if (opts.checkpoint) summary["checkpoint"] = opts.checkpoint->string();
    std::cerr << summary.dump() << '\n';
    return g_interrupted.load() ? kExitInterrupted : 0;
}

int run_verify(const std::string& target, std::uint64_t limit) {
    if (target == "lemmas") {
        const VerificationReport r = verify_lemma_tables(limit);
        emit(to_json(r));
        return r.clean() ? 0 : 1;
    }
    Json rules = Json::array();
    bool clean = true;
    for (const ClassRule& rule : rule_table()) {
        const ConsistencyReport r = verify_rule_consistency(rule);
        clean = clean && r.clean();
        Json item = to_json(r);
        item["definition"] = to_json(rule);
        rules.push_back(std::move(item));
    }
    emit(Json{{"target", "rules"}, {"rules", rules}, {"clean", clean}});
    return clean ? 0 : 1;
}

struct CrossArgs {
    std::uint64_t m_min = 3, m_max = 12;
    std::string signs = "both", mode = "class";
    unsigned b_max = 20, c_max = 3, threads = 0;
};

int run_cross(const CrossArgs& a) {
    CrossCheckOptions o;
    o.m_min = a.m_min;
    o.m_max = a.m_max;
    o.signs = sign_set(a.signs);
    o.mode = a.mode == "generic" ? CrossCheckMode::Generic : CrossCheckMode::ClassRules;
    o.b_max = a.b_max;
    o.c_max = a.c_max;
    o.threads = a.threads;
    const CrossCheckReport r = cross_check(o);
    emit(to_json(r));
    return r.clean() ? 0 : 1;
}

struct BenchArgs {
    std::string k = "3", sign = "-";
    std::uint64_t m = 10000;
    unsigned reps = 1;
};

int run_bench(const BenchArgs& a) {
    const Candidate cand{positive_natural(a.k, "--k"), a.m, one_sign(a.sign)};
    if (auto defect = candidate_defect(cand, kGenericMinExponent)) throw UsageError(*defect);

    std::string rule;
    SunParams params{Integer(3), Integer(1)};
    bool decided = false;
    if (!candidate_defect(cand, kClassMinExponent)) {
        if (auto matches = applicable_rules(cand); !matches.empty()) {
            params.b = matches.front().rule.get().b;
            rule = matches.front().rule.get().name();
            decided = true;
        }
    }
    if (!decided) {
        if (auto found = find_params(cand, 20, 3)) {
            params = *found;
            decided = true;
        }
        rule = sun_rule_name(params);
    }

    const ShiftFormModulus modulus(cand.k, cand.m, cand.sign == Sign::Plus);
    const Natural& n = modulus.value();
    Json runs = Json::array();
    std::optional<Natural> first_final;
    bool consistent = true;
    for (unsigned i = 0; i < std::max(1u, a.reps); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Natural seed = sun_seed(cand, params);
        const double seed_ms = ms_since(start);
        const auto iter_start = std::chrono::steady_clock::now();
        const SIterationTrace trace = s_iterate(seed, cand.m - 2, modulus);
        const double iterate_ms = ms_since(iter_start);
        const double total = ms_since(start);
        if (!first_final) first_final = trace.final;
        consistent = consistent && *first_final == trace.final;
        runs.push_back({{"total_ms", total},
                        {"seed_ms", seed_ms},
                        {"iterate_ms", iterate_ms},
                        {"per_squaring_us", cand.m > 2 ? 1000.0 * iterate_ms / double(cand.m - 2) : 0.0}});
    }
    std::string verdict = "unverified";
    if (decided) verdict = std::string(outcome_name(sgn(*first_final) == 0 ? Outcome::Prime : Outcome::Composite));
    emit(Json{{"k", natural_json(cand.k)},
              {"m", cand.m},
              {"sign", std::string(sign_symbol(cand.sign))},
              {"digits", decimal_digits(n)},
              {"squarings", cand.m - 2},
              {"rule", rule},
              {"verdict", verdict},
              {"runs", runs},
              {"consistent", consistent}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lucasian primality tests for k*2^m +- 1"};
    app.require_subcommand(1);

    TestArgs test_args;
    auto* test = app.add_subcommand("test", "Test one candidate; exit 0 prime, 1 composite, 2 not applicable");
    test->add_option("--k", test_args.k, "odd multiplier k")->required();
    test->add_option("--m", test_args.m, "exponent m")->required();
    test->add_option("--sign", test_args.sign, "+ or -")->required();
    test->add_option("--b", test_args.b, "run the general criterion with this b");
    test->add_option("--c", test_args.c, "c for the general criterion (default 1)");

    ScanArgs scan_args;
    auto* scan = app.add_subcommand("scan", "Class-test a (k, m, sign) range, one JSON line per applicable candidate");
    scan->add_option("--k-min", scan_args.k_min, "smallest k")->capture_default_str();
    scan->add_option("--k-max", scan_args.k_max, "largest k")->required();
    scan->add_option("--m-min", scan_args.m_min, "smallest m")->required();
    scan->add_option("--m-max", scan_args.m_max, "largest m")->required();
    scan->add_option("--signs,--sign", scan_args.signs, "-, +, both or none")->capture_default_str();
    scan->add_option("--checkpoint", scan_args.checkpoint, "checkpoint file");
    scan->add_flag("--resume", scan_args.resume, "continue from the checkpoint if it exists");
    scan->add_option("--checkpoint-every", scan_args.checkpoint_every, "candidates between checkpoints")
        ->capture_default_str();
    scan->add_option("--stop-after", scan_args.stop_after, "stop after this many candidates (0: no limit)");
    scan->add_option("--threads", scan_args.threads, "worker threads (0: all cores)");
    scan->add_flag("--timing", scan_args.timing, "include elapsed_ms in records");

    std::string verify_target;
    std::uint64_t verify_limit = 100000;
    auto* verify = app.add_subcommand("verify", "Check the residue tables or the class-rule preconditions");
    verify->add_option("target", verify_target, "lemmas or rules")
        ->required()
        ->check(CLI::IsMember({"lemmas", "rules"}));
    verify->add_option("--limit", verify_limit, "largest odd n for lemmas")->capture_default_str();

    CrossArgs cross_args;
    auto* cross = app.add_subcommand("cross-check", "Compare Lucasian verdicts with trial division");
    cross->add_option("--m-min", cross_args.m_min)->capture_default_str();
    cross->add_option("--m-max", cross_args.m_max)->capture_default_str();
    cross->add_option("--signs", cross_args.signs, "-, +, both or none")->capture_default_str();
    cross->add_option("--mode", cross_args.mode)->check(CLI::IsMember({"class", "generic"}))->capture_default_str();
    cross->add_option("--b-max", cross_args.b_max)->capture_default_str();
    cross->add_option("--c-max", cross_args.c_max)->capture_default_str();
    cross->add_option("--threads", cross_args.threads);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the squaring kernel on one candidate");
    bench->add_option("--k", bench_args.k)->capture_default_str();
    bench->add_option("--m", bench_args.m)->capture_default_str();
    bench->add_option("--sign", bench_args.sign)->capture_default_str();
    bench->add_option("--reps,--repetitions", bench_args.reps)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (test->parsed()) return run_test(test_args);
        if (scan->parsed()) return run_scan_cmd(scan_args);
        if (verify->parsed()) return run_verify(verify_target, verify_limit);
        if (cross->parsed()) return run_cross(cross_args);
        if (bench->parsed()) return run_bench(bench_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << '\n';
        return kExitCheckpoint;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
