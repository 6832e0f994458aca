#include "lucasian/scan.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "lucasian/class_rules.hpp"
#include "lucasian/json_io.hpp"

namespace lucasian {

ResultRecord make_record(const Candidate& cand, const Verdict& verdict, std::optional<double> elapsed_ms) {
    ResultRecord r;
    r.k = cand.k;
    r.m = cand.m;
    r.sign = cand.sign;
    r.digits = sgn(cand.k) > 0 ? decimal_digits(cand.value()) : 1;
    r.outcome = verdict.outcome;
    r.rule = verdict.rule;
    r.reason = verdict.reason;
    r.witness = verdict.witness;
    r.elapsed_ms = elapsed_ms;
    return r;
}

void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& checkpoint) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw CheckpointError("cannot write checkpoint " + tmp.string());
        f << to_json(checkpoint).dump(2) << '\n';
        f.flush();
        if (!f) throw CheckpointError("short write on checkpoint " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

ScanCheckpoint load_checkpoint(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw CheckpointError("cannot read checkpoint " + path.string());
    std::stringstream buf;
    buf << f.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) throw CheckpointError("checkpoint " + path.string() + " is not valid JSON");
    return checkpoint_from_json(j);
}

std::vector<Sign> canonical_signs(std::vector<Sign> signs) {
    std::sort(signs.begin(), signs.end());
    signs.erase(std::unique(signs.begin(), signs.end()), signs.end());
    return signs;
}

namespace {

Natural first_odd_at_least(const Natural& v) {
    Natural k = v < 1 ? Natural(1) : v;
    if (mpz_even_p(k.get_mpz_t())) k += 1;
    return k;
}

// k < 2^m and k <= k_max
bool k_in_row(const Natural& k, std::uint64_t m, const Natural& k_max) {
    return k <= k_max && mpz_sizeinbase(k.get_mpz_t(), 2) <= m;
}

}  // namespace

ScanOrder::ScanOrder(ScanRange range) : range_(std::move(range)), m_(range_.m_min) {
    range_.signs = canonical_signs(range_.signs);
    k_ = first_odd_at_least(range_.k_min);
}

bool ScanOrder::settle() {
    while (m_ <= range_.m_max) {
        if (k_in_row(k_, m_, range_.k_max)) return true;
        if (m_ == range_.m_max) break;
        ++m_;
        k_ = first_odd_at_least(range_.k_min);
        sign_index_ = 0;
    }
    m_ = range_.m_max + 1;
    return false;
}

void ScanOrder::seek_after(const ScanCursor& cursor) {
    const auto it = std::find(range_.signs.begin(), range_.signs.end(), cursor.sign);
    const bool ok = cursor.m >= range_.m_min && cursor.m <= range_.m_max && mpz_odd_p(cursor.k.get_mpz_t()) &&
                    cursor.k >= range_.k_min && k_in_row(cursor.k, cursor.m, range_.k_max) &&
                    it != range_.signs.end();
    if (!ok) throw CheckpointError("checkpoint cursor lies outside the scan range");
    m_ = cursor.m;
    k_ = cursor.k;
    sign_index_ = static_cast<std::size_t>(it - range_.signs.begin());
    started_ = true;
}

std::optional<Candidate> ScanOrder::next() {
    if (range_.signs.empty() || m_ > range_.m_max) return std::nullopt;
    if (started_) {
        if (++sign_index_ == range_.signs.size()) {
            sign_index_ = 0;
            k_ += 2;
        }
    }
    started_ = true;
    if (!settle()) return std::nullopt;
    return Candidate{k_, m_, range_.signs[sign_index_]};
}

namespace {

struct Evaluated {
    Verdict verdict;
    double elapsed_ms = 0;
};

std::vector<Evaluated> evaluate(const std::vector<Candidate>& batch, unsigned workers) {
    std::vector<Evaluated> results(batch.size());
    std::vector<std::exception_ptr> errors(workers);
    const auto work = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < batch.size(); i += workers) {
                const auto start = std::chrono::steady_clock::now();
                results[i].verdict = class_test(batch[i]);
                results[i].elapsed_ms =
                    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1 || batch.size() <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

}  // namespace

ScanSummary run_scan(const ScanOptions& options, std::ostream& out) {
    ScanRange range = options.range;
    range.signs = canonical_signs(range.signs);
    if (range.m_min > range.m_max || range.k_min > range.k_max) {
        throw InvalidArgument("scan range is empty");
    }

    ScanSummary summary;
    summary.state.range = range;
    ScanOrder order(range);

    if (options.resume && options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
        ScanCheckpoint loaded = load_checkpoint(*options.checkpoint);
        if (loaded.range != range) throw CheckpointError("checkpoint was written for a different scan range");
        if (loaded.cursor) order.seek_after(*loaded.cursor);
        summary.state = std::move(loaded);
    }

    const unsigned workers =
        options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t stride = std::max<std::uint64_t>(1, options.checkpoint_every);
    std::uint64_t since_checkpoint = 0;

    const auto write_checkpoint = [&] {
        out.flush();
        if (options.checkpoint) save_checkpoint(*options.checkpoint, summary.state);
        since_checkpoint = 0;
    };

    std::vector<Candidate> batch;
    while (true) {
        if (options.interrupt && options.interrupt->load()) break;
        if (options.stop_after && summary.processed >= *options.stop_after) break;

        std::uint64_t capacity = 64ULL * workers;
        if (options.checkpoint) capacity = std::min(capacity, stride - since_checkpoint);
        if (options.stop_after) capacity = std::min(capacity, *options.stop_after - summary.processed);

        batch.clear();
        while (batch.size() < capacity) {
            auto cand = order.next();
            if (!cand) break;
            batch.push_back(std::move(*cand));
        }
        if (batch.empty()) {
            summary.completed = true;
            break;
        }

        const auto results = evaluate(batch, workers);
        for (std::size_t i = 0; i < batch.size(); ++i) {
            const Verdict& v = results[i].verdict;
            if (v.outcome == Outcome::NotApplicable) continue;
            ResultRecord rec =
                make_record(batch[i], v, options.timing ? std::optional(results[i].elapsed_ms) : std::nullopt);
            out << to_json(rec).dump() << '\n';
            ++summary.emitted;
            if (v.outcome == Outcome::Prime) {
                ++summary.primes;
                summary.state.found.push_back(std::move(rec));
            }
        }
        const Candidate& last = batch.back();
        summary.state.cursor = ScanCursor{last.k, last.m, last.sign};
        summary.state.processed += batch.size();
        summary.processed += batch.size();
        since_checkpoint += batch.size();
        if (since_checkpoint >= stride) write_checkpoint();
    }
    write_checkpoint();
    return summary;
}

}  // namespace lucasian
