#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lucasian/candidate.hpp"
#include "lucasian/sun_criterion.hpp"

namespace lucasian {

inline constexpr int kCheckpointSchemaVersion = 1;

/// Name of the environment variable holding the default checkpoint directory.
inline constexpr const char* kCheckpointDirEnv = "LUCASIAN_CHECKPOINT_DIR";

struct ScanRange {
    Natural k_min = 1;
    Natural k_max = 1;
    std::uint64_t m_min = 3;
    std::uint64_t m_max = 3;
    std::vector<Sign> signs{Sign::Minus};

    bool operator==(const ScanRange&) const = default;
};

/// Last fully processed candidate in canonical order (m, then k, then sign).
struct ScanCursor {
    Natural k;
    std::uint64_t m = 0;
    Sign sign = Sign::Minus;

    bool operator==(const ScanCursor&) const = default;
};

struct ResultRecord {
    Natural k;
    std::uint64_t m = 0;
    Sign sign = Sign::Minus;
    std::size_t digits = 0;
    Outcome outcome = Outcome::NotApplicable;
    std::string rule;
    std::string reason;
    std::optional<Natural> witness;
    std::optional<double> elapsed_ms;

    bool operator==(const ResultRecord&) const = default;
};

ResultRecord make_record(const Candidate& cand, const Verdict& verdict, std::optional<double> elapsed_ms);

struct ScanCheckpoint {
    int schema_version = kCheckpointSchemaVersion;
    ScanRange range;
    std::optional<ScanCursor> cursor;
    std::uint64_t processed = 0;
    std::vector<ResultRecord> found;

    bool operator==(const ScanCheckpoint&) const = default;
};

/// Unreadable, unparsable, wrong schema version, or not matching the requested scan.
class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes `<path>.tmp` and renames it over `path`.
void save_checkpoint(const std::filesystem::path& path, const ScanCheckpoint& checkpoint);
ScanCheckpoint load_checkpoint(const std::filesystem::path& path);

/// Sorted, deduplicated; canonical sign order is minus before plus.
std::vector<Sign> canonical_signs(std::vector<Sign> signs);

/// Canonical enumeration of a scan range: odd k in [k_min, k_max] with k < 2^m.
class ScanOrder {
public:
    explicit ScanOrder(ScanRange range);

    /// Positions the order just after `cursor`. Throws CheckpointError if the
    /// cursor does not belong to the range.
    void seek_after(const ScanCursor& cursor);
    std::optional<Candidate> next();

private:
    bool settle();

    ScanRange range_;
    std::uint64_t m_;
    Natural k_;
    std::size_t sign_index_ = 0;
    bool started_ = false;
};

struct ScanOptions {
    ScanRange range;
    unsigned threads = 0;  // 0: hardware concurrency
    std::optional<std::filesystem::path> checkpoint;
    bool resume = false;
    std::uint64_t checkpoint_every = 1000;
    std::optional<std::uint64_t> stop_after;  // candidates processed in this run
    bool timing = false;
    const std::atomic<bool>* interrupt = nullptr;
};

struct ScanSummary {
    std::uint64_t processed = 0;  // this run
    std::uint64_t emitted = 0;
    std::uint64_t primes = 0;
    bool completed = false;
    ScanCheckpoint state;
};

/// Class-tests every candidate of the range in canonical order and writes one
/// JSON line per applicable candidate to `out`. Output is flushed before each
/// checkpoint write, so a checkpoint never runs ahead of emitted output.
ScanSummary run_scan(const ScanOptions& options, std::ostream& out);

}  // namespace lucasian
