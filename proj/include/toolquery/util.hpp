#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "toolquery/common.hpp"

namespace toolquery {

using json = nlohmann::json;

// Deterministic RNG. All randomness in the project goes through this class so
// that outputs are bit-stable across platforms and standard libraries
// (std::uniform_int_distribution and std::shuffle are implementation-defined).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Unbiased integer in [0, n) via rejection sampling. n must be > 0.
    uint64_t below(uint64_t n);

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    // Derives a child seed from a stream of values (splitmix64 chain).
    static uint64_t derive(std::initializer_list<uint64_t> parts);
    static uint64_t derive(uint64_t seed, std::string_view tag);

private:
    std::mt19937_64 gen_;
};

// FNV-1a, stable across platforms; used for feature hashing and seed tags.
uint64_t fnv1a64(std::string_view text);

// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);
// SHA-256 of a file's contents. Throws io_error if unreadable.
std::string sha256_file(const std::string& path);

// Number of maximal non-whitespace substrings. The same function backs the
// preprocessing filter and its tests.
size_t word_count(std::string_view text);

std::string trim(std::string_view text);
std::vector<std::string> split_lines(std::string_view text);
std::vector<std::string> split_whitespace(std::string_view text);
std::string join_lines(const std::vector<std::string>& lines);
std::string lowercase(std::string_view text);

// --- file helpers -----------------------------------------------------------

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);
void ensure_dir(const std::string& path);

struct JsonlRecord {
    size_t line;  // 1-based line number in the source file
    json value;
};

// Parses one JSON object per non-empty line. ParseError carries the 1-based
// line number of the offending line.
std::vector<JsonlRecord> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<json>& records);

// Canonical serialization used for hashing and byte-identical reports:
// object keys sorted (nlohmann default), no trailing whitespace.
std::string canonical_json(const json& value);
std::string json_hash(const json& value);

// Runs fn(i) for i in [0, n) on up to `workers` threads. Exceptions from any
// item are rethrown (first by index) after all workers join. workers == 0
// means hardware concurrency.
void parallel_for(size_t n, size_t workers, const std::function<void(size_t)>& fn);

}  // namespace toolquery
