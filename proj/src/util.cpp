#include "toolquery/util.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace toolquery {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::duplicate_id: return "duplicate_id";
        case ErrorCode::degenerate_split: return "degenerate_split";
        case ErrorCode::empty_text: return "empty_text";
        case ErrorCode::provider_unavailable: return "provider_unavailable";
        case ErrorCode::bad_cutoff: return "bad_cutoff";
        case ErrorCode::invalid_judgment: return "invalid_judgment";
        case ErrorCode::empty_evaluation: return "empty_evaluation";
        case ErrorCode::no_queries: return "no_queries";
        case ErrorCode::empty_generation: return "empty_generation";
        case ErrorCode::service_unavailable: return "service_unavailable";
        case ErrorCode::context_overflow: return "context_overflow";
        case ErrorCode::empty_selection: return "empty_selection";
        case ErrorCode::trainer_failure: return "trainer_failure";
        case ErrorCode::io_error: return "io_error";
        case ErrorCode::spec_error: return "spec_error";
        case ErrorCode::validation_error: return "validation_error";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

uint64_t Rng::below(uint64_t n) {
    if (n == 0) raise(ErrorCode::invalid_argument, "Rng::below(0)");
    // Rejection sampling over the largest multiple of n.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t value = next();
    while (value >= limit) value = next();
    return value % n;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t Rng::derive(std::initializer_list<uint64_t> parts) {
    uint64_t state = 0x2545f4914f6cdd1dULL;
    for (uint64_t part : parts) state = splitmix64(state ^ part);
    return state;
}

uint64_t Rng::derive(uint64_t seed, std::string_view tag) {
    return derive({seed, fnv1a64(tag)});
}

uint64_t fnv1a64(std::string_view text) {
    uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr)) {
        raise(ErrorCode::internal, "EVP_Digest failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

std::string sha256_file(const std::string& path) {
    return sha256_hex(read_file(path));
}

size_t word_count(std::string_view text) {
    size_t count = 0;
    bool in_word = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

std::string trim(std::string_view text) {
    size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t pos = text.find('\n', start);
        if (pos == std::string_view::npos) {
            lines.emplace_back(text.substr(start));
            break;
        }
        std::string_view line = text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        start = pos + 1;
    }
    return lines;
}

std::vector<std::string> split_whitespace(std::string_view text) {
    std::vector<std::string> words;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > begin) words.emplace_back(text.substr(begin, i - begin));
    }
    return words;
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i) {
        if (i) out.push_back('\n');
        out += lines[i];
    }
    return out;
}

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::io_error, "cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::io_error, "cannot write file: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) raise(ErrorCode::io_error, "short write: " + path);
}

void ensure_dir(const std::string& path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec) raise(ErrorCode::io_error, "cannot create directory: " + path);
}

std::vector<JsonlRecord> read_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::io_error, "cannot open file: " + path);
    std::vector<JsonlRecord> records;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json value = json::parse(line, nullptr, false);
        if (value.is_discarded()) {
            raise(ErrorCode::parse_error,
                  path + ":" + std::to_string(line_no) + ": malformed JSON line");
        }
        records.push_back({line_no, std::move(value)});
    }
    return records;
}

void write_jsonl(const std::string& path, const std::vector<json>& records) {
    std::string out;
    for (const json& record : records) {
        out += record.dump();
        out.push_back('\n');
    }
    write_file(path, out);
}

std::string canonical_json(const json& value) {
    return value.dump(2);
}

std::string json_hash(const json& value) {
    return sha256_hex(value.dump());
}

void parallel_for(size_t n, size_t workers, const std::function<void(size_t)>& fn) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> cursor{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = cursor.fetch_add(1); i < n; i = cursor.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace toolquery
