#pragma once

#include <stdexcept>
#include <string>

namespace toolquery {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    duplicate_id,
    degenerate_split,
    empty_text,
    provider_unavailable,
    bad_cutoff,
    invalid_judgment,
    empty_evaluation,
    no_queries,
    empty_generation,
    service_unavailable,
    context_overflow,
    empty_selection,
    trainer_failure,
    io_error,
    spec_error,
    validation_error,
    internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace toolquery
