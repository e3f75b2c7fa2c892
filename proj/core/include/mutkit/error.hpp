#pragma once

#include <stdexcept>
#include <string>

namespace mutkit {

enum class errc {
    rank_mismatch,
    not_divisible,
    not_laurent,
    not_an_exponent,
    empty_polynomial,
    empty_input,
    height_out_of_range,
    not_full_dimensional,
    unsupported_rank,
    too_large,
    mutation_undefined,
    non_integral_result,
    search_budget_exceeded,
    pipeline_search_failed,
    potential_unavailable,
    consistency_violation,
    invalid_argument,
    parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace mutkit
