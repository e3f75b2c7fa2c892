#include "mutkit/error.hpp"

namespace mutkit {

const char* errc_name(errc c) {
    switch (c) {
        case errc::rank_mismatch: return "RankMismatch";
        case errc::not_divisible: return "NotDivisible";
        case errc::not_laurent: return "NotLaurent";
        case errc::not_an_exponent: return "NotAnExponent";
        case errc::empty_polynomial: return "EmptyPolynomial";
        case errc::empty_input: return "EmptyInput";
        case errc::height_out_of_range: return "HeightOutOfRange";
        case errc::not_full_dimensional: return "NotFullDimensional";
        case errc::unsupported_rank: return "UnsupportedRank";
        case errc::too_large: return "TooLarge";
        case errc::mutation_undefined: return "MutationUndefined";
        case errc::non_integral_result: return "NonIntegralResult";
        case errc::search_budget_exceeded: return "SearchBudgetExceeded";
        case errc::pipeline_search_failed: return "PipelineSearchFailed";
        case errc::potential_unavailable: return "PotentialUnavailable";
        case errc::consistency_violation: return "ConsistencyViolation";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::parse_error: return "ParseError";
    }
    return "Error";
}

}  // namespace mutkit
