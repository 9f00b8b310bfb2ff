#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiweyl {

enum class errc {
    eval_at_zero_of_laurent,
    negative_exponent,
    zero_input,
    division_by_zero,
    context_mismatch,
    arity_mismatch,
    index_out_of_range,
    not_in_a_hat,
    internal_non_divisible,
    not_validated,
    kind_mismatch,
    path_disagreement,
    degree_cap_exceeded,
    syntax_error,
    unknown_variable,
    param_in_poisson_context,
    overflow,
    malformed_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::eval_at_zero_of_laurent: return "EvalAtZeroOfLaurent";
        case errc::negative_exponent: return "NegativeExponent";
        case errc::zero_input: return "ZeroInput";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::context_mismatch: return "ContextMismatch";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::not_in_a_hat: return "NotInAHat";
        case errc::internal_non_divisible: return "InternalNonDivisible";
        case errc::not_validated: return "NotValidated";
        case errc::kind_mismatch: return "KindMismatch";
        case errc::path_disagreement: return "PathDisagreement";
        case errc::degree_cap_exceeded: return "DegreeCapExceeded";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_variable: return "UnknownVariable";
        case errc::param_in_poisson_context: return "ParamInPoissonContext";
        case errc::overflow: return "Overflow";
        case errc::malformed_input: return "MalformedInput";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    error(errc code, std::string message, std::size_t position = npos)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          position_(position) {}

    errc code() const noexcept { return code_; }
    bool has_position() const noexcept { return position_ != npos; }
    std::size_t position() const noexcept { return position_; }

private:
    errc code_;
    std::size_t position_;
};

[[noreturn]] inline void fail(errc code, std::string message,
                              std::size_t position = error::npos) {
    throw error(code, std::move(message), position);
}

}  // namespace semiweyl
