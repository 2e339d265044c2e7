#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lensinv {

enum class ErrorKind {
    not_coprime,
    even_modulus,
    even_input,
    even_order,
    order_one,
    division_by_zero,
    not_in_subfield,
    not_invertible,
    integrality_failure,
    non_positive_p,
    modulus_mismatch,
    order_too_large,
    invalid_argument,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::not_coprime: return "NotCoprime";
    case ErrorKind::even_modulus: return "EvenModulus";
    case ErrorKind::even_input: return "EvenInput";
    case ErrorKind::even_order: return "EvenOrder";
    case ErrorKind::order_one: return "OrderOne";
    case ErrorKind::division_by_zero: return "DivisionByZero";
    case ErrorKind::not_in_subfield: return "NotInSubfield";
    case ErrorKind::not_invertible: return "NotInvertible";
    case ErrorKind::integrality_failure: return "IntegralityFailure";
    case ErrorKind::non_positive_p: return "NonPositiveP";
    case ErrorKind::modulus_mismatch: return "ModulusMismatch";
    case ErrorKind::order_too_large: return "OrderTooLarge";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace lensinv
