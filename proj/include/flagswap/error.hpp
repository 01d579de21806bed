#ifndef FLAGSWAP_ERROR_HPP
#define FLAGSWAP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagswap {

enum class ErrorKind {
    Parse,
    DimensionMismatch,
    NotUnitriangular,
    SingularMatrix,
    NotInBigCell,
    NonGeneric,
    IndexOutOfRange,
    InvalidParity,
    NotInIn,
    ResourceBound,
};

/// snake_case name used in JSON reports and CLI diagnostics.
constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "parse_error";
    case ErrorKind::DimensionMismatch: return "dimension_mismatch";
    case ErrorKind::NotUnitriangular: return "not_unitriangular";
    case ErrorKind::SingularMatrix: return "singular_matrix";
    case ErrorKind::NotInBigCell: return "not_in_big_cell";
    case ErrorKind::NonGeneric: return "non_generic";
    case ErrorKind::IndexOutOfRange: return "index_out_of_range";
    case ErrorKind::InvalidParity: return "invalid_parity";
    case ErrorKind::NotInIn: return "not_in_In";
    case ErrorKind::ResourceBound: return "resource_bound";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace flagswap

#endif // FLAGSWAP_ERROR_HPP
