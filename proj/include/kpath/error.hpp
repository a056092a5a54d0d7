#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpath {

enum class Errc {
    adjacent_repeat,
    too_many_colors,
    not_normalized,
    invalid_order,
    out_of_validated_range,
    oracle_too_large,
    length_mismatch,
    not_kpath,
    order_too_large,
    malformed_header,
    bad_length,
    nonzero_padding,
    char_out_of_range,
    alpha_out_of_range,
    no_convergence,
    budget_exceeded,
    io_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Library error carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kpath
