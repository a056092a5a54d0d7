#include "kpath/error.hpp"

namespace kpath {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::adjacent_repeat: return "AdjacentRepeat";
    case Errc::too_many_colors: return "TooManyColors";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::out_of_validated_range: return "OutOfValidatedRange";
    case Errc::oracle_too_large: return "OracleTooLarge";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::not_kpath: return "NotKPath";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::bad_length: return "BadLength";
    case Errc::nonzero_padding: return "NonzeroPadding";
    case Errc::char_out_of_range: return "CharOutOfRange";
    case Errc::alpha_out_of_range: return "AlphaOutOfRange";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

} // namespace kpath
