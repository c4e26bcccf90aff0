#include "ssn/error.hpp"

namespace ssn {

const char* error_category_name(ErrorCategory c) {
    switch (c) {
        case ErrorCategory::Io: return "io";
        case ErrorCategory::Decode: return "decode";
        case ErrorCategory::Format: return "format";
        case ErrorCategory::Dataset: return "dataset";
        case ErrorCategory::Numeric: return "numeric";
        case ErrorCategory::Internal: return "internal";
    }
    return "internal";
}

} // namespace ssn
