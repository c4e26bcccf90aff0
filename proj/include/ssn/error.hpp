#pragma once

#include <stdexcept>
#include <string>

namespace ssn {

// Error categories map to CLI exit codes and the machine-readable
// category string printed on stderr.
enum class ErrorCategory {
    Io,        // unreadable file, missing directory
    Decode,    // image decode failure
    Format,    // bad manifest/config/argument format
    Dataset,   // dataset structure violations (empty class, duplicates...)
    Numeric,   // singular scatter, degenerate inputs
    Internal,
};

const char* error_category_name(ErrorCategory c);

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

} // namespace ssn
