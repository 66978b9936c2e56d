#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace shinglesim {

/// Raised when an operation is called with arguments outside its domain
/// (k = 0, mismatched shingle lengths, out-of-range indices, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when text is not valid UTF-8.
class EncodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a document cannot be read or decoded. Carries the offending path.
class IngestError : public std::runtime_error {
public:
    IngestError(std::filesystem::path path, const std::string& what)
        : std::runtime_error(path.string() + ": " + what), path_(std::move(path)) {}

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

/// Raised when a report destination cannot be written.
class OutputError : public std::runtime_error {
public:
    OutputError(const std::filesystem::path& path, const std::string& what)
        : std::runtime_error(path.string() + ": " + what) {}
};

}  // namespace shinglesim
