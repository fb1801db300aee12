#pragma once

#include <stdexcept>
#include <string>

namespace chow {

enum class Errc {
    parse_error,
    space_mismatch,
    not_multihomogeneous,
    zero_input,
    invalid_argument,
    missing_input,
    dimension_mismatch,
    instance_too_large,
    deadline_exceeded,
    not_principal,
    unstable_count,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

// Raised when a Deadline budget is exhausted. Carries the partial progress
// statistics of the interrupted run.
class DeadlineError : public Error {
public:
    DeadlineError(std::string message, long pairs_processed, int max_degree_seen)
        : Error(Errc::deadline_exceeded, std::move(message)),
          pairs_processed(pairs_processed),
          max_degree_seen(max_degree_seen) {}

    long pairs_processed = 0;
    int max_degree_seen = 0;
};

class NotPrincipalError : public Error {
public:
    NotPrincipalError(std::string message, int basis_size)
        : Error(Errc::not_principal, std::move(message)), basis_size(basis_size) {}

    int basis_size = 0;
};

} // namespace chow
