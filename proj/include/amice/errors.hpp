#pragma once

#include <stdexcept>
#include <string>

namespace amice {

/// Base class of all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input outside an operation's domain (carrier mismatch, wrong basis, bad argument).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

/// A stated precondition does not hold (e.g. an inclusion that is not even bounded).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

/// Not enough stored data to produce the requested exact result.
struct insufficient_data_error : error {
    explicit insufficient_data_error(const std::string& msg) : error(msg) {}
};

/// A p-adic computation ran out of certified digits.
struct precision_error : error {
    explicit precision_error(const std::string& msg) : error(msg) {}
};

/// A tail certificate is too weak to justify the requested computation.
struct certificate_error : error {
    explicit certificate_error(const std::string& msg) : error(msg) {}
};

/// Malformed serialized input (JSON schema violations, unparsable numbers).
struct schema_error : error {
    explicit schema_error(const std::string& msg) : error(msg) {}
};

} // namespace amice
