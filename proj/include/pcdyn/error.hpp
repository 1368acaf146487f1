#pragma once

#include <stdexcept>
#include <string>

namespace pcdyn {

// Error categories; values double as C API / CLI exit codes.
enum class Errc {
    Internal = 1,
    Validation = 2,
    Domain = 3,
    Invariant = 4,
    Numeric = 5,
    Parse = 6,
    Io = 7,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void throw_validation(const std::string& msg) { throw Error(Errc::Validation, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(Errc::Domain, msg); }
[[noreturn]] inline void throw_invariant(const std::string& msg) { throw Error(Errc::Invariant, msg); }
[[noreturn]] inline void throw_numeric(const std::string& msg) { throw Error(Errc::Numeric, msg); }
[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(Errc::Parse, msg); }
[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(Errc::Io, msg); }

}  // namespace pcdyn
