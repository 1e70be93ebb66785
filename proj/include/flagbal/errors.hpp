#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace flagbal {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition (bad sizes, r < k, unknown vertex).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed textual input (graph files, level strings).
class ParseError : public Error {
public:
    using Error::Error;
};

// A closure or clique enumeration would exceed the configured face cap.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

// Something the theory guarantees did not hold. Always an implementation bug.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;
inline constexpr const char* kGuardEnvVar = "FLAGBAL_GUARD";

// Face/clique cap: FLAGBAL_GUARD if set to a positive integer, else 10^7.
inline std::uint64_t default_guard() {
    const char* raw = std::getenv(kGuardEnvVar);
    if (raw == nullptr || *raw == '\0') return kDefaultGuard;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0) return kDefaultGuard;
    return static_cast<std::uint64_t>(value);
}

namespace detail {

[[noreturn]] inline void invariant_failed(const std::string& what) {
    throw InvariantViolation("internal invariant violated: " + what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

inline void ensure(bool ok, const std::string& what) {
    if (!ok) invariant_failed(what);
}

}  // namespace detail
}  // namespace flagbal
