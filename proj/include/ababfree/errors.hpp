#ifndef ABABFREE_ERRORS_HPP
#define ABABFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abab {

/**
 * Error taxonomy used across the library.
 *
 *  - Parse:      malformed input (JSON, rationals, half-integer parameters).
 *  - Invalid:    structurally invalid arguments (bad indices, broken invariants).
 *  - Guard:      a documented size guard was exceeded (oracles are desk-scale).
 *  - Degenerate: geometric degeneracy the operation refuses to resolve
 *                (point on two intersecting curves, coincident stab point, ...).
 *  - NotFree:    a freeness precondition was falsified at run time; the message
 *                doubles as the falsification certificate.
 */
enum class ErrorKind { Parse, Invalid, Guard, Degenerate, NotFree };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace abab

#endif
