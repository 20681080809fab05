#ifndef CDT_ERRORS_HPP
#define CDT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cdt {

// Bad parameters, malformed files, violated preconditions.  CLI exit code 2.
struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// An internal structural guarantee did not hold.  CLI exit code 4.
struct claim_violation : std::logic_error {
    explicit claim_violation(const std::string& what) : std::logic_error(what) {}
};

} // namespace cdt

#endif
