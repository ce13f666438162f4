#ifndef POLYA_ERRORS_HPP
#define POLYA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polya {

// Malformed input: bad polynomial/permutation syntax, invalid JSON job
// documents, schema violations.  The CLI maps this to exit code 1.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured size cap or enumeration budget would be exceeded.  The CLI
// maps this to exit code 2.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace polya

#endif
