#ifndef LUCASBT_ERRORS_HPP
#define LUCASBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lucasbt {

// A computation produced two values that are required to agree but do not.
// Thrown by internal cross-checks; seeing one means a bug, not bad input.
class InternalInconsistencyError : public std::logic_error {
public:
    explicit InternalInconsistencyError(const std::string& what)
        : std::logic_error(what) {}
};

// A closed-form expression was asked to divide by a quantity that is zero
// for the given parameters.
class DegenerateDenominatorError : public std::domain_error {
public:
    explicit DegenerateDenominatorError(const std::string& what)
        : std::domain_error(what) {}
};

} // namespace lucasbt

#endif
