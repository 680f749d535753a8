#ifndef ENTROBOUND_ERRORS_HPP
#define ENTROBOUND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entrobound {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Closed-form derivative requested too close to a point where it diverges.
class NearSingular : public std::runtime_error {
public:
    explicit NearSingular(const std::string& what) : std::runtime_error(what) {}
};

// A root/minimum solver failed to converge. Treated as an internal defect.
class ConvergenceFailure : public std::runtime_error {
public:
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

} // namespace entrobound

#endif
