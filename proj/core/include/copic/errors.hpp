#ifndef COPIC_ERRORS_HPP
#define COPIC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace copic {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad index, invalid construction parameter, illegal
/// arithmetic (e.g. negating the infinity sentinel).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A family enumeration would exceed the configured cap.
class EnumerationCapError : public Error {
public:
    EnumerationCapError(const std::string& what, std::size_t cap)
        : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

/// The requested operation does not support the given family or cost shape.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// A solver precondition does not hold for the given instance.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The instance admits no feasible solution (empty family, missing s-t path,
/// infeasible flow, ...).
class NoSolutionError : public Error {
public:
    using Error::Error;
};

/// A negative-cost cycle was found where none is allowed. Carries a witness.
class NegativeCycleError : public Error {
public:
    NegativeCycleError(const std::string& what, std::vector<int> cycle_edges)
        : Error(what), cycle_(std::move(cycle_edges)) {}
    const std::vector<int>& witness_cycle() const { return cycle_; }

private:
    std::vector<int> cycle_;
};

/// Work bound exceeded (candidate explosion, oversized linear system, ...).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied component broke its contract (e.g. an approximate
/// oracle handed weights outside its advertised domain).
class ContractViolationError : public Error {
public:
    using Error::Error;
};

} // namespace copic

#endif // COPIC_ERRORS_HPP
