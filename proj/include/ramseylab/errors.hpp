#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramseylab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed graph6 input; `offset` is the byte position of the defect.
struct DecodeError : Error {
    std::size_t offset;
    DecodeError(const std::string& msg, std::size_t off)
        : Error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

/// An EdgeSet was used with a graph that is not its host.
struct HostMismatchError : Error {
    using Error::Error;
};

/// Precondition violation on the input domain (empty graph, bad parameter, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Density-ordering precondition violated; message names the offending values.
struct OrderingError : Error {
    using Error::Error;
};

/// A construction is infeasible; `witness_edges` certifies why when nonempty.
struct InfeasibleError : Error {
    std::vector<int> witness_edges;
    InfeasibleError(const std::string& msg, std::vector<int> witness = {})
        : Error(msg), witness_edges(std::move(witness)) {}
};

/// An explicit resource refusal (node budget, edge budget, size cap).
struct BudgetError : Error {
    long long limit;
    BudgetError(const std::string& msg, long long lim) : Error(msg), limit(lim) {}
};

/// A core fixture failed one of its structural guarantees mid-walk.
struct CoreViolationError : Error {
    int edge;
    CoreViolationError(const std::string& msg, int e) : Error(msg), edge(e) {}
};

/// Internal self-check failed: indicates an implementation bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ramseylab
