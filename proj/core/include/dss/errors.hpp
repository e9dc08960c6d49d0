#pragma once

#include <stdexcept>
#include <string>

namespace dss {

// Thrown when an operation that is only defined on the full-NPT region
// receives a state for which at least one NPT inequality fails. The index
// of the first failing inequality (1-based, k = 1..N-1) is preserved so
// callers can report which condition broke.
class NotFullNptError : public std::domain_error {
public:
    NotFullNptError(int condition_index, const std::string& what)
        : std::domain_error(what), condition_index_(condition_index) {}

    int condition_index() const noexcept { return condition_index_; }

private:
    int condition_index_;
};

// Thrown when a state is not full rank (some p_k = 0) but full rank is
// required.
class RankDeficientError : public std::domain_error {
public:
    RankDeficientError(int index, const std::string& what)
        : std::domain_error(what), index_(index) {}

    int index() const noexcept { return index_; }

private:
    int index_;
};

// Thrown when two quantities that must agree (e.g. a negative-eigenvalue
// count and an inequality count) disagree beyond tolerance. Signals a
// numerical failure, never silently ignored.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace dss
