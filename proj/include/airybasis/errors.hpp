#pragma once

#include <stdexcept>
#include <string>

namespace airybasis {

// Invalid argument or violated precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A discretization (grid, window, basis) is too coarse for the requested accuracy.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative scheme hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace airybasis
