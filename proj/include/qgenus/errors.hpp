#pragma once

#include <stdexcept>

namespace qgenus {

// Input violates the precondition of an operation (bad radicand, p = 5, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two independent computations of the same quantity disagree.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A bounded search ran past its configured limit.
class search_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qgenus
