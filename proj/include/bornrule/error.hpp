#pragma once

#include <stdexcept>
#include <string>

namespace bornrule {

/// Base for every precondition violation raised by the library.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidDimension : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class InfeasiblePartition : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

}  // namespace bornrule
