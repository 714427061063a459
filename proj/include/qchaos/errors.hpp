#pragma once

#include <stdexcept>
#include <string>

namespace qchaos {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonUnitaryInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct KindMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FamilyTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptySample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooFewMatrices : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace qchaos
