#pragma once

#include <stdexcept>

namespace swapmc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct NonSimpleGraph : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadArity : Error { using Error::Error; };
struct InvalidDegreeSequence : Error { using Error::Error; };
struct InvalidTriangleSequence : Error { using Error::Error; };
struct NoDisjointEdge : Error { using Error::Error; };
struct CriterionUnsatisfied : Error { using Error::Error; };
struct FilterInapplicable : Error { using Error::Error; };
struct CensusTooLarge : Error { using Error::Error; };
struct SampleOutsideCensus : Error { using Error::Error; };
struct ClassMismatch : Error { using Error::Error; };

}  // namespace swapmc
