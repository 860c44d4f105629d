#pragma once
#include <stdexcept>
#include <string>

namespace gup {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define GUP_ERROR(Name)                                 \
  struct Name : Error {                                 \
    explicit Name(const std::string& what) : Error(what) {} \
  };

GUP_ERROR(UnsupportedPair)
GUP_ERROR(IntrinsicNoncommutativity)
GUP_ERROR(DomainMismatch)
GUP_ERROR(DomainError)
GUP_ERROR(SingularCoefficient)
GUP_ERROR(NonMonotoneMap)
GUP_ERROR(BranchAmbiguity)
GUP_ERROR(UnsupportedOrder)
GUP_ERROR(ParameterError)
GUP_ERROR(ConvergenceFailure)
GUP_ERROR(NonIntegrable)
GUP_ERROR(NoRoot)

#undef GUP_ERROR

}  // namespace gup
