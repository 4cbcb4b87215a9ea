#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruzsakit {

// Base of every error raised by the library. `kind()` is the stable name that
// ends up in CLI diagnostics.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual std::string_view kind() const noexcept = 0;
};

#define RUZSAKIT_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                                  \
    public:                                                                      \
        using Error::Error;                                                      \
        std::string_view kind() const noexcept override { return #Name; }        \
    }

// Malformed input: bad JSON shape, invalid rational, duplicate support, ...
RUZSAKIT_DEFINE_ERROR(SchemaError);
// An element is outside the domain of a map.
RUZSAKIT_DEFINE_ERROR(DomainError);
// k is not a multiple of every reduced denominator.
RUZSAKIT_DEFINE_ERROR(SuitabilityError);
// An explicit enumeration would exceed the configured limit.
RUZSAKIT_DEFINE_ERROR(SizeGuardError);
// A vector is not in the Ruzsa set it was claimed to belong to.
RUZSAKIT_DEFINE_ERROR(MembershipError);
RUZSAKIT_DEFINE_ERROR(ApproximationError);
// Coordinate index outside [n], or empty where a nonempty index set is needed.
RUZSAKIT_DEFINE_ERROR(IndexError);
RUZSAKIT_DEFINE_ERROR(EmptySliceError);
RUZSAKIT_DEFINE_ERROR(InfeasibleError);
RUZSAKIT_DEFINE_ERROR(CoverError);
RUZSAKIT_DEFINE_ERROR(NegativeCoefficientError);

#undef RUZSAKIT_DEFINE_ERROR

}  // namespace ruzsakit
