#pragma once

#include <stdexcept>
#include <string>

namespace hforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HFORGE_ERROR(Name) \
    struct Name : Error {  \
        using Error::Error; \
    }

HFORGE_ERROR(NotAPrimePower);
HFORGE_ERROR(TableTooLarge);
HFORGE_ERROR(DivisionByZero);
HFORGE_ERROR(LogOfZero);
HFORGE_ERROR(BadModulus);
HFORGE_ERROR(IndexOutOfRange);
HFORGE_ERROR(NonIntegerCount);
HFORGE_ERROR(NoRepresentation);
HFORGE_ERROR(FitFailure);
HFORGE_ERROR(NotAdmissible);
HFORGE_ERROR(ConditionConflict);
HFORGE_ERROR(ContextMismatch);
HFORGE_ERROR(SpecViolation);
HFORGE_ERROR(OrderMismatch);
HFORGE_ERROR(ParamMismatch);
HFORGE_ERROR(CalibrationExhausted);
HFORGE_ERROR(BoundTooLarge);
HFORGE_ERROR(ParseError);

#undef HFORGE_ERROR

} // namespace hforge
