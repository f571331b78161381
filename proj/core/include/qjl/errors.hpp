#pragma once

#include <stdexcept>
#include <string>

namespace qjl {

// Every failure raised by the library derives from Error so the CLI can map
// the category onto an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define QJL_DEFINE_ERROR(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}   \
    }

QJL_DEFINE_ERROR(WeightError);
QJL_DEFINE_ERROR(OffsetError);
QJL_DEFINE_ERROR(NotUnitError);
QJL_DEFINE_ERROR(SqrtError);
QJL_DEFINE_ERROR(DomainError);
QJL_DEFINE_ERROR(ShiftError);
QJL_DEFINE_ERROR(PoleError);
QJL_DEFINE_ERROR(NotInAlgebraError);
QJL_DEFINE_ERROR(ModelError);
QJL_DEFINE_ERROR(DegenerateDivisorError);
QJL_DEFINE_ERROR(NormalizationError);
QJL_DEFINE_ERROR(RangeError);
QJL_DEFINE_ERROR(FitError);
QJL_DEFINE_ERROR(ParseError);

// Raised whenever a result would need more q-orders (or x-orders) than the
// inputs carry. The CLI maps this to its own exit code.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string &what) : Error("PrecisionError: " + what) {}
};

#undef QJL_DEFINE_ERROR

} // namespace qjl
