#pragma once

#include <stdexcept>
#include <string>

namespace qst {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: constraint violations, dimension problems, unsupported requests.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A numerical procedure did not reach the requested accuracy.
class NumericalError : public Error {
public:
    using Error::Error;
};

#define QST_DEFINE_ERROR(Name, Base)            \
    class Name : public Base {                  \
    public:                                     \
        explicit Name(const std::string& what)  \
            : Base(#Name ": " + what) {}        \
    };

QST_DEFINE_ERROR(ConstraintViolation, ValidationError)
QST_DEFINE_ERROR(InvalidTransform, ValidationError)
QST_DEFINE_ERROR(DimensionTooSmall, ValidationError)
QST_DEFINE_ERROR(DimensionMismatch, ValidationError)
QST_DEFINE_ERROR(IndexOutOfRange, ValidationError)
QST_DEFINE_ERROR(BruteForceTooLarge, ValidationError)
QST_DEFINE_ERROR(NotFactorizable, ValidationError)
QST_DEFINE_ERROR(UnsupportedTransform, ValidationError)
QST_DEFINE_ERROR(KernelConstraintViolated, ValidationError)
QST_DEFINE_ERROR(DegenerateGround, NumericalError)
QST_DEFINE_ERROR(QuadratureUnderResolved, NumericalError)

#undef QST_DEFINE_ERROR

}  // namespace qst
