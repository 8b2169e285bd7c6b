#ifndef HOPFCHECK_ERRORS_HPP
#define HOPFCHECK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfcheck {

// Base of every error thrown by the library. The CLI maps the subclasses
// onto exit codes (schema/usage -> 2, theorem violations -> 3).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class NotCosemisimple : public Error {
public:
    using Error::Error;
};

class SplittingFailed : public Error {
public:
    SplittingFailed(int order, const std::string& what)
        : Error("cyclotomic order " + std::to_string(order) +
                " does not split the algebra (" + what +
                "); raise the field order, e.g. via HOPFCHECK_FIELD_ORDER"),
          order_(order) {}
    int order() const { return order_; }

private:
    int order_;
};

class NotHopfIdeal : public Error {
public:
    using Error::Error;
};

class NotASubgroup : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class ContainmentViolated : public Error {
public:
    using Error::Error;
};

class InvarianceViolated : public Error {
public:
    using Error::Error;
};

class NotNormalInner : public Error {
public:
    using Error::Error;
};

class KNotInKernel : public Error {
public:
    using Error::Error;
};

class ActionInvalid : public Error {
public:
    using Error::Error;
};

// Raised when computations that the theory says must agree do not.
// Always an implementation bug or an input outside the cosemisimple regime.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

}  // namespace hopfcheck

#endif
