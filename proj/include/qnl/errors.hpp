#pragma once

#include <stdexcept>
#include <string>

namespace qnl {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (files, GF(4) strings, bit strings).
class FormatError : public Error {
   public:
    using Error::Error;
};

/// Operands whose qubit counts or lengths disagree.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// A documented precondition (mask order, validity, structure) does not hold.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// The instance exceeds a size limit of an exhaustive routine.
class LimitError : public Error {
   public:
    using Error::Error;
};

/// An operation was requested in a mode the input does not support.
class ModeError : public Error {
   public:
    using Error::Error;
};

/// B-form reduction could not find a pivot.
class ReductionError : public Error {
   public:
    ReductionError(const std::string& what, std::size_t column) : Error(what), column_(column) {}
    std::size_t column() const { return column_; }

   private:
    std::size_t column_;
};

/// A search ran out of its budget before finishing.
class BudgetError : public Error {
   public:
    BudgetError(const std::string& what, long long best_bound) : Error(what), best_bound_(best_bound) {}
    long long best_bound() const { return best_bound_; }

   private:
    long long best_bound_;
};

}  // namespace qnl
