// Exception types thrown by semiconv.
//
// Every error derives from semiconv::Error so callers can catch the whole
// family at once; the concrete type names the failure.

#ifndef SEMICONV_ERROR_HPP_
#define SEMICONV_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semiconv {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define SEMICONV_DEFINE_ERROR(Name)               \
  class Name : public Error {                     \
   public:                                        \
    explicit Name(std::string const& what)        \
        : Error(std::string(#Name) + ": " + what) {} \
  };

  // Input problems.
  SEMICONV_DEFINE_ERROR(MalformedTable)
  SEMICONV_DEFINE_ERROR(DuplicateLabel)
  SEMICONV_DEFINE_ERROR(UnknownLabel)
  SEMICONV_DEFINE_ERROR(OrderCapExceeded)
  SEMICONV_DEFINE_ERROR(IoError)
  SEMICONV_DEFINE_ERROR(ParseError)
  SEMICONV_DEFINE_ERROR(InvalidDist)
  SEMICONV_DEFINE_ERROR(ParameterOutOfRange)
  SEMICONV_DEFINE_ERROR(EmptySupport)

  // Structural preconditions.
  SEMICONV_DEFINE_ERROR(MismatchedParent)
  SEMICONV_DEFINE_ERROR(EmptyGenerators)
  SEMICONV_DEFINE_ERROR(EmptySet)
  SEMICONV_DEFINE_ERROR(NotASubsemigroup)
  SEMICONV_DEFINE_ERROR(NotIdempotent)
  SEMICONV_DEFINE_ERROR(NotSimple)
  SEMICONV_DEFINE_ERROR(NotPrimitive)
  SEMICONV_DEFINE_ERROR(NotInFactor)
  SEMICONV_DEFINE_ERROR(InvalidSandwichEntry)
  SEMICONV_DEFINE_ERROR(SupportOutsideDecomposition)
  SEMICONV_DEFINE_ERROR(PreconditionViolated)
  SEMICONV_DEFINE_ERROR(HypothesisViolated)

  // Internal consistency failures; these indicate a bug, not bad data.
  SEMICONV_DEFINE_ERROR(VerificationFailed)
  SEMICONV_DEFINE_ERROR(TheoremViolation)
  SEMICONV_DEFINE_ERROR(SingularDecomposition)

  SEMICONV_DEFINE_ERROR(Cancelled)

#undef SEMICONV_DEFINE_ERROR

  // Raised when a table entry is outside [0, n).
  class IndexOutOfRange : public Error {
   public:
    IndexOutOfRange(std::size_t row, std::size_t col, long long value)
        : Error("IndexOutOfRange: table[" + std::to_string(row) + "]["
                + std::to_string(col) + "] = " + std::to_string(value)),
          row(row),
          col(col),
          value(value) {}
    std::size_t row;
    std::size_t col;
    long long   value;
  };

  // First triple (a, b, c), lexicographically, with (ab)c != a(bc).
  class NonAssociative : public Error {
   public:
    NonAssociative(std::size_t a,
                   std::size_t b,
                   std::size_t c,
                   std::string const& labels)
        : Error("NonAssociative: " + labels), a(a), b(b), c(c) {}
    std::size_t a;
    std::size_t b;
    std::size_t c;
  };

  // Carries the element that prevents the set from being a group.
  class NotAGroup : public Error {
   public:
    NotAGroup(std::size_t witness, std::string const& what)
        : Error("NotAGroup: " + what), witness(witness) {}
    std::size_t witness;
  };

}  // namespace semiconv

#endif  // SEMICONV_ERROR_HPP_
