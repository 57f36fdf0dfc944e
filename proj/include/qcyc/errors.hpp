#pragma once

#include <stdexcept>
#include <string>

namespace qcyc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept = 0;
};

#define QCYC_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(what) {}       \
    const char* kind() const noexcept override { return #Name; }  \
  }

QCYC_DEFINE_ERROR(RankOutOfRange);
QCYC_DEFINE_ERROR(InvalidNode);
QCYC_DEFINE_ERROR(NotReduced);
QCYC_DEFINE_ERROR(WordInvalid);
QCYC_DEFINE_ERROR(LengthPreconditionViolated);
QCYC_DEFINE_ERROR(CanonicalDecompositionFailed);
QCYC_DEFINE_ERROR(NegativeMultiplicity);
QCYC_DEFINE_ERROR(InconsistentRelations);
QCYC_DEFINE_ERROR(UnknownParameter);
QCYC_DEFINE_ERROR(ConstantRequired);
QCYC_DEFINE_ERROR(EntryMissing);
QCYC_DEFINE_ERROR(ParseError);
QCYC_DEFINE_ERROR(NonExactDivision);

#undef QCYC_DEFINE_ERROR

}  // namespace qcyc
