#pragma once

#include <stdexcept>
#include <string>

namespace crl {

// Every error raised by the library derives from Error so callers can catch
// the whole family; the concrete type names the violated contract.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define CRL_DEFINE_ERROR(Name)          \
  struct Name : Error {                 \
    using Error::Error;                 \
  }

CRL_DEFINE_ERROR(DivisionByZero);
CRL_DEFINE_ERROR(ZeroFunction);
CRL_DEFINE_ERROR(PoleAtPoint);
CRL_DEFINE_ERROR(ParseError);
CRL_DEFINE_ERROR(NotAdmissible);
CRL_DEFINE_ERROR(WeightMismatch);
CRL_DEFINE_ERROR(NotSymmetric);
CRL_DEFINE_ERROR(BadPattern);
CRL_DEFINE_ERROR(GenericityFailure);
CRL_DEFINE_ERROR(SingularSystem);
CRL_DEFINE_ERROR(NonExactDivision);
CRL_DEFINE_ERROR(NoRepresentation);
CRL_DEFINE_ERROR(NeitherStructure);
CRL_DEFINE_ERROR(ProportionalityFailure);
CRL_DEFINE_ERROR(RankMismatch);

#undef CRL_DEFINE_ERROR

}  // namespace crl
