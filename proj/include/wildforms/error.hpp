#ifndef WILDFORMS_ERROR_HPP
#define WILDFORMS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wildforms {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define WILDFORMS_DEFINE_ERROR(Name)                      \
  struct Name : Error {                                   \
    explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
  }

WILDFORMS_DEFINE_ERROR(SyntaxError);
WILDFORMS_DEFINE_ERROR(UnknownVariable);
WILDFORMS_DEFINE_ERROR(RingMismatch);
WILDFORMS_DEFINE_ERROR(DegreeTooSmall);
WILDFORMS_DEFINE_ERROR(KOutOfRange);
WILDFORMS_DEFINE_ERROR(DimensionDrop);
WILDFORMS_DEFINE_ERROR(DuplicatePoint);
WILDFORMS_DEFINE_ERROR(NotAnIdeal);
WILDFORMS_DEFINE_ERROR(WitnessDegenerate);
WILDFORMS_DEFINE_ERROR(NotNormalized);
WILDFORMS_DEFINE_ERROR(RelationNotSatisfied);
WILDFORMS_DEFINE_ERROR(ZeroLambda);
WILDFORMS_DEFINE_ERROR(PointCollision);
WILDFORMS_DEFINE_ERROR(BadIndex);
WILDFORMS_DEFINE_ERROR(BadPair);
WILDFORMS_DEFINE_ERROR(BadQ);
WILDFORMS_DEFINE_ERROR(UnknownName);
WILDFORMS_DEFINE_ERROR(CertificateInvalid);
WILDFORMS_DEFINE_ERROR(FormatError);

#undef WILDFORMS_DEFINE_ERROR

struct IdentityFailure : Error {
  std::string report;
  IdentityFailure(const std::string& msg, std::string rep)
      : Error("IdentityFailure: " + msg), report(std::move(rep)) {}
};

}  // namespace wildforms

#endif
