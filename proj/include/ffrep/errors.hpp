#ifndef FFREP_ERRORS_HPP
#define FFREP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffrep {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define FFREP_DEFINE_ERROR(Name)                                     \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

FFREP_DEFINE_ERROR(FieldMismatch);
FFREP_DEFINE_ERROR(DivisionByZero);
FFREP_DEFINE_ERROR(ZeroSubspace);
FFREP_DEFINE_ERROR(InvalidPresentation);
FFREP_DEFINE_ERROR(StabilizationFailure);
FFREP_DEFINE_ERROR(ConductorNotCleared);
FFREP_DEFINE_ERROR(NotProper);
FFREP_DEFINE_ERROR(PatternMismatch);
FFREP_DEFINE_ERROR(CertificateFailure);
FFREP_DEFINE_ERROR(FPurityFailure);
FFREP_DEFINE_ERROR(BaseNotCertified);
FFREP_DEFINE_ERROR(UnsupportedCharacteristic);
FFREP_DEFINE_ERROR(ParseError);

#undef FFREP_DEFINE_ERROR

}  // namespace ffrep

#endif
