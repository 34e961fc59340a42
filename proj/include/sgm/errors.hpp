#pragma once

#include <stdexcept>
#include <string>

namespace sgm {

// Every error raised by the library derives from Error so callers can catch
// the whole family at once.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SGM_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                 \
    public:                                                     \
        explicit Name(const std::string& what) : Error(what) {} \
    }

SGM_DEFINE_ERROR(ParseError);
SGM_DEFINE_ERROR(DivisionByZero);
SGM_DEFINE_ERROR(NonDyadicDivision);
SGM_DEFINE_ERROR(ZeroPivot);
SGM_DEFINE_ERROR(DomainMismatch);
SGM_DEFINE_ERROR(UnknownElement);
SGM_DEFINE_ERROR(GroundsetMismatch);
SGM_DEFINE_ERROR(CandidateBoundExceeded);
SGM_DEFINE_ERROR(TooManyNonzeros);
SGM_DEFINE_ERROR(InvalidSplit);
SGM_DEFINE_ERROR(LabelMismatch);
SGM_DEFINE_ERROR(InvalidForest);
SGM_DEFINE_ERROR(ZeroTarget);
SGM_DEFINE_ERROR(UnreachableTarget);
SGM_DEFINE_ERROR(SupportMismatch);

#undef SGM_DEFINE_ERROR

}  // namespace sgm
