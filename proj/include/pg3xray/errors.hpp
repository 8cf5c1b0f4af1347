#ifndef PG3XRAY_ERRORS_HPP
#define PG3XRAY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pg3xray {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PG3XRAY_DEFINE_ERROR(Name)                        \
    struct Name : Error {                                 \
        using Error::Error;                               \
        Name() : Error(#Name) {}                          \
    }

PG3XRAY_DEFINE_ERROR(NotPrime);
PG3XRAY_DEFINE_ERROR(DegreeZero);
PG3XRAY_DEFINE_ERROR(DivisionByZero);
PG3XRAY_DEFINE_ERROR(FieldMismatch);
PG3XRAY_DEFINE_ERROR(BudgetExceeded);
PG3XRAY_DEFINE_ERROR(GeometryMismatch);
PG3XRAY_DEFINE_ERROR(UniformityViolation);
PG3XRAY_DEFINE_ERROR(LengthMismatch);
PG3XRAY_DEFINE_ERROR(NotSquare);
PG3XRAY_DEFINE_ERROR(NotSkew);
PG3XRAY_DEFINE_ERROR(InvalidTriad);
PG3XRAY_DEFINE_ERROR(NoQuadric);
PG3XRAY_DEFINE_ERROR(IncompleteEnumeration);
PG3XRAY_DEFINE_ERROR(NotIdempotent);
PG3XRAY_DEFINE_ERROR(RankMismatch);
PG3XRAY_DEFINE_ERROR(WrongSize);
PG3XRAY_DEFINE_ERROR(NotAdmissible);
PG3XRAY_DEFINE_ERROR(InconsistentData);

#undef PG3XRAY_DEFINE_ERROR

} // namespace pg3xray

#endif
