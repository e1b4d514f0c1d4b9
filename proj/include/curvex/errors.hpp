#ifndef CURVEX_ERRORS_HPP
#define CURVEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace curvex {

/// Base class for all domain errors raised by the library.  `code()` is a
/// stable machine-readable identifier; `what()` carries human-oriented detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CURVEX_DEFINE_ERROR(NAME)                                     \
    class NAME : public Error {                                       \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : Error(#NAME, message) {}                                \
    }

// surface_model
CURVEX_DEFINE_ERROR(UnsupportedSignature);
CURVEX_DEFINE_ERROR(NonIntegerGenus);
CURVEX_DEFINE_ERROR(InvalidTriangulation);
CURVEX_DEFINE_ERROR(InvalidCoordinates);

// multicurve
CURVEX_DEFINE_ERROR(ParityViolation);
CURVEX_DEFINE_ERROR(TriangleInequalityViolation);
CURVEX_DEFINE_ERROR(BoundaryWeightNonzero);
CURVEX_DEFINE_ERROR(MultipleComponents);
CURVEX_DEFINE_ERROR(NonGenericComponent);
CURVEX_DEFINE_ERROR(IsotopicPair);
CURVEX_DEFINE_ERROR(SurfaceMismatch);

// curve_ops
CURVEX_DEFINE_ERROR(NonGenericTwistCurve);
CURVEX_DEFINE_ERROR(NoTransversal);
CURVEX_DEFINE_ERROR(NotDisjoint);
CURVEX_DEFINE_ERROR(StepBudgetExceeded);

// orbit_enum
CURVEX_DEFINE_ERROR(NoPantalonDecomposition);

// stabilizers_actions
CURVEX_DEFINE_ERROR(FacePrecondition);
CURVEX_DEFINE_ERROR(EqualClasses);
CURVEX_DEFINE_ERROR(NoChain);

// cli / io
CURVEX_DEFINE_ERROR(DocumentError);

#undef CURVEX_DEFINE_ERROR

/// Raised on broken internal invariants (bugs, not user input).
class InternalError : public Error {
public:
    explicit InternalError(const std::string& message)
        : Error("InternalError", message) {}
};

}  // namespace curvex

#endif
