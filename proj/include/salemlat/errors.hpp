#pragma once

#include <stdexcept>
#include <string>

namespace salemlat {

// Base class for every library error.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input shape / validation
struct ShapeError : error { using error::error; };
struct RankError : error { using error::error; };
struct DegenerateInput : error { using error::error; };
struct SingularFormError : error { using error::error; };
struct ZeroConstantTerm : error { using error::error; };
struct NotReciprocal : error { using error::error; };
struct NotSymmetric : error { using error::error; };
struct NotPrime : error { using error::error; };
struct DimensionTooSmall : error { using error::error; };
struct ZeroArgument : error { using error::error; };
struct ZeroElement : error { using error::error; };
struct SingularElement : error { using error::error; };
struct ParseError : error { using error::error; };
struct AdmissibilityError : error { using error::error; };

// Search / construction failures
struct SearchExhausted : error { using error::error; };
struct UnsatisfiableLocalCondition : error { using error::error; };
struct DetSignError : error { using error::error; };
struct NotIntegralCharPoly : error { using error::error; };
struct NotIsometry : error { using error::error; };
struct NoHyperbolicEigenvalue : error { using error::error; };
struct MultipleOffCircleFactors : error { using error::error; };

// Raised by certify when a named condition fails; never emitted silently.
struct CheckFailed : error {
    std::string check;
    explicit CheckFailed(const std::string& name, const std::string& detail = "")
        : error("check failed: " + name + (detail.empty() ? "" : " (" + detail + ")")), check(name) {}
};

} // namespace salemlat
