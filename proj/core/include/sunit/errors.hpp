// Exception types thrown across the library. All of them derive from
// sunit::Error so callers can catch the whole family at once.
#pragma once

#include <stdexcept>
#include <string>

namespace sunit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- ring / arithmetic ----
struct DenominatorNotSOnly : Error { using Error::Error; };
struct PrimeSetMismatch    : Error { using Error::Error; };
struct ModuliNotCoprime    : Error { using Error::Error; };
struct NotAPrime           : Error { using Error::Error; };

// ---- graphs ----
struct InvalidOrder        : Error { using Error::Error; };
struct InvalidEdge         : Error { using Error::Error; };

// ---- point sets ----
struct DuplicatePoints     : Error { using Error::Error; };
struct EmptySet            : Error { using Error::Error; };
struct PointsNotIntegral   : Error { using Error::Error; };

// ---- synthesis ----
struct NotAForest          : Error { using Error::Error; };
struct NotConnected        : Error { using Error::Error; };
struct NoCycle             : Error { using Error::Error; };
struct PTooSmall           : Error { using Error::Error; };
struct DimensionTooLarge   : Error { using Error::Error; };
struct LabelNotPowerOfP    : Error { using Error::Error; };
struct CoefficientOverflow : Error { using Error::Error; };
struct SearchBudgetExceeded: Error { using Error::Error; };
struct VerificationFailed  : Error { using Error::Error; };

// ---- diophantine ----
struct ArityUnsupported      : Error { using Error::Error; };
struct LabelsDoNotSumToZero  : Error { using Error::Error; };
struct TooLong               : Error { using Error::Error; };
struct UnknownBound          : Error { using Error::Error; };
struct BadParameters         : Error { using Error::Error; };

} // namespace sunit
