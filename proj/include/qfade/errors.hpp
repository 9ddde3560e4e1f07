#pragma once

#include <stdexcept>
#include <string>

namespace qfade {

/// Base class for every error raised by this library. Subtypes are thin:
/// they exist so callers can catch a specific failure without parsing text.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// simulator
struct QubitCountOutOfRange : Error { using Error::Error; };
struct QubitIndexOutOfRange : Error { using Error::Error; };
struct QubitCountMismatch : Error { using Error::Error; };

// encoding
struct DegenerateBounds : Error { using Error::Error; };
struct FeatureOutOfRange : Error { using Error::Error; };

// ansatz / model
struct ParamLengthMismatch : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct SchemaVersionUnsupported : Error { using Error::Error; };
struct MalformedModelFile : Error { using Error::Error; };

// dataset
struct MalformedCsv : Error { using Error::Error; };
struct DuplicateCycle : Error { using Error::Error; };
struct NonPositiveCapacity : Error { using Error::Error; };
struct TooFewRecords : Error { using Error::Error; };
struct DegenerateSplit : Error { using Error::Error; };
struct NonPositiveRated : Error { using Error::Error; };

// metrics
struct LengthMismatch : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct ZeroReference : Error { using Error::Error; };

// training
struct EmptyDataset : Error { using Error::Error; };
struct NonFiniteLoss : Error { using Error::Error; };

}  // namespace qfade
