#pragma once

#include <stdexcept>
#include <string>

namespace finagent {

// Root of all pipeline errors. Catch sites that want to distinguish causes
// catch the concrete types below.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gateway
struct GatewayError : Error { using Error::Error; };
struct NetworkError : GatewayError { using GatewayError::GatewayError; };
struct CassetteMiss : GatewayError { using GatewayError::GatewayError; };
struct ProviderRefusal : GatewayError { using GatewayError::GatewayError; };

// ingest
struct UnreadableFile : Error { using Error::Error; };
struct UnparsableFormat : Error { using Error::Error; };
struct MissingDate : Error { using Error::Error; };
struct UnparseableVerdict : Error { using Error::Error; };
struct EmptyCleanOutput : Error { using Error::Error; };
struct RegistryIOError : Error { using Error::Error; };
struct DuplicateConflict : Error { using Error::Error; };

// corpus index
struct DimensionMismatch : Error { using Error::Error; };
struct PersistenceError : Error { using Error::Error; };
struct FormatVersionMismatch : Error { using Error::Error; };

// retrieval
struct EmptyHypothetical : Error { using Error::Error; };
struct VariantParseError : Error { using Error::Error; };
struct EmptyCorpus : Error { using Error::Error; };

// agents
struct NonFiniteInput : Error { using Error::Error; };
struct InsufficientQuarters : Error { using Error::Error; };
struct InsufficientHistory : Error { using Error::Error; };
struct UnparseableSignal : Error { using Error::Error; };

// market analytics
struct TooShort : Error { using Error::Error; };
struct ZeroVolatility : Error { using Error::Error; };
struct NoDownside : Error { using Error::Error; };

// backtest
struct MissingMarketCap : Error { using Error::Error; };
struct MissingPrice : Error { using Error::Error; };
struct NegativeCash : Error { using Error::Error; };
struct CoverageGap : Error { using Error::Error; };

// factor lab
struct InsufficientOverlap : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct TooFewRows : Error { using Error::Error; };

// evaluation
struct UnparseableJudgment : Error { using Error::Error; };
struct NoClaims : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };

// config / CLI
struct ConfigError : Error { using Error::Error; };

// Violated call contract (bad arguments, missing preconditions).
struct PreconditionError : Error { using Error::Error; };

} // namespace finagent
