#pragma once

#include <stdexcept>
#include <string>

namespace pevo {

enum class ErrorCode {
    // config
    MissingField,
    OutOfRange,
    UnknownField,
    UnknownScorer,
    UnknownTemplateVariant,
    // templates / parsing
    NoPromptsFound,
    EmptyAfterTruncation,
    GroundingImagesMissing,
    UnknownTokenizer,
    // backends
    Transport,
    RateLimited,
    BadResponse,
    AttachmentLimitExceeded,
    GenerationRefused,
    UnrecognizedTemplate,
    // engine
    InitUnderflow,
    UnevaluatedPopulation,
    UnevaluatedIndividual,
    Precondition,
    // storage
    StorageFailure,
    RunExists,
    GapInSequence,
    CorruptManifest,
    SchemaMismatch,
    // analysis
    EmptyGroup,
    UnknownFormat,
    DomainError,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library. `key` names the offending
/// config field / file / backend where that helps the caller.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::string key = {})
        : std::runtime_error(format_message(code, message, key)),
          code_(code),
          key_(std::move(key)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& key() const noexcept { return key_; }

    bool retryable() const noexcept {
        return code_ == ErrorCode::Transport || code_ == ErrorCode::RateLimited;
    }

private:
    static std::string format_message(ErrorCode code, const std::string& message,
                                      const std::string& key);

    ErrorCode code_;
    std::string key_;
};

}  // namespace pevo
