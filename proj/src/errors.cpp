#include "pevo/errors.hpp"

namespace pevo {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::UnknownField: return "UnknownField";
        case ErrorCode::UnknownScorer: return "UnknownScorer";
        case ErrorCode::UnknownTemplateVariant: return "UnknownTemplateVariant";
        case ErrorCode::NoPromptsFound: return "NoPromptsFound";
        case ErrorCode::EmptyAfterTruncation: return "EmptyAfterTruncation";
        case ErrorCode::GroundingImagesMissing: return "GroundingImagesMissing";
        case ErrorCode::UnknownTokenizer: return "UnknownTokenizer";
        case ErrorCode::Transport: return "Transport";
        case ErrorCode::RateLimited: return "RateLimited";
        case ErrorCode::BadResponse: return "BadResponse";
        case ErrorCode::AttachmentLimitExceeded: return "AttachmentLimitExceeded";
        case ErrorCode::GenerationRefused: return "GenerationRefused";
        case ErrorCode::UnrecognizedTemplate: return "UnrecognizedTemplate";
        case ErrorCode::InitUnderflow: return "InitUnderflow";
        case ErrorCode::UnevaluatedPopulation: return "UnevaluatedPopulation";
        case ErrorCode::UnevaluatedIndividual: return "UnevaluatedIndividual";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::StorageFailure: return "StorageFailure";
        case ErrorCode::RunExists: return "RunExists";
        case ErrorCode::GapInSequence: return "GapInSequence";
        case ErrorCode::CorruptManifest: return "CorruptManifest";
        case ErrorCode::SchemaMismatch: return "SchemaMismatch";
        case ErrorCode::EmptyGroup: return "EmptyGroup";
        case ErrorCode::UnknownFormat: return "UnknownFormat";
        case ErrorCode::DomainError: return "DomainError";
    }
    return "Unknown";
}

std::string Error::format_message(ErrorCode code, const std::string& message,
                                  const std::string& key) {
    std::string out = error_code_name(code);
    if (!key.empty()) {
        out += "(" + key + ")";
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace pevo
