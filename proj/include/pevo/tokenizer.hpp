#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pevo {

/// Byte range of one token within the original text.
struct TokenSpan {
    size_t begin;
    size_t end;  // one past the last byte
};

/// Splits text into token spans. Implementations must cover tokens in order
/// and never overlap, so truncation can cut the original bytes at a span end.
using TokenizerFn = std::function<std::vector<TokenSpan>(std::string_view)>;

/// Default approximation of a subword tokenizer: a token is either a maximal
/// run of letters/digits/apostrophes (non-ASCII bytes count as letters) or a
/// single punctuation character. Whitespace separates and is never a token.
std::vector<TokenSpan> default_tokenize(std::string_view text);

/// Tokenizers are looked up by id; "default" is always registered.
/// register_tokenizer lets callers plug in e.g. a BPE-compatible counter.
class TokenizerRegistry {
public:
    static TokenizerRegistry& instance();

    void register_tokenizer(const std::string& id, TokenizerFn fn);
    bool contains(const std::string& id) const;

    /// Throws Error(UnknownTokenizer) for ids that were never registered.
    const TokenizerFn& get(const std::string& id) const;

private:
    TokenizerRegistry();
    std::vector<std::pair<std::string, TokenizerFn>> entries_;
};

size_t count_tokens(std::string_view text, const std::string& tokenizer_id = "default");

}  // namespace pevo
