#include "pevo/tokenizer.hpp"

#include <algorithm>

#include "pevo/errors.hpp"

namespace pevo {

namespace {

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '\'' || c >= 0x80;
}

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

std::vector<TokenSpan> default_tokenize(std::string_view text) {
    std::vector<TokenSpan> spans;
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_space_byte(c)) {
            ++i;
            continue;
        }
        if (is_word_byte(c)) {
            size_t begin = i;
            while (i < n && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
            spans.push_back({begin, i});
        } else {
            // every punctuation character is its own token
            spans.push_back({i, i + 1});
            ++i;
        }
    }
    return spans;
}

TokenizerRegistry::TokenizerRegistry() {
    entries_.emplace_back("default", TokenizerFn(default_tokenize));
}

TokenizerRegistry& TokenizerRegistry::instance() {
    static TokenizerRegistry reg;
    return reg;
}

void TokenizerRegistry::register_tokenizer(const std::string& id, TokenizerFn fn) {
    for (auto& [name, existing] : entries_) {
        if (name == id) {
            existing = std::move(fn);
            return;
        }
    }
    entries_.emplace_back(id, std::move(fn));
}

bool TokenizerRegistry::contains(const std::string& id) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const auto& e) { return e.first == id; });
}

const TokenizerFn& TokenizerRegistry::get(const std::string& id) const {
    for (const auto& [name, fn] : entries_) {
        if (name == id) return fn;
    }
    throw Error(ErrorCode::UnknownTokenizer, "no tokenizer registered under this id", id);
}

size_t count_tokens(std::string_view text, const std::string& tokenizer_id) {
    return TokenizerRegistry::instance().get(tokenizer_id)(text).size();
}

}  // namespace pevo
