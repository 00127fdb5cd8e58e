#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sacmt/error.hpp"
#include "sacmt/utf8.hpp"

namespace sacmt {

using Token = std::string;

namespace detail {

inline bool is_space(char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
}

inline char ascii_lower(char ch) {
    return (ch >= 'A' && ch <= 'Z') ? static_cast<char>(ch - 'A' + 'a') : ch;
}

inline bool starts_with_any(std::string_view word, std::initializer_list<std::string_view> prefixes) {
    for (auto p : prefixes) {
        if (word.starts_with(p)) return true;
    }
    return false;
}

}  // namespace detail

/// Splits on ASCII whitespace. Punctuation stays attached to its word
/// ("wow!!!" is one token).
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && detail::is_space(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !detail::is_space(text[j])) ++j;
        if (j > i) tokens.emplace_back(text.substr(i, j - i));
        i = j;
    }
    return tokens;
}

/// Lowercases ASCII, drops URLs and @-mentions, collapses whitespace.
/// Throws InvalidArgument when nothing is left.
inline std::string normalize(std::string_view text) {
    std::string lowered(text);
    for (auto& ch : lowered) ch = detail::ascii_lower(ch);

    std::string out;
    for (const auto& word : tokenize(lowered)) {
        if (detail::starts_with_any(word, {"http://", "https://", "www.", "@"})) continue;
        if (!out.empty()) out += ' ';
        out += word;
    }
    if (out.empty()) throw InvalidArgument("empty after normalization");
    return out;
}

inline bool is_vowel(char ch) {
    return ch == 'a' || ch == 'e' || ch == 'i' || ch == 'o' || ch == 'u';
}

/// Letters of a romanized token with the vowels {a,e,i,o,u} removed; 'y' is
/// kept. Anything that is not an ASCII letter is ignored.
inline std::string consonant_skeleton(std::string_view token) {
    std::string out;
    for (char raw : token) {
        const char ch = detail::ascii_lower(raw);
        if (ch < 'a' || ch > 'z') continue;
        if (!is_vowel(ch)) out += ch;
    }
    return out;
}

inline constexpr char kTrigramPad = '#';

/// Width-3 sliding window over the token's codepoints. Tokens shorter than
/// three codepoints are right-padded with '#' and yield a single trigram.
inline std::vector<std::string> char_trigrams(std::string_view token) {
    auto units = utf8::codepoint_units(token);
    std::vector<std::string> grams;
    if (units.size() < 3) {
        std::string gram;
        for (auto u : units) gram.append(u);
        gram.append(3 - units.size(), kTrigramPad);
        grams.push_back(std::move(gram));
        return grams;
    }
    grams.reserve(units.size() - 2);
    for (std::size_t i = 0; i + 2 < units.size(); ++i) {
        std::string gram;
        gram.append(units[i]).append(units[i + 1]).append(units[i + 2]);
        grams.push_back(std::move(gram));
    }
    return grams;
}

}  // namespace sacmt
