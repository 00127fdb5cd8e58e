#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sacmt::utf8 {

/// Splits a UTF-8 string into the byte ranges of its codepoints. Invalid
/// lead bytes are kept as single-byte units so nothing is ever discarded.
inline std::vector<std::string_view> codepoint_units(std::string_view text) {
    std::vector<std::string_view> units;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t len = 1;
        if (lead >= 0xF0 && lead < 0xF8) {
            len = 4;
        } else if (lead >= 0xE0) {
            len = lead < 0xF0 ? 3 : 1;
        } else if (lead >= 0xC0) {
            len = 2;
        }
        if (i + len > text.size()) len = 1;
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(text[i + k]) & 0xC0) != 0x80) {
                len = 1;
                break;
            }
        }
        units.push_back(text.substr(i, len));
        i += len;
    }
    return units;
}

inline char32_t decode_unit(std::string_view unit) {
    const auto b0 = static_cast<unsigned char>(unit[0]);
    switch (unit.size()) {
        case 2:
            return static_cast<char32_t>(((b0 & 0x1F) << 6) | (unit[1] & 0x3F));
        case 3:
            return static_cast<char32_t>(((b0 & 0x0F) << 12) | ((unit[1] & 0x3F) << 6) |
                                         (unit[2] & 0x3F));
        case 4:
            return static_cast<char32_t>(((b0 & 0x07) << 18) | ((unit[1] & 0x3F) << 12) |
                                         ((unit[2] & 0x3F) << 6) | (unit[3] & 0x3F));
        default:
            return static_cast<char32_t>(b0);
    }
}

inline std::vector<char32_t> decode(std::string_view text) {
    std::vector<char32_t> out;
    for (auto unit : codepoint_units(text)) out.push_back(decode_unit(unit));
    return out;
}

inline std::string encode(char32_t cp) {
    std::string out;
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
    return out;
}

/// Emoji presentation selectors (U+FE0E, U+FE0F) carry no identity of their own.
inline bool is_variation_selector(char32_t cp) { return cp == 0xFE0E || cp == 0xFE0F; }

inline std::string strip_variation_selectors(std::string_view text) {
    std::string out;
    for (auto unit : codepoint_units(text)) {
        if (!is_variation_selector(decode_unit(unit))) out.append(unit);
    }
    return out;
}

}  // namespace sacmt::utf8
