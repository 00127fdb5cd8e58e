#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/error.hpp"
#include "sacmt/io.hpp"
#include "sacmt/random.hpp"
#include "sacmt/text.hpp"
#include "sacmt/utf8.hpp"

namespace sacmt {

/// Declaration order is the tie-breaking order used everywhere.
enum class Sentiment : std::uint8_t { Negative = 0, Neutral = 1, Positive = 2 };

inline constexpr std::size_t kNumClasses = 3;
inline constexpr std::array<Sentiment, kNumClasses> kAllSentiments{
    Sentiment::Negative, Sentiment::Neutral, Sentiment::Positive};

inline constexpr std::size_t index_of(Sentiment s) { return static_cast<std::size_t>(s); }

inline std::string_view to_string(Sentiment s) {
    switch (s) {
        case Sentiment::Negative: return "negative";
        case Sentiment::Neutral: return "neutral";
        case Sentiment::Positive: return "positive";
    }
    return "?";
}

/// Case-insensitive.
inline Sentiment parse_sentiment(std::string_view token) {
    std::string lowered(token);
    for (auto& ch : lowered) ch = detail::ascii_lower(ch);
    if (lowered == "negative") return Sentiment::Negative;
    if (lowered == "neutral") return Sentiment::Neutral;
    if (lowered == "positive") return Sentiment::Positive;
    throw ParseError("unknown label: " + std::string(token));
}

struct Sentence {
    std::string id;
    std::string text;
    std::optional<Sentiment> label;
    std::string source;

    Sentiment sentiment() const {
        if (!label) throw InvalidArgument("sentence " + id + " has no label");
        return *label;
    }

    friend bool operator==(const Sentence&, const Sentence&) = default;
};

using ClassCounts = std::array<std::size_t, kNumClasses>;

/// An ordered collection of labeled sentences with unique ids.
class LabeledCorpus {
public:
    LabeledCorpus() = default;

    explicit LabeledCorpus(std::vector<Sentence> sentences) : sentences_(std::move(sentences)) {
        std::unordered_set<std::string> seen;
        for (const auto& s : sentences_) {
            if (!s.label) throw InvalidArgument("unlabeled sentence in corpus: " + s.id);
            if (!seen.insert(s.id).second) throw InvalidArgument("duplicate sentence id: " + s.id);
        }
    }

    const std::vector<Sentence>& sentences() const { return sentences_; }
    std::size_t size() const { return sentences_.size(); }
    bool empty() const { return sentences_.empty(); }
    const Sentence& operator[](std::size_t i) const { return sentences_[i]; }
    auto begin() const { return sentences_.begin(); }
    auto end() const { return sentences_.end(); }

    ClassCounts class_counts() const {
        ClassCounts counts{};
        for (const auto& s : sentences_) ++counts[index_of(*s.label)];
        return counts;
    }

    friend bool operator==(const LabeledCorpus&, const LabeledCorpus&) = default;

private:
    std::vector<Sentence> sentences_;
};

/// Concatenates corpora; ids must stay unique across them.
inline LabeledCorpus concat(const LabeledCorpus& a, const LabeledCorpus& b) {
    std::vector<Sentence> all(a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return LabeledCorpus(std::move(all));
}

// ---------------------------------------------------------------------------
// TSV dataset format: id<TAB>label<TAB>text, one record per line.

inline LabeledCorpus parse_dataset(std::string_view content, std::string_view source = "") {
    std::vector<Sentence> sentences;
    std::unordered_set<std::string> ids;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < content.size()) {
        auto nl = content.find('\n', pos);
        if (nl == std::string_view::npos) nl = content.size();
        std::string_view line = content.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const auto where = "line " + std::to_string(line_no) + ": ";
        const auto tab1 = line.find('\t');
        const auto tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
        if (tab2 == std::string_view::npos) {
            throw ParseError(where + "malformed line (expected id<TAB>label<TAB>text)");
        }
        Sentence s;
        s.id = std::string(line.substr(0, tab1));
        s.text = std::string(line.substr(tab2 + 1));
        s.source = std::string(source);
        if (s.id.empty()) throw ParseError(where + "malformed line (empty id)");
        try {
            s.label = parse_sentiment(line.substr(tab1 + 1, tab2 - tab1 - 1));
            normalize(s.text);
        } catch (const Error& e) {
            throw ParseError(where + e.what());
        }
        if (!ids.insert(s.id).second) throw ParseError(where + "duplicate id " + s.id);
        sentences.push_back(std::move(s));
    }
    return LabeledCorpus(std::move(sentences));
}

inline LabeledCorpus load_dataset(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw Error("dataset not found: " + path.string());
    try {
        return parse_dataset(io::read_file(path), path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

inline std::string format_dataset(const LabeledCorpus& corpus) {
    std::string out;
    for (const auto& s : corpus) {
        out.append(s.id).append("\t").append(to_string(*s.label)).append("\t").append(s.text);
        out += '\n';
    }
    return out;
}

inline void save_dataset(const LabeledCorpus& corpus, const std::filesystem::path& path) {
    io::atomic_write(path, format_dataset(corpus));
}

// ---------------------------------------------------------------------------
// Emoji relabeling.

class EmojiMap {
public:
    EmojiMap() = default;

    /// Keys are stored without variation selectors so "❤" and "❤️" agree.
    void add(std::string_view emoji, Sentiment s) {
        auto key = utf8::strip_variation_selectors(emoji);
        if (key.empty()) throw InvalidArgument("empty emoji key");
        auto [it, inserted] = classes_.emplace(key, s);
        if (!inserted && it->second != s) {
            throw InvalidArgument("emoji mapped to two classes: " + key);
        }
        for (auto cp : utf8::decode(key)) {
            if (cp >= 0x80) codepoints_.insert(cp);
        }
    }

    const std::map<std::string, Sentiment>& entries() const { return classes_; }
    bool empty() const { return classes_.empty(); }
    bool contains_codepoint(char32_t cp) const { return codepoints_.count(cp) > 0; }

    static EmojiMap from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw ParseError("emoji map must be a JSON object");
        EmojiMap map;
        for (const auto& [key, value] : j.items()) {
            if (!value.is_string()) throw ParseError("emoji map value for " + key + " must be a label");
            map.add(key, parse_sentiment(value.get<std::string>()));
        }
        return map;
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [key, s] : classes_) j[key] = std::string(to_string(s));
        return j;
    }

private:
    std::map<std::string, Sentiment> classes_;
    std::set<char32_t> codepoints_;
};

inline EmojiMap load_emoji_map(const std::filesystem::path& path) {
    try {
        return EmojiMap::from_json(nlohmann::json::parse(io::read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

struct RelabelResult {
    LabeledCorpus corpus;
    std::size_t dropped = 0;
};

namespace detail {

struct EmojiScan {
    std::string text;
    std::set<Sentiment> classes;
};

inline EmojiScan scan_emojis(std::string_view raw, const EmojiMap& map) {
    // Longest keys first so a multi-codepoint emoji wins over its prefix.
    std::vector<std::pair<std::vector<std::string_view>, Sentiment>> keys;
    for (const auto& [k, s] : map.entries()) keys.emplace_back(utf8::codepoint_units(k), s);
    std::stable_sort(keys.begin(), keys.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });

    const auto stripped = utf8::strip_variation_selectors(raw);
    const auto units = utf8::codepoint_units(stripped);
    EmojiScan scan;
    std::string kept;
    std::size_t i = 0;
    while (i < units.size()) {
        bool matched = false;
        for (const auto& [key_units, s] : keys) {
            if (i + key_units.size() > units.size()) continue;
            if (std::equal(key_units.begin(), key_units.end(), units.begin() + static_cast<std::ptrdiff_t>(i))) {
                scan.classes.insert(s);
                i += key_units.size();
                kept += ' ';
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (map.contains_codepoint(utf8::decode_unit(units[i]))) {
            kept += ' ';
        } else {
            kept.append(units[i]);
        }
        ++i;
    }
    for (const auto& word : tokenize(kept)) {
        if (!scan.text.empty()) scan.text += ' ';
        scan.text += word;
    }
    return scan;
}

}  // namespace detail

/// Relabels each sentence with the class of the emojis it carries and strips
/// those emojis from the text. Sentences with no mapped emoji, with emojis of
/// conflicting classes, or with nothing left after stripping are dropped.
inline RelabelResult relabel_by_emoji(const LabeledCorpus& corpus, const EmojiMap& map) {
    if (map.empty()) throw InvalidArgument("emoji map is empty");
    std::vector<Sentence> kept;
    std::size_t dropped = 0;
    for (const auto& s : corpus) {
        auto scan = detail::scan_emojis(s.text, map);
        bool usable = scan.classes.size() == 1 && !scan.text.empty();
        if (usable) {
            try {
                normalize(scan.text);
            } catch (const InvalidArgument&) {
                usable = false;
            }
        }
        if (!usable) {
            ++dropped;
            continue;
        }
        Sentence out = s;
        out.text = std::move(scan.text);
        out.label = *scan.classes.begin();
        kept.push_back(std::move(out));
    }
    return {LabeledCorpus(std::move(kept)), dropped};
}

// ---------------------------------------------------------------------------
// Stratified split.

struct SplitRatios {
    double train = 0.8;
    double dev = 0.1;
    double test = 0.1;
};

struct CorpusSplit {
    LabeledCorpus train;
    LabeledCorpus dev;
    LabeledCorpus test;
};

namespace detail {

/// Largest-remainder apportionment of `total` items over `weights`.
inline std::vector<std::size_t> apportion(std::size_t total, const std::vector<double>& weights) {
    std::vector<std::size_t> counts(weights.size());
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double quota = weights[k] * static_cast<double>(total);
        counts[k] = static_cast<std::size_t>(std::floor(quota));
        assigned += counts[k];
        remainders.emplace_back(quota - std::floor(quota), k);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t r = 0; assigned < total; ++r, ++assigned) ++counts[remainders[r % remainders.size()].second];
    return counts;
}

}  // namespace detail

/// Stratified by class. Split sizes match the ratios over the whole corpus
/// (largest remainder) while every class is apportioned as evenly as that
/// allows. Each output keeps the input order.
inline CorpusSplit split(const LabeledCorpus& corpus, const SplitRatios& ratios, std::uint64_t seed) {
    const std::vector<double> weights{ratios.train, ratios.dev, ratios.test};
    for (double w : weights) {
        if (!(w > 0.0)) throw InvalidArgument("split ratios must be positive");
    }
    if (std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9) {
        throw InvalidArgument("split ratios must sum to 1");
    }
    constexpr std::size_t kParts = 3;

    std::array<std::vector<std::size_t>, kNumClasses> members;
    for (std::size_t i = 0; i < corpus.size(); ++i) members[index_of(*corpus[i].label)].push_back(i);
    for (auto s : kAllSentiments) {
        const auto n = members[index_of(s)].size();
        if (n > 0 && n < kParts) {
            throw InvalidArgument("class " + std::string(to_string(s)) + " has " + std::to_string(n) +
                                  " sentences, fewer than the " + std::to_string(kParts) + " splits");
        }
    }

    const auto targets = detail::apportion(corpus.size(), weights);
    // cells[c][k]: how many sentences of class c go to part k.
    std::array<std::array<std::size_t, kParts>, kNumClasses> cells{};
    std::array<std::array<double, kParts>, kNumClasses> frac{};
    std::array<std::size_t, kNumClasses> row_left{};
    std::array<std::size_t, kParts> col_left = {targets[0], targets[1], targets[2]};
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        const double n = static_cast<double>(members[c].size());
        row_left[c] = members[c].size();
        for (std::size_t k = 0; k < kParts; ++k) {
            const double quota = weights[k] * n;
            cells[c][k] = static_cast<std::size_t>(std::floor(quota));
            frac[c][k] = quota - std::floor(quota);
            row_left[c] -= cells[c][k];
            col_left[k] -= cells[c][k];
        }
    }
    for (;;) {
        double best = 0.0;
        bool found = false;
        std::size_t bc = 0, bk = 0;
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            for (std::size_t k = 0; k < kParts; ++k) {
                if (row_left[c] > 0 && col_left[k] > 0 && (!found || frac[c][k] > best)) {
                    found = true;
                    best = frac[c][k];
                    bc = c;
                    bk = k;
                }
            }
        }
        if (!found) break;
        ++cells[bc][bk];
        frac[bc][bk] -= 1.0;
        --row_left[bc];
        --col_left[bk];
    }

    std::array<std::vector<std::size_t>, kParts> chosen;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        auto rng = make_rng(seed, c);
        auto order = members[c];
        shuffle(order, rng);
        std::size_t offset = 0;
        for (std::size_t k = 0; k < kParts; ++k) {
            chosen[k].insert(chosen[k].end(), order.begin() + static_cast<std::ptrdiff_t>(offset),
                             order.begin() + static_cast<std::ptrdiff_t>(offset + cells[c][k]));
            offset += cells[c][k];
        }
    }
    auto gather = [&](std::vector<std::size_t>& idx) {
        std::sort(idx.begin(), idx.end());
        std::vector<Sentence> out;
        out.reserve(idx.size());
        for (auto i : idx) out.push_back(corpus[i]);
        return LabeledCorpus(std::move(out));
    };
    return {gather(chosen[0]), gather(chosen[1]), gather(chosen[2])};
}

// ---------------------------------------------------------------------------
// Dataset statistics in the layout of a "properties of the datasets" table.

struct CorpusStats {
    std::size_t sentences = 0;
    std::size_t words = 0;     // distinct normalized tokens
    std::size_t trigrams = 0;  // distinct character trigrams
    ClassCounts counts{};
    std::array<long, kNumClasses> percent{};  // rounded to the nearest integer

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["sentences"] = sentences;
        j["words"] = words;
        j["char_trigrams"] = trigrams;
        for (auto s : kAllSentiments) {
            j["count"][std::string(to_string(s))] = counts[index_of(s)];
            j["percent"][std::string(to_string(s))] = percent[index_of(s)];
        }
        return j;
    }
};

inline CorpusStats corpus_stats(const LabeledCorpus& corpus) {
    if (corpus.empty()) throw InvalidArgument("corpus_stats on an empty corpus");
    std::unordered_set<std::string> words;
    std::unordered_set<std::string> grams;
    for (const auto& s : corpus) {
        for (const auto& tok : tokenize(normalize(s.text))) {
            if (words.insert(tok).second) {
                for (auto& g : char_trigrams(tok)) grams.insert(std::move(g));
            }
        }
    }
    CorpusStats st;
    st.sentences = corpus.size();
    st.words = words.size();
    st.trigrams = grams.size();
    st.counts = corpus.class_counts();
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        st.percent[c] = std::lround(100.0 * static_cast<double>(st.counts[c]) / static_cast<double>(corpus.size()));
    }
    return st;
}

/// One row per dataset: Datasets, Words, Char-trigrams, Positive, Neutral, Negative.
inline std::string format_stats_table(const std::vector<std::pair<std::string, CorpusStats>>& rows) {
    std::string out = "Datasets\tWords\tChar-trigrams\tPositive\tNeutral\tNegative\n";
    for (const auto& [name, st] : rows) {
        out += name + "\t" + std::to_string(st.words) + "\t" + std::to_string(st.trigrams);
        for (auto s : {Sentiment::Positive, Sentiment::Neutral, Sentiment::Negative}) {
            out += "\t" + std::to_string(st.percent[index_of(s)]) + "%";
        }
        out += '\n';
    }
    return out;
}

/// Class distribution after emoji relabeling: Emojis, Class, then one
/// percentage column per dataset.
inline std::string format_emoji_distribution(const EmojiMap& map,
                                             const std::vector<std::pair<std::string, LabeledCorpus>>& datasets) {
    std::string out = "Emojis\tClass";
    for (const auto& [name, _] : datasets) out += "\t" + name;
    out += '\n';
    for (auto s : {Sentiment::Positive, Sentiment::Neutral, Sentiment::Negative}) {
        std::string emojis;
        for (const auto& [key, cls] : map.entries()) {
            if (cls == s) emojis += key;
        }
        std::string name(to_string(s));
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
        out += emojis + "\t" + name;
        for (const auto& [_, corpus] : datasets) {
            const auto counts = corpus.class_counts();
            const long pct = corpus.empty() ? 0
                                            : std::lround(100.0 * static_cast<double>(counts[index_of(s)]) /
                                                          static_cast<double>(corpus.size()));
            out += "\t" + std::to_string(pct) + "%";
        }
        out += '\n';
    }
    return out;
}

}  // namespace sacmt
