#pragma once

// Seeded synthetic corpora standing in for the code-mixed and English
// datasets, which are not redistributable.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "sacmt/corpus.hpp"
#include "sacmt/random.hpp"
#include "sacmt/text.hpp"

namespace sacmt::synthetic {

namespace detail {

inline constexpr std::string_view kConsonants = "bcdfghjklmnprstvz";
inline constexpr std::string_view kVowels = "aeiou";

/// Random consonant-vowel word of `syllables` syllables whose skeleton is
/// not already in `taken`.
inline std::string fresh_word(Rng& rng, std::set<std::string>& taken, std::size_t syllables) {
    for (;;) {
        std::string w;
        for (std::size_t s = 0; s < syllables; ++s) {
            w += kConsonants[uniform_index(rng, kConsonants.size())];
            w += kVowels[uniform_index(rng, kVowels.size())];
        }
        if (taken.insert(consonant_skeleton(w)).second) return w;
    }
}

inline Sentence make_sentence(std::string id, const std::vector<std::string>& words, Sentiment label,
                              std::string source) {
    std::string text;
    for (const auto& w : words) {
        if (!text.empty()) text += ' ';
        text += w;
    }
    return {std::move(id), std::move(text), label, std::move(source)};
}

}  // namespace detail

struct BilingualConfig {
    std::size_t train_per_class = 50;  // per language
    std::size_t test_per_class = 15;   // per language
    std::size_t inventory = 12;        // words per (language, class)
    std::size_t min_len = 3;
    std::size_t max_len = 6;
    std::uint64_t seed = 11;
};

struct BilingualCorpus {
    LabeledCorpus left_train;   // "code-mixed" language
    LabeledCorpus right_train;  // "resource-rich" language
    LabeledCorpus left_test;
    LabeledCorpus right_test;
};

/// Two languages with disjoint vocabularies; within a language each class
/// draws its words from its own inventory.
inline BilingualCorpus bilingual(const BilingualConfig& cfg) {
    auto rng = make_rng(cfg.seed, 0xB1);
    std::set<std::string> taken;
    std::array<std::array<std::vector<std::string>, kNumClasses>, 2> inventory;
    for (auto& lang : inventory) {
        for (auto& cls : lang) {
            for (std::size_t i = 0; i < cfg.inventory; ++i) cls.push_back(detail::fresh_word(rng, taken, 2 + i % 2));
        }
    }
    auto make = [&](std::size_t lang, std::size_t per_class, const std::string& tag) {
        std::vector<Sentence> out;
        for (std::size_t n = 0; n < per_class; ++n) {
            for (auto s : kAllSentiments) {
                const auto& inv = inventory[lang][index_of(s)];
                const auto len = cfg.min_len + uniform_index(rng, cfg.max_len - cfg.min_len + 1);
                std::vector<std::string> words;
                for (std::size_t k = 0; k < len; ++k) words.push_back(inv[uniform_index(rng, inv.size())]);
                out.push_back(detail::make_sentence(tag + "-" + std::to_string(out.size() + 1), words, s, tag));
            }
        }
        return LabeledCorpus(std::move(out));
    };
    BilingualCorpus c;
    c.left_train = make(0, cfg.train_per_class, "cm-train");
    c.right_train = make(1, cfg.train_per_class, "en-train");
    c.left_test = make(0, cfg.test_per_class, "cm-test");
    c.right_test = make(1, cfg.test_per_class, "en-test");
    return c;
}

/// A transliteration family: spellings sharing one consonant skeleton, with
/// the number of sentences each spelling appears in.
struct VariantFamily {
    std::string meaning;
    Sentiment label;
    std::vector<std::pair<std::string, std::size_t>> spellings;  // most frequent first
};

/// The four families of the standard-word variation examples.
inline std::vector<VariantFamily> hindi_variant_families() {
    return {
        {"beautiful", Sentiment::Positive, {{"khoobsurat", 40}, {"khubsurat", 24}, {"khubsoorat", 16}, {"khbsurt", 12}}},
        {"because", Sentiment::Neutral, {{"kyunki", 40}, {"kiyunki", 24}, {"kiyunkee", 16}, {"kyunkee", 12}}},
        {"clemency", Sentiment::Positive, {{"meherbani", 40}, {"meharbaani", 24}, {"meharbani", 16}, {"meherbanee", 12}}},
        {"yours", Sentiment::Negative, {{"aapka", 40}, {"apkaa", 24}, {"apka", 16}}},
    };
}

struct VariantCorpusConfig {
    std::size_t context_words = 6;  // per family
    std::size_t context_left = 2;
    std::size_t context_right = 2;
    std::uint64_t seed = 5;
};

/// Every spelling of a family appears between context words drawn from that
/// family's own pool, so variants share their contexts. Context words have
/// pairwise distinct skeletons and never merge.
inline LabeledCorpus variant_corpus(const std::vector<VariantFamily>& families, const VariantCorpusConfig& cfg) {
    auto rng = make_rng(cfg.seed, 0x5A);
    std::set<std::string> taken;
    for (const auto& f : families) {
        for (const auto& [w, _] : f.spellings) taken.insert(consonant_skeleton(w));
    }
    std::vector<std::vector<std::string>> pools(families.size());
    for (auto& pool : pools) {
        for (std::size_t i = 0; i < cfg.context_words; ++i) pool.push_back(detail::fresh_word(rng, taken, 2));
    }
    std::vector<Sentence> out;
    // Interleave families so every class is spread through the corpus.
    std::vector<std::pair<std::size_t, std::string>> slots;
    for (std::size_t f = 0; f < families.size(); ++f) {
        for (const auto& [w, count] : families[f].spellings) {
            for (std::size_t k = 0; k < count; ++k) slots.emplace_back(f, w);
        }
    }
    shuffle(slots, rng);
    for (const auto& [f, w] : slots) {
        std::vector<std::string> words;
        for (std::size_t k = 0; k < cfg.context_left; ++k) words.push_back(pools[f][uniform_index(rng, pools[f].size())]);
        words.push_back(w);
        for (std::size_t k = 0; k < cfg.context_right; ++k) words.push_back(pools[f][uniform_index(rng, pools[f].size())]);
        out.push_back(detail::make_sentence("var-" + std::to_string(out.size() + 1), words, families[f].label, "variants"));
    }
    return LabeledCorpus(std::move(out));
}

/// Emoji groups per class: positive, neutral, negative.
inline EmojiMap default_emoji_map() {
    EmojiMap m;
    for (auto e : {"❤️", "😄", "😁", "😂"}) m.add(e, Sentiment::Positive);
    for (auto e : {"😐", "😏", "😌", "😇"}) m.add(e, Sentiment::Neutral);
    for (auto e : {"😞", "😓", "😔", "😡"}) m.add(e, Sentiment::Negative);
    return m;
}

struct EmojiCorpusConfig {
    double conflict_rate = 0.1;  // sentences carrying emojis of two classes
    double missing_rate = 0.1;   // sentences with no emoji
    std::uint64_t seed = 9;
};

/// Appends class-consistent emojis to the sentences of `base`, except for a
/// fraction that gets conflicting emojis or none at all.
inline LabeledCorpus with_emojis(const LabeledCorpus& base, const EmojiMap& map, const EmojiCorpusConfig& cfg) {
    auto rng = make_rng(cfg.seed, 0xE0);
    std::array<std::vector<std::string>, kNumClasses> by_class;
    for (const auto& [e, s] : map.entries()) by_class[index_of(s)].push_back(e);
    auto pick = [&](Sentiment s) {
        const auto& v = by_class[index_of(s)];
        return v[uniform_index(rng, v.size())];
    };
    std::vector<Sentence> out;
    for (const auto& s : base) {
        Sentence r = s;
        const double u = uniform_unit(rng);
        if (u < cfg.conflict_rate) {
            const auto other = kAllSentiments[(index_of(*s.label) + 1 + uniform_index(rng, 2)) % kNumClasses];
            r.text += " " + pick(*s.label) + " " + pick(other);
        } else if (u >= cfg.conflict_rate + cfg.missing_rate) {
            r.text += " " + pick(*s.label);
        }
        out.push_back(std::move(r));
    }
    return LabeledCorpus(std::move(out));
}

}  // namespace sacmt::synthetic
