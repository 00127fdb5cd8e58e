#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/error.hpp"
#include "sacmt/text.hpp"

namespace sacmt {

using TrigramId = std::uint32_t;
inline constexpr TrigramId kUnknownTrigram = 0;
inline constexpr int kVocabFormatVersion = 1;

/// A sentence as the ids of its per-token character trigrams, in order.
struct TrigramSeq {
    std::vector<TrigramId> ids;

    std::size_t size() const { return ids.size(); }
    std::span<const TrigramId> view() const { return ids; }
    friend bool operator==(const TrigramSeq&, const TrigramSeq&) = default;
};

/// Trigram string <-> id bijection over 1..n; id 0 is reserved for unseen
/// trigrams.
class TrigramVocab {
public:
    std::size_t size() const { return by_id_.size(); }

    TrigramId id_of(const std::string& gram) const {
        auto it = ids_.find(gram);
        return it == ids_.end() ? kUnknownTrigram : it->second;
    }

    const std::string& gram(TrigramId id) const {
        if (id == kUnknownTrigram || id > by_id_.size()) throw InvalidArgument("trigram id out of range");
        return by_id_[id - 1];
    }

    /// Adds unseen trigrams of the corpus in first-occurrence order.
    void extend(const LabeledCorpus& corpus) {
        for (const auto& s : corpus) {
            for (const auto& tok : tokenize(normalize(s.text))) {
                for (auto& g : char_trigrams(tok)) insert(std::move(g));
            }
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        j["version"] = kVocabFormatVersion;
        for (std::size_t i = 0; i < by_id_.size(); ++i) j[by_id_[i]] = i + 1;
        return j;
    }

    static TrigramVocab from_json(const nlohmann::json& j) {
        if (!j.is_object() || !j.contains("version")) throw ParseError("vocab: missing version");
        if (j.at("version") != kVocabFormatVersion) throw ParseError("vocab: unsupported version");
        std::vector<std::string> by_id(j.size() - 1);
        for (const auto& [gram, id] : j.items()) {
            if (gram == "version") continue;
            if (!id.is_number_unsigned()) throw ParseError("vocab: id for '" + gram + "' is not an integer");
            const auto k = id.get<std::size_t>();
            if (k == 0 || k > by_id.size() || !by_id[k - 1].empty()) {
                throw ParseError("vocab: ids are not a bijection onto 1..n");
            }
            by_id[k - 1] = gram;
        }
        TrigramVocab v;
        for (auto& g : by_id) v.insert(std::move(g));
        return v;
    }

    friend bool operator==(const TrigramVocab& a, const TrigramVocab& b) { return a.by_id_ == b.by_id_; }

private:
    void insert(std::string gram) {
        if (ids_.count(gram)) return;
        by_id_.push_back(gram);
        ids_.emplace(std::move(gram), static_cast<TrigramId>(by_id_.size()));
    }

    std::unordered_map<std::string, TrigramId> ids_;
    std::vector<std::string> by_id_;
};

inline TrigramVocab build_vocab(const LabeledCorpus& corpus) {
    if (corpus.empty()) throw InvalidArgument("build_vocab on an empty corpus");
    TrigramVocab vocab;
    vocab.extend(corpus);
    return vocab;
}

inline TrigramSeq encode_text(std::string_view text, const TrigramVocab& vocab) {
    TrigramSeq seq;
    for (const auto& tok : tokenize(normalize(text))) {
        for (const auto& g : char_trigrams(tok)) seq.ids.push_back(vocab.id_of(g));
    }
    if (seq.ids.empty()) throw InvalidArgument("sentence has no tokens");
    return seq;
}

inline TrigramSeq encode(const Sentence& sentence, const TrigramVocab& vocab) {
    return encode_text(sentence.text, vocab);
}

}  // namespace sacmt
