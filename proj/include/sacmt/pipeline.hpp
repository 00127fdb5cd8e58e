#pragma once

#include <string>
#include <vector>

#include "sacmt/corpus.hpp"
#include "sacmt/skipgram.hpp"
#include "sacmt/variants.hpp"

namespace sacmt {

struct PreprocessResult {
    std::vector<LabeledCorpus> corpora;  // rewritten, same order as the input
    ClusterMap clusters;
};

/// Clusters the variants of the words found in `corpora` (frequencies pooled
/// over all of them) and rewrites each corpus with the resulting map.
inline PreprocessResult preprocess_pipeline(const std::vector<const LabeledCorpus*>& corpora,
                                            const WordEmbeddings& emb, double tau) {
    WordFrequencies freq;
    for (const auto* c : corpora) {
        for (const auto& [w, n] : word_frequencies(*c)) freq[w] += n;
    }
    PreprocessResult out;
    out.clusters = cluster_variants(freq, emb, tau);
    for (const auto* c : corpora) out.corpora.push_back(apply_clusters(*c, out.clusters));
    return out;
}

inline PreprocessResult preprocess_pipeline(const LabeledCorpus& corpus, const WordEmbeddings& emb, double tau) {
    return preprocess_pipeline(std::vector<const LabeledCorpus*>{&corpus}, emb, tau);
}

inline std::vector<std::vector<std::string>> pooled_sentences(const std::vector<const LabeledCorpus*>& corpora) {
    std::vector<std::vector<std::string>> out;
    for (const auto* c : corpora) {
        auto part = tokenized_sentences(*c);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

}  // namespace sacmt
