#pragma once

// Transliteration-variant clustering. Two spellings are comparable only when
// their consonant skeletons agree; comparable pairs are linked when the
// cosine of their skip-gram vectors reaches a threshold, and every linked
// component is rewritten to its most frequent spelling.

#include <algorithm>
#include <filesystem>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/io.hpp"
#include "sacmt/numcore.hpp"
#include "sacmt/skipgram.hpp"
#include "sacmt/text.hpp"

namespace sacmt {

using WordFrequencies = std::map<std::string, std::size_t>;

inline WordFrequencies word_frequencies(const LabeledCorpus& corpus) {
    WordFrequencies freq;
    for (const auto& s : corpus) {
        for (auto& tok : tokenize(normalize(s.text))) ++freq[tok];
    }
    return freq;
}

/// Cosine of the two vectors when the skeletons agree and both vectors
/// exist, else 0.
inline double variation_similarity(const std::string& v1, const std::string& v2, const WordEmbeddings& emb) {
    if (consonant_skeleton(v1) != consonant_skeleton(v2)) return 0.0;
    auto a = emb.vector(v1);
    auto b = emb.vector(v2);
    if (!a || !b) return 0.0;
    return cosine(*a, *b);
}

struct VariantCluster {
    std::string skeleton;
    std::string canonical;
    std::vector<std::pair<std::string, std::size_t>> members;  // lexicographic
};

class ClusterMap {
public:
    /// Canonical spelling of `word`; words not in the map are their own.
    const std::string& canonical(const std::string& word) const {
        auto it = canonical_.find(word);
        return it == canonical_.end() ? word : it->second;
    }

    const std::map<std::string, std::string>& entries() const { return canonical_; }
    /// Clusters with at least two members.
    const std::vector<VariantCluster>& clusters() const { return clusters_; }
    bool empty() const { return canonical_.empty(); }
    /// Words that had no embedding and therefore stayed singletons.
    std::size_t skipped() const { return skipped_; }

    void set(const std::string& word, const std::string& canon) { canonical_[word] = canon; }
    void add_cluster(VariantCluster c) { clusters_.push_back(std::move(c)); }
    void set_skipped(std::size_t n) { skipped_ = n; }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [w, c] : canonical_) j[w] = c;
        return j;
    }

    static ClusterMap from_json(const nlohmann::json& j) {
        if (!j.is_object()) throw ParseError("cluster map must be a JSON object");
        ClusterMap m;
        for (const auto& [w, c] : j.items()) {
            if (!c.is_string()) throw ParseError("cluster map value for '" + w + "' must be a string");
            m.set(w, c.get<std::string>());
        }
        for (const auto& [w, c] : m.canonical_) {
            if (m.canonical(c) != c) throw ParseError("cluster map is not idempotent at '" + w + "'");
        }
        return m;
    }

    /// One line per multi-member cluster: skeleton, canonical, members with counts.
    std::string report() const {
        std::string out = "skeleton\tcanonical\tmembers\n";
        for (const auto& c : clusters_) {
            out += c.skeleton + "\t" + c.canonical + "\t";
            for (std::size_t i = 0; i < c.members.size(); ++i) {
                if (i) out += ' ';
                out += c.members[i].first + ":" + std::to_string(c.members[i].second);
            }
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const ClusterMap& a, const ClusterMap& b) { return a.canonical_ == b.canonical_; }

private:
    std::map<std::string, std::string> canonical_;
    std::vector<VariantCluster> clusters_;
    std::size_t skipped_ = 0;
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace detail

/// Words whose skeleton is empty (all vowels) are never clustered.
inline ClusterMap cluster_variants(const WordFrequencies& words, const WordEmbeddings& emb, double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("cluster threshold tau must be positive");
    std::map<std::string, std::vector<std::string>> groups;
    ClusterMap result;
    std::size_t skipped = 0;
    for (const auto& [w, f] : words) {
        if (f < 1) throw InvalidArgument("word frequency must be >= 1: " + w);
        result.set(w, w);
        if (!emb.contains(w)) ++skipped;
        auto skel = consonant_skeleton(w);
        if (!skel.empty()) groups[skel].push_back(w);
    }
    result.set_skipped(skipped);

    for (const auto& [skel, members] : groups) {
        if (members.size() < 2) continue;
        detail::DisjointSets sets(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (variation_similarity(members[i], members[j], emb) >= tau) sets.unite(i, j);
            }
        }
        std::map<std::size_t, std::vector<std::size_t>> comps;
        for (std::size_t i = 0; i < members.size(); ++i) comps[sets.find(i)].push_back(i);
        for (const auto& [root, idx] : comps) {
            if (idx.size() < 2) continue;
            VariantCluster c;
            c.skeleton = skel;
            std::size_t best = idx.front();
            for (auto i : idx) {
                const auto fi = words.at(members[i]);
                const auto fb = words.at(members[best]);
                if (fi > fb || (fi == fb && members[i] < members[best])) best = i;
                c.members.emplace_back(members[i], fi);
            }
            c.canonical = members[best];
            for (auto i : idx) result.set(members[i], c.canonical);
            result.add_cluster(std::move(c));
        }
    }
    return result;
}

/// Replaces each whitespace-delimited token whose normalized form has a
/// different canonical spelling. Everything else in the text is untouched.
inline std::string apply_clusters_text(std::string_view text, const ClusterMap& map) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (detail::is_space(text[i])) {
            out += text[i++];
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !detail::is_space(text[j])) ++j;
        std::string raw(text.substr(i, j - i));
        std::string lowered = raw;
        for (auto& ch : lowered) ch = detail::ascii_lower(ch);
        const auto& canon = map.canonical(lowered);
        out += canon == lowered ? raw : canon;
        i = j;
    }
    return out;
}

inline LabeledCorpus apply_clusters(const LabeledCorpus& corpus, const ClusterMap& map) {
    std::vector<Sentence> out;
    out.reserve(corpus.size());
    for (const auto& s : corpus) {
        Sentence r = s;
        r.text = apply_clusters_text(s.text, map);
        out.push_back(std::move(r));
    }
    return LabeledCorpus(std::move(out));
}

inline void save_cluster_map(const ClusterMap& map, const std::filesystem::path& path) {
    io::atomic_write(path, map.to_json().dump(1));
}

inline ClusterMap load_cluster_map(const std::filesystem::path& path) {
    try {
        return ClusterMap::from_json(nlohmann::json::parse(io::read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace sacmt
