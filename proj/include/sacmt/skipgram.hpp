#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/error.hpp"
#include "sacmt/io.hpp"
#include "sacmt/numcore.hpp"
#include "sacmt/random.hpp"
#include "sacmt/text.hpp"

namespace sacmt {

/// Word -> k-dimensional vector. Immutable once built.
class WordEmbeddings {
public:
    WordEmbeddings() = default;
    WordEmbeddings(std::vector<std::string> words, RowMatrix vectors) : words_(std::move(words)), vectors_(std::move(vectors)) {
        if (static_cast<Index>(words_.size()) != vectors_.rows()) throw InvalidArgument("embeddings: row count mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (!index_.emplace(words_[i], i).second) throw InvalidArgument("embeddings: duplicate word " + words_[i]);
        }
    }

    std::size_t dim() const { return static_cast<std::size_t>(vectors_.cols()); }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::string>& words() const { return words_; }
    bool contains(const std::string& word) const { return index_.count(word) > 0; }

    /// The stored vector, or nullopt for words without one.
    std::optional<std::span<const double>> vector(const std::string& word) const {
        auto it = index_.find(word);
        if (it == index_.end()) return std::nullopt;
        return std::span<const double>(vectors_.row(static_cast<Index>(it->second)).data(), dim());
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["dim"] = dim();
        j["words"] = words_;
        j["vectors"] = nlohmann::json::object();
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto v = vector(words_[i]).value();
            j["vectors"][words_[i]] = std::vector<double>(v.begin(), v.end());
        }
        return j;
    }

    static WordEmbeddings from_json(const nlohmann::json& j) {
        try {
            const auto k = j.at("dim").get<std::size_t>();
            const auto& vecs = j.at("vectors");
            std::vector<std::string> words;
            if (j.contains("words")) {
                words = j["words"].get<std::vector<std::string>>();
            } else {
                for (const auto& [word, arr] : vecs.items()) words.push_back(word);
            }
            if (words.size() != vecs.size()) throw ParseError("embeddings: word list and vectors disagree");
            RowMatrix m(static_cast<Index>(vecs.size()), static_cast<Index>(k));
            Index r = 0;
            for (const auto& word : words) {
                auto v = vecs.at(word).get<std::vector<double>>();
                if (v.size() != k) throw ParseError("embeddings: vector for '" + word + "' has wrong dimension");
                for (std::size_t c = 0; c < k; ++c) m(r, static_cast<Index>(c)) = v[c];
                ++r;
            }
            return WordEmbeddings(std::move(words), std::move(m));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("embeddings: ") + e.what());
        }
    }

private:
    std::vector<std::string> words_;
    RowMatrix vectors_;
    std::unordered_map<std::string, std::size_t> index_;
};

inline void save_embeddings(const WordEmbeddings& emb, const std::filesystem::path& path) {
    io::atomic_write(path, emb.to_json().dump());
}

inline WordEmbeddings load_embeddings(const std::filesystem::path& path) {
    try {
        return WordEmbeddings::from_json(nlohmann::json::parse(io::read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

struct SkipgramConfig {
    std::size_t dim = 100;
    std::size_t window = 5;
    std::size_t negatives = 5;
    std::size_t epochs = 5;
    double lr = 0.025;  // linearly decayed to lr * 1e-4 over training
    std::size_t min_count = 1;
    std::uint64_t seed = 1;
};

/// Skip-gram with negative sampling, trained by single-threaded SGD.
///
/// The (center, context, negatives) examples are drawn once from the seeded
/// RNG and replayed every epoch, so training minimizes one fixed finite-sum
/// objective and `objective()` is directly comparable across epochs.
class SkipgramTrainer {
public:
    SkipgramTrainer(const std::vector<std::vector<std::string>>& sentences, const SkipgramConfig& cfg) : cfg_(cfg) {
        if (cfg.dim < 1) throw InvalidArgument("skipgram: dim must be >= 1");
        if (cfg.window < 1) throw InvalidArgument("skipgram: window must be >= 1");
        if (sentences.empty()) throw InvalidArgument("skipgram: empty corpus");

        std::unordered_map<std::string, std::size_t> counts;
        std::vector<std::string> order;
        for (const auto& sent : sentences) {
            for (const auto& w : sent) {
                if (counts[w]++ == 0) order.push_back(w);
            }
        }
        std::unordered_map<std::string, std::uint32_t> index;
        for (const auto& w : order) {
            if (counts[w] >= cfg.min_count) {
                index.emplace(w, static_cast<std::uint32_t>(words_.size()));
                words_.push_back(w);
                freq_.push_back(counts[w]);
            }
        }
        if (words_.empty()) throw InvalidArgument("skipgram: no token reaches min-count");

        auto rng = make_rng(cfg.seed);
        const auto n = static_cast<Index>(words_.size());
        const auto k = static_cast<Index>(cfg.dim);
        input_ = RowMatrix(n, k);
        for (Index j = 0; j < input_.size(); ++j) {
            input_.data()[j] = uniform_real(rng, -0.5 / static_cast<double>(k), 0.5 / static_cast<double>(k));
        }
        output_ = RowMatrix::Zero(n, k);

        build_noise_table();
        for (const auto& sent : sentences) {
            std::vector<std::uint32_t> ids;
            for (const auto& w : sent) {
                auto it = index.find(w);
                if (it != index.end()) ids.push_back(it->second);
            }
            for (std::size_t i = 0; i < ids.size(); ++i) {
                const std::size_t lo = i >= cfg.window ? i - cfg.window : 0;
                const std::size_t hi = std::min(ids.size() - 1, i + cfg.window);
                for (std::size_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    examples_.push_back({ids[i], ids[j]});
                    for (std::size_t q = 0; q < cfg.negatives; ++q) negatives_.push_back(draw_negative(rng, ids[j]));
                }
            }
        }
    }

    /// Runs all epochs; returns the objective after each one.
    std::vector<double> train() {
        std::vector<double> history;
        const double total = static_cast<double>(examples_.size() * cfg_.epochs);
        double seen = 0.0;
        for (std::size_t epoch = 0; epoch < cfg_.epochs; ++epoch) {
            for (std::size_t e = 0; e < examples_.size(); ++e) {
                const double lr = cfg_.lr * std::max(1e-4, 1.0 - seen / std::max(1.0, total));
                update(e, lr);
                seen += 1.0;
            }
            history.push_back(objective());
        }
        return history;
    }

    /// Negative-sampling loss summed over the fixed example set.
    double objective() const {
        double loss = 0.0;
        for (std::size_t e = 0; e < examples_.size(); ++e) {
            const auto [center, context] = examples_[e];
            const auto v = input_.row(center);
            loss -= log_sigmoid(v.dot(output_.row(context)));
            for (std::size_t q = 0; q < cfg_.negatives; ++q) {
                const auto neg = negatives_[e * cfg_.negatives + q];
                if (neg != context) loss -= log_sigmoid(-v.dot(output_.row(neg)));
            }
        }
        return loss;
    }

    WordEmbeddings embeddings() const { return WordEmbeddings(words_, input_); }

private:
    struct Example {
        std::uint32_t center;
        std::uint32_t context;
    };

    static double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }

    void build_noise_table() {
        double acc = 0.0;
        for (auto f : freq_) {
            acc += std::pow(static_cast<double>(f), 0.75);
            noise_cdf_.push_back(acc);
        }
        for (auto& c : noise_cdf_) c /= acc;
    }

    std::uint32_t draw_negative(Rng& rng, std::uint32_t avoid) const {
        std::uint32_t pick = avoid;
        for (int tries = 0; tries < 16 && pick == avoid; ++tries) {
            const double u = uniform_unit(rng);
            auto it = std::upper_bound(noise_cdf_.begin(), noise_cdf_.end(), u);
            pick = static_cast<std::uint32_t>(std::min<std::ptrdiff_t>(it - noise_cdf_.begin(),
                                                                       static_cast<std::ptrdiff_t>(noise_cdf_.size()) - 1));
        }
        return pick;
    }

    void update(std::size_t e, double lr) {
        const auto [center, context] = examples_[e];
        Vector v = input_.row(center).transpose();
        Vector dv = Vector::Zero(v.size());
        auto step = [&](std::uint32_t target, double label) {
            auto u = output_.row(target);
            const double g = lr * (label - sigmoid(v.dot(u.transpose())));
            dv += g * u.transpose();
            u += g * v.transpose();
        };
        step(context, 1.0);
        for (std::size_t q = 0; q < cfg_.negatives; ++q) {
            const auto neg = negatives_[e * cfg_.negatives + q];
            if (neg != context) step(neg, 0.0);
        }
        input_.row(center) += dv.transpose();
    }

    SkipgramConfig cfg_;
    std::vector<std::string> words_;
    std::vector<std::size_t> freq_;
    std::vector<double> noise_cdf_;
    RowMatrix input_;
    RowMatrix output_;
    std::vector<Example> examples_;
    std::vector<std::uint32_t> negatives_;
};

inline std::vector<std::vector<std::string>> tokenized_sentences(const LabeledCorpus& corpus) {
    std::vector<std::vector<std::string>> out;
    out.reserve(corpus.size());
    for (const auto& s : corpus) out.push_back(tokenize(normalize(s.text)));
    return out;
}

inline WordEmbeddings train_skipgram(const std::vector<std::vector<std::string>>& sentences,
                                     const SkipgramConfig& cfg, std::vector<double>* history = nullptr) {
    SkipgramTrainer trainer(sentences, cfg);
    auto h = trainer.train();
    if (history) *history = std::move(h);
    return trainer.embeddings();
}

inline WordEmbeddings train_skipgram(const LabeledCorpus& corpus, const SkipgramConfig& cfg,
                                     std::vector<double>* history = nullptr) {
    if (corpus.empty()) throw InvalidArgument("skipgram: empty corpus");
    return train_skipgram(tokenized_sentences(corpus), cfg, history);
}

}  // namespace sacmt
