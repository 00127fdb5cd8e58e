#pragma once

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/numcore.hpp"
#include "sacmt/siamese.hpp"
#include "sacmt/vocab.hpp"

namespace sacmt {

/// Per-class mean sentiment vector of the anchor sentences.
struct Centroids {
    std::array<Vector, kNumClasses> means;

    const Vector& of(Sentiment s) const { return means[index_of(s)]; }

    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (auto s : kAllSentiments) {
            const auto& v = of(s);
            j[std::string(to_string(s))] = std::vector<double>(v.data(), v.data() + v.size());
        }
        return j;
    }

    static Centroids from_json(const nlohmann::json& j) {
        Centroids c;
        for (auto s : kAllSentiments) {
            auto v = j.at(std::string(to_string(s))).get<std::vector<double>>();
            c.means[index_of(s)] = Eigen::Map<const Vector>(v.data(), static_cast<Index>(v.size()));
        }
        return c;
    }
};

/// Labeled sentiment vectors, in corpus order.
struct EmbeddedCorpus {
    std::vector<Vector> vectors;
    std::vector<Sentiment> labels;
};

inline EmbeddedCorpus embed_corpus(const SiameseParams& p, const TrigramVocab& vocab, const LabeledCorpus& corpus) {
    EmbeddedCorpus out;
    out.vectors.reserve(corpus.size());
    for (const auto& s : corpus) {
        out.vectors.push_back(forward(p, encode(s, vocab)).values);
        out.labels.push_back(s.sentiment());
    }
    return out;
}

inline Centroids centroids_from(const EmbeddedCorpus& anchors) {
    Centroids c;
    std::array<std::size_t, kNumClasses> counts{};
    for (std::size_t i = 0; i < anchors.vectors.size(); ++i) {
        auto& m = c.means[index_of(anchors.labels[i])];
        if (m.size() == 0) m = Vector::Zero(anchors.vectors[i].size());
        m += anchors.vectors[i];
        ++counts[index_of(anchors.labels[i])];
    }
    for (auto s : kAllSentiments) {
        const auto k = index_of(s);
        if (counts[k] == 0) throw InvalidArgument("no anchor sentence for class " + std::string(to_string(s)));
        c.means[k] /= static_cast<double>(counts[k]);
    }
    return c;
}

inline Centroids compute_centroids(const SiameseParams& p, const TrigramVocab& vocab, const LabeledCorpus& anchors) {
    return centroids_from(embed_corpus(p, vocab, anchors));
}

struct PredictOptions {
    /// Class assigned to an all-zero sentence vector.
    Sentiment zero_vector_class = Sentiment::Neutral;
};

/// Nearest centroid by cosine; ties go to the earlier class in
/// Negative < Neutral < Positive.
inline Sentiment predict_vector(const Vector& s, const Centroids& c, const PredictOptions& opt = {}) {
    if (s.norm() < kZeroNorm) return opt.zero_vector_class;
    Sentiment best = Sentiment::Negative;
    double best_cos = -2.0;
    for (auto cls : kAllSentiments) {
        const double cos = cosine_sim(s, c.of(cls));
        if (cos > best_cos) {
            best_cos = cos;
            best = cls;
        }
    }
    return best;
}

inline Sentiment predict(const SiameseParams& p, const TrigramVocab& vocab, const Centroids& c, const Sentence& s,
                         const PredictOptions& opt = {}) {
    return predict_vector(forward(p, encode(s, vocab)).values, c, opt);
}

/// k-nearest anchors by cosine, majority vote. Vote ties go to the larger
/// summed similarity, then to class order.
inline Sentiment predict_knn(const Vector& s, const EmbeddedCorpus& anchors, std::size_t k,
                             const PredictOptions& opt = {}) {
    if (k < 1 || anchors.vectors.empty()) throw InvalidArgument("predict_knn: need k >= 1 and anchors");
    if (s.norm() < kZeroNorm) return opt.zero_vector_class;
    std::vector<std::pair<double, std::size_t>> sims;
    sims.reserve(anchors.vectors.size());
    for (std::size_t i = 0; i < anchors.vectors.size(); ++i) sims.emplace_back(cosine_sim(s, anchors.vectors[i]), i);
    k = std::min(k, sims.size());
    std::partial_sort(sims.begin(), sims.begin() + static_cast<std::ptrdiff_t>(k), sims.end(),
                      [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    std::array<std::size_t, kNumClasses> votes{};
    std::array<double, kNumClasses> mass{};
    for (std::size_t r = 0; r < k; ++r) {
        const auto c = index_of(anchors.labels[sims[r].second]);
        ++votes[c];
        mass[c] += sims[r].first;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumClasses; ++c) {
        if (votes[c] > votes[best] || (votes[c] == votes[best] && mass[c] > mass[best])) best = c;
    }
    return kAllSentiments[best];
}

// ---------------------------------------------------------------------------
// Metrics.

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct Metrics {
    std::array<std::array<std::size_t, kNumClasses>, kNumClasses> confusion{};  // [gold][predicted]
    double accuracy = 0.0;
    std::array<ClassScores, kNumClasses> per_class{};
    ClassScores macro;

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& row : confusion)
            for (auto v : row) n += v;
        return n;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["accuracy"] = accuracy;
        j["macro"] = {{"precision", macro.precision}, {"recall", macro.recall}, {"f1", macro.f1}};
        for (auto s : kAllSentiments) {
            const auto& pc = per_class[index_of(s)];
            j["per_class"][std::string(to_string(s))] = {
                {"precision", pc.precision}, {"recall", pc.recall}, {"f1", pc.f1}};
        }
        j["confusion"] = confusion;
        j["confusion_order"] = {"negative", "neutral", "positive"};
        j["total"] = total();
        return j;
    }

    static Metrics from_json(const nlohmann::json& j) {
        Metrics m;
        m.confusion = j.at("confusion").get<decltype(m.confusion)>();
        m.accuracy = j.at("accuracy").get<double>();
        m.macro = {j.at("macro").at("precision").get<double>(), j.at("macro").at("recall").get<double>(),
                   j.at("macro").at("f1").get<double>()};
        for (auto s : kAllSentiments) {
            const auto& pc = j.at("per_class").at(std::string(to_string(s)));
            m.per_class[index_of(s)] = {pc.at("precision").get<double>(), pc.at("recall").get<double>(),
                                        pc.at("f1").get<double>()};
        }
        return m;
    }
};

inline double f_score(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

/// Macro averages are the unweighted mean over the three classes.
inline Metrics metrics_from(const std::vector<Sentiment>& gold, const std::vector<Sentiment>& predicted) {
    if (gold.size() != predicted.size()) throw InvalidArgument("metrics: prediction count mismatch");
    if (gold.empty()) throw InvalidArgument("metrics: empty evaluation set");
    Metrics m;
    for (std::size_t i = 0; i < gold.size(); ++i) ++m.confusion[index_of(gold[i])][index_of(predicted[i])];
    std::size_t correct = 0;
    for (std::size_t c = 0; c < kNumClasses; ++c) correct += m.confusion[c][c];
    m.accuracy = static_cast<double>(correct) / static_cast<double>(gold.size());
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        std::size_t pred_c = 0, gold_c = 0;
        for (std::size_t k = 0; k < kNumClasses; ++k) {
            pred_c += m.confusion[k][c];
            gold_c += m.confusion[c][k];
        }
        auto& pc = m.per_class[c];
        pc.precision = pred_c ? static_cast<double>(m.confusion[c][c]) / static_cast<double>(pred_c) : 0.0;
        pc.recall = gold_c ? static_cast<double>(m.confusion[c][c]) / static_cast<double>(gold_c) : 0.0;
        pc.f1 = f_score(pc.precision, pc.recall);
        m.macro.precision += pc.precision / kNumClasses;
        m.macro.recall += pc.recall / kNumClasses;
        m.macro.f1 += pc.f1 / kNumClasses;
    }
    return m;
}

inline Metrics evaluate(const SiameseParams& p, const TrigramVocab& vocab, const Centroids& c,
                        const LabeledCorpus& test, const PredictOptions& opt = {}) {
    if (test.empty()) throw InvalidArgument("evaluate: empty test corpus");
    std::vector<Sentiment> gold, pred;
    for (const auto& s : test) {
        gold.push_back(s.sentiment());
        pred.push_back(predict(p, vocab, c, s, opt));
    }
    return metrics_from(gold, pred);
}

// ---------------------------------------------------------------------------
// Report tables.

namespace detail {

inline std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

inline std::string metric_cells(const Metrics& m) {
    return fixed(100.0 * m.accuracy, 1) + "%\t" + fixed(m.macro.precision, 3) + "\t" + fixed(m.macro.recall, 3) +
           "\t" + fixed(m.macro.f1, 3);
}

}  // namespace detail

/// Model, Accuracy, Precision, Recall, F-score; one row per model.
inline std::string format_metrics_table(const std::vector<std::pair<std::string, Metrics>>& rows) {
    std::string out = "Model\tAccuracy\tPrecision\tRecall\tF-score\n";
    for (const auto& [name, m] : rows) out += name + "\t" + detail::metric_cells(m) + "\n";
    return out;
}

struct AblationRow {
    std::string model;
    Metrics with_preprocessing;
    Metrics without_preprocessing;
};

/// Paired metrics with and without variant preprocessing, side by side.
inline std::string format_ablation_table(const std::vector<AblationRow>& rows) {
    std::string out =
        "Models\tWith Preprocessing\t\t\t\tWithout Preprocessing\n"
        "\tAccuracy\tPrecision\tRecall\tF-score\tAccuracy\tPrecision\tRecall\tF-score\n";
    for (const auto& r : rows) {
        out += r.model + "\t" + detail::metric_cells(r.with_preprocessing) + "\t" +
               detail::metric_cells(r.without_preprocessing) + "\n";
    }
    return out;
}

}  // namespace sacmt
