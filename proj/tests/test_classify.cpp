#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sacmt/classify.hpp"
#include "sacmt/random.hpp"
#include "sacmt/synthetic.hpp"

using namespace sacmt;

namespace {

Vector v2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

Centroids axes3() {
    Centroids c;
    c.means[0] = Vector::Unit(3, 0);
    c.means[1] = Vector::Unit(3, 1);
    c.means[2] = Vector::Unit(3, 2);
    return c;
}

}  // namespace

TEST(Centroids, OneAnchorPerClassIsItsOwnCentroid) {
    EmbeddedCorpus a{{v2(1, 0), v2(0, 1), v2(2, 3)}, {Sentiment::Negative, Sentiment::Neutral, Sentiment::Positive}};
    auto c = centroids_from(a);
    EXPECT_EQ(c.of(Sentiment::Negative), v2(1, 0));
    EXPECT_EQ(c.of(Sentiment::Neutral), v2(0, 1));
    EXPECT_EQ(c.of(Sentiment::Positive), v2(2, 3));
}

TEST(Centroids, MeanOfClassMembersAndDuplicationInvariance) {
    EmbeddedCorpus a{{v2(1, 0), v2(0, 1), v2(3, 3), v2(-1, 2)},
                     {Sentiment::Positive, Sentiment::Positive, Sentiment::Negative, Sentiment::Neutral}};
    auto c = centroids_from(a);
    EXPECT_EQ(c.of(Sentiment::Positive), v2(0.5, 0.5));
    EmbeddedCorpus twice = a;
    twice.vectors.insert(twice.vectors.end(), a.vectors.begin(), a.vectors.end());
    twice.labels.insert(twice.labels.end(), a.labels.begin(), a.labels.end());
    auto d = centroids_from(twice);
    for (auto s : kAllSentiments) EXPECT_EQ(c.of(s), d.of(s));
}

TEST(Centroids, MissingClassIsAnError) {
    EmbeddedCorpus a{{v2(1, 0)}, {Sentiment::Positive}};
    EXPECT_THROW(centroids_from(a), InvalidArgument);
}

TEST(Centroids, JsonRoundTripIsExact) {
    Centroids c;
    c.means = {v2(0.1, 1.0 / 3.0), v2(2e-17, 5), v2(-7, 0.3)};
    auto back = Centroids::from_json(nlohmann::json::parse(c.to_json().dump()));
    for (auto s : kAllSentiments) EXPECT_EQ(back.of(s), c.of(s));
}

TEST(Predict, NearestCentroidTiesAndZeroVector) {
    const auto c = axes3();
    EXPECT_EQ(predict_vector(Vector::Unit(3, 2), c), Sentiment::Positive);
    Vector tie(3);
    tie << 0, 1, 1;
    EXPECT_EQ(predict_vector(tie, c), Sentiment::Neutral);
    Vector tie_all = Vector::Ones(3);
    EXPECT_EQ(predict_vector(tie_all, c), Sentiment::Negative);
    EXPECT_EQ(predict_vector(Vector::Zero(3), c), Sentiment::Neutral);
    PredictOptions opt;
    opt.zero_vector_class = Sentiment::Positive;
    EXPECT_EQ(predict_vector(Vector::Zero(3), c, opt), Sentiment::Positive);
}

TEST(PredictProperty, ScalingEverythingKeepsPredictions) {
    auto rng = make_rng(3, 3);
    for (int i = 0; i < 500; ++i) {
        Centroids c;
        for (auto& m : c.means) {
            m = Vector(4);
            for (Index k = 0; k < 4; ++k) m[k] = uniform_real(rng, 0, 1);
        }
        Vector s(4);
        for (Index k = 0; k < 4; ++k) s[k] = uniform_real(rng, 0, 1);
        const double scale = uniform_real(rng, 0.1, 10);
        Centroids cs = c;
        for (auto& m : cs.means) m *= scale;
        EXPECT_EQ(predict_vector(s, c), predict_vector(scale * s, cs));
    }
}

TEST(Knn, MajorityOfNearestAnchors) {
    EmbeddedCorpus a{{v2(1, 0), v2(1, 0.1), v2(0, 1), v2(0.1, 1), v2(-1, 0)},
                     {Sentiment::Positive, Sentiment::Positive, Sentiment::Negative, Sentiment::Negative, Sentiment::Neutral}};
    EXPECT_EQ(predict_knn(v2(1, 0.05), a, 2), Sentiment::Positive);
    EXPECT_EQ(predict_knn(v2(0.05, 1), a, 3), Sentiment::Negative);
    EXPECT_EQ(predict_knn(v2(-1, 0.01), a, 1), Sentiment::Neutral);
    EXPECT_EQ(predict_knn(v2(0, 0), a, 1), Sentiment::Neutral);
    EXPECT_THROW(predict_knn(v2(1, 0), a, 0), InvalidArgument);
}

TEST(Metrics, PerfectAndConstantPredictors) {
    std::vector<Sentiment> gold;
    for (int i = 0; i < 30; ++i) gold.push_back(kAllSentiments[static_cast<std::size_t>(i % 3)]);
    auto perfect = metrics_from(gold, gold);
    EXPECT_EQ(perfect.accuracy, 1.0);
    EXPECT_DOUBLE_EQ(perfect.macro.f1, 1.0);
    auto constant = metrics_from(gold, std::vector<Sentiment>(gold.size(), Sentiment::Neutral));
    EXPECT_DOUBLE_EQ(constant.accuracy, 1.0 / 3.0);
    EXPECT_EQ(constant.total(), gold.size());
    EXPECT_EQ(f_score(0, 0), 0.0);
    EXPECT_THROW(metrics_from({}, {}), InvalidArgument);
    EXPECT_THROW(metrics_from(gold, {Sentiment::Neutral}), InvalidArgument);
}

TEST(MetricsProperty, AgreeWithOracleAndBounds) {
    auto rng = make_rng(44, 0);
    for (int t = 0; t < 300; ++t) {
        const auto n = 1 + uniform_index(rng, 60);
        std::vector<Sentiment> gold, pred;
        for (std::size_t i = 0; i < n; ++i) {
            gold.push_back(kAllSentiments[uniform_index(rng, 3)]);
            pred.push_back(uniform_unit(rng) < 0.6 ? gold.back() : kAllSentiments[uniform_index(rng, 3)]);
        }
        auto m = metrics_from(gold, pred);
        auto o = oracle::macro(m.confusion);
        EXPECT_NEAR(m.accuracy, o.accuracy, 1e-12);
        EXPECT_NEAR(m.macro.precision, o.precision, 1e-12);
        EXPECT_NEAR(m.macro.recall, o.recall, 1e-12);
        EXPECT_NEAR(m.macro.f1, o.f1, 1e-12);
        EXPECT_EQ(m.total(), n);
        double lo = 1, hi = 0;
        for (const auto& pc : m.per_class) {
            lo = std::min(lo, pc.f1);
            hi = std::max(hi, pc.f1);
        }
        EXPECT_GE(m.macro.f1, lo - 1e-12);
        EXPECT_LE(m.macro.f1, hi + 1e-12);
    }
}

TEST(Metrics, JsonRoundTrip) {
    auto m = metrics_from({Sentiment::Negative, Sentiment::Positive, Sentiment::Neutral},
                          {Sentiment::Negative, Sentiment::Neutral, Sentiment::Neutral});
    auto back = Metrics::from_json(nlohmann::json::parse(m.to_json().dump()));
    EXPECT_EQ(back.to_json(), m.to_json());
}

TEST(Evaluate, PermutationInvariant) {
    auto data = synthetic::bilingual({});
    auto vocab = build_vocab(data.left_train);
    auto p = SiameseParams::init({static_cast<Index>(vocab.size()), 6, 5, 8}, 2);
    auto c = compute_centroids(p, vocab, data.left_train);
    auto m = evaluate(p, vocab, c, data.left_test);
    auto sentences = data.left_test.sentences();
    std::reverse(sentences.begin(), sentences.end());
    auto r = evaluate(p, vocab, c, LabeledCorpus(sentences));
    EXPECT_EQ(m.confusion, r.confusion);
    EXPECT_EQ(m.total(), data.left_test.size());
    EXPECT_THROW(evaluate(p, vocab, c, LabeledCorpus{}), InvalidArgument);
}

TEST(Tables, MetricsAndAblationLayouts) {
    auto m = metrics_from({Sentiment::Negative, Sentiment::Positive}, {Sentiment::Negative, Sentiment::Positive});
    EXPECT_EQ(format_metrics_table({{"SACMT", m}}), "Model\tAccuracy\tPrecision\tRecall\tF-score\nSACMT\t100.0%\t0.667\t0.667\t0.667\n");
    const auto t = format_ablation_table({{"SACMT", m, m}});
    EXPECT_EQ(t.substr(0, t.find('\n')), "Models\tWith Preprocessing\t\t\t\tWithout Preprocessing");
    EXPECT_NE(t.find("SACMT\t100.0%\t0.667\t0.667\t0.667\t100.0%\t0.667\t0.667\t0.667\n"), std::string::npos);
}
