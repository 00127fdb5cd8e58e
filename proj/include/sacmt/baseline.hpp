#pragma once

// Averaged skip-gram vectors fed to an L2-regularized multinomial logistic
// regression.

#include <array>
#include <cmath>
#include <filesystem>
#include <set>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/io.hpp"
#include "sacmt/numcore.hpp"
#include "sacmt/random.hpp"
#include "sacmt/skipgram.hpp"

namespace sacmt {

/// Mean of the vectors of the sentence's embedded words. Words without a
/// vector are left out of both sum and count; none embedded gives zero.
inline Vector asv_vector(const Sentence& s, const WordEmbeddings& emb) {
    Vector sum = Vector::Zero(static_cast<Index>(emb.dim()));
    std::size_t count = 0;
    for (const auto& w : tokenize(normalize(s.text))) {
        if (auto v = emb.vector(w)) {
            sum += Eigen::Map<const Vector>(v->data(), static_cast<Index>(v->size()));
            ++count;
        }
    }
    if (count > 0) sum /= static_cast<double>(count);
    return sum;
}

struct LogRegConfig {
    double l2 = 0.001;
    std::size_t epochs = 500;
    double lr = 0.5;
    std::uint64_t seed = 1;
};

/// Rows follow Negative, Neutral, Positive.
struct LogRegModel {
    Matrix weights;  // 3 x k
    Vector bias;     // 3

    Index dim() const { return weights.cols(); }

    Vector scores(const Vector& x) const {
        if (x.size() != dim()) throw InvalidArgument("logreg: dimension mismatch");
        return weights * x + bias;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["dim"] = dim();
        for (auto s : kAllSentiments) {
            const auto r = static_cast<Index>(index_of(s));
            std::vector<double> row(static_cast<std::size_t>(dim()));
            for (Index c = 0; c < dim(); ++c) row[static_cast<std::size_t>(c)] = weights(r, c);
            j["classes"][std::string(to_string(s))] = {{"weights", row}, {"bias", bias[r]}};
        }
        return j;
    }

    static LogRegModel from_json(const nlohmann::json& j) {
        const auto k = j.at("dim").get<Index>();
        LogRegModel m{Matrix::Zero(3, k), Vector::Zero(3)};
        for (auto s : kAllSentiments) {
            const auto& cls = j.at("classes").at(std::string(to_string(s)));
            auto row = cls.at("weights").get<std::vector<double>>();
            if (static_cast<Index>(row.size()) != k) throw ParseError("logreg: weight row has wrong dimension");
            const auto r = static_cast<Index>(index_of(s));
            for (Index c = 0; c < k; ++c) m.weights(r, c) = row[static_cast<std::size_t>(c)];
            m.bias[r] = cls.at("bias").get<double>();
        }
        return m;
    }
};

/// Argmax of class scores; ties go to the earlier class.
inline Sentiment predict_logreg(const LogRegModel& m, const Vector& x) {
    const Vector z = m.scores(x);
    Index best = 0;
    for (Index c = 1; c < z.size(); ++c) {
        if (z[c] > z[best]) best = c;
    }
    return kAllSentiments[static_cast<std::size_t>(best)];
}

namespace detail {

inline Vector softmax(const Vector& z) {
    Vector e = (z.array() - z.maxCoeff()).exp();
    return e / e.sum();
}

}  // namespace detail

/// Mean cross-entropy plus l2/2 |W|^2 (the bias is not penalized).
inline double logreg_objective(const LogRegModel& m, std::span<const Vector> xs, std::span<const Sentiment> ys,
                               double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Vector z = m.scores(xs[i]);
        const double lse = z.maxCoeff() + std::log((z.array() - z.maxCoeff()).exp().sum());
        loss += lse - z[static_cast<Index>(index_of(ys[i]))];
    }
    return loss / static_cast<double>(xs.size()) + 0.5 * l2 * m.weights.squaredNorm();
}

/// Full-batch proximal gradient descent: a gradient step on the
/// cross-entropy followed by the exact shrinkage step of the L2 term, which
/// stays stable for any regularization strength.
inline LogRegModel train_logreg(std::span<const Vector> xs, std::span<const Sentiment> ys, const LogRegConfig& cfg,
                                std::vector<double>* history = nullptr) {
    if (xs.size() != ys.size()) throw InvalidArgument("logreg: features and labels differ in count");
    if (xs.empty()) throw InvalidArgument("logreg: no training data");
    if (std::set<Sentiment>(ys.begin(), ys.end()).size() < 2) {
        throw InvalidArgument("logreg: training data has a single class");
    }
    if (cfg.l2 < 0.0 || !(cfg.lr > 0.0)) throw InvalidArgument("logreg: need l2 >= 0 and lr > 0");
    const Index k = xs.front().size();
    for (const auto& x : xs) {
        if (x.size() != k) throw InvalidArgument("logreg: inconsistent feature dimensions");
    }

    auto rng = make_rng(cfg.seed, 0x106);
    LogRegModel m{Matrix(3, k), Vector::Zero(3)};
    for (Index j = 0; j < m.weights.size(); ++j) m.weights.data()[j] = uniform_real(rng, -0.01, 0.01);

    const double inv_n = 1.0 / static_cast<double>(xs.size());
    Matrix gw(3, k);
    Vector gb(3);
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        gw.setZero();
        gb.setZero();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            Vector p = detail::softmax(m.scores(xs[i]));
            p[static_cast<Index>(index_of(ys[i]))] -= 1.0;
            gw.noalias() += p * xs[i].transpose();
            gb += p;
        }
        m.weights = (m.weights - cfg.lr * inv_n * gw) / (1.0 + cfg.lr * cfg.l2);
        m.bias -= cfg.lr * inv_n * gb;
        if (history) history->push_back(logreg_objective(m, xs, ys, cfg.l2));
    }
    return m;
}

inline void save_logreg(const LogRegModel& m, const std::filesystem::path& path) {
    io::atomic_write(path, m.to_json().dump());
}

}  // namespace sacmt
