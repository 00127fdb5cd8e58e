#pragma once

// Twin BiLSTM encoders over one shared parameter set, trained on sentence
// pairs with a cosine contrastive loss:
//
//   loss = 1 - cos(a, b)              for a same-sentiment pair  (y = +1)
//   loss = max(0, cos(a, b) - margin) for a cross-sentiment pair (y = -1)
//
// summed over the batch and minimized by plain mini-batch gradient descent
// with backpropagation through time.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/error.hpp"
#include "sacmt/io.hpp"
#include "sacmt/numcore.hpp"
#include "sacmt/random.hpp"
#include "sacmt/vocab.hpp"

namespace sacmt {

struct ModelShape {
    Index vocab_size = 0;  // n, excluding the unknown row
    Index embed_dim = 64;  // e
    Index hidden_dim = 64; // h
    Index output_dim = 128; // d

    friend bool operator==(const ModelShape&, const ModelShape&) = default;
};

/// The single parameter set both twins read.
struct SiameseParams {
    EmbeddingTable embedding;
    LstmParams forward_lstm;
    LstmParams backward_lstm;
    ProjectionParams projection;

    static SiameseParams zeros(const ModelShape& s) {
        return {EmbeddingTable::zeros(s.vocab_size + 1, s.embed_dim), LstmParams::zeros(s.embed_dim, s.hidden_dim),
                LstmParams::zeros(s.embed_dim, s.hidden_dim), ProjectionParams::zeros(s.output_dim, 2 * s.hidden_dim)};
    }

    static SiameseParams init(const ModelShape& s, std::uint64_t seed) {
        auto rng = make_rng(seed, 0x5EED);
        SiameseParams p;
        p.embedding = EmbeddingTable::random(s.vocab_size + 1, s.embed_dim, rng);
        p.forward_lstm = LstmParams::random(s.embed_dim, s.hidden_dim, rng);
        p.backward_lstm = LstmParams::random(s.embed_dim, s.hidden_dim, rng);
        p.projection = ProjectionParams::random(s.output_dim, 2 * s.hidden_dim, rng);
        return p;
    }

    ModelShape shape() const {
        return {embedding.vocab_rows() - 1, embedding.dim(), forward_lstm.hidden_dim(), projection.output_dim()};
    }

    /// Visits every tensor as (name, contiguous storage) in a fixed order.
    template <class F>
    void for_each_tensor(F&& f) {
        f(std::string_view("embedding"), span_of(embedding.rows));
        f(std::string_view("forward.input_weights"), span_of(forward_lstm.input_weights));
        f(std::string_view("forward.recurrent_weights"), span_of(forward_lstm.recurrent_weights));
        f(std::string_view("forward.bias"), span_of(forward_lstm.bias));
        f(std::string_view("backward.input_weights"), span_of(backward_lstm.input_weights));
        f(std::string_view("backward.recurrent_weights"), span_of(backward_lstm.recurrent_weights));
        f(std::string_view("backward.bias"), span_of(backward_lstm.bias));
        f(std::string_view("projection.weight"), span_of(projection.weight));
        f(std::string_view("projection.bias"), span_of(projection.bias));
    }

    template <class F>
    void for_each_tensor(F&& f) const {
        const_cast<SiameseParams*>(this)->for_each_tensor(
            [&](std::string_view name, std::span<double> data) { f(name, std::span<const double>(data)); });
    }

    std::size_t parameter_count() const {
        std::size_t n = 0;
        for_each_tensor([&](std::string_view, std::span<const double> d) { n += d.size(); });
        return n;
    }

    std::vector<double> flatten() const {
        std::vector<double> out;
        out.reserve(parameter_count());
        for_each_tensor([&](std::string_view, std::span<const double> d) { out.insert(out.end(), d.begin(), d.end()); });
        return out;
    }

    void unflatten(std::span<const double> flat) {
        if (flat.size() != parameter_count()) throw InvalidArgument("unflatten: size mismatch");
        std::size_t off = 0;
        for_each_tensor([&](std::string_view, std::span<double> d) {
            std::copy(flat.begin() + static_cast<std::ptrdiff_t>(off),
                      flat.begin() + static_cast<std::ptrdiff_t>(off + d.size()), d.begin());
            off += d.size();
        });
    }

    friend bool operator==(const SiameseParams& a, const SiameseParams& b) { return a.flatten() == b.flatten(); }

private:
    template <class M>
    static std::span<double> span_of(M& m) {
        return {m.data(), static_cast<std::size_t>(m.size())};
    }
};

/// A point of the shared sentiment space; element-wise nonnegative.
struct SentimentVector {
    Vector values;

    Index dim() const { return values.size(); }
    friend bool operator==(const SentimentVector& a, const SentimentVector& b) {
        return a.values.size() == b.values.size() && a.values == b.values;
    }
};

inline SentimentVector forward(const SiameseParams& p, const TrigramSeq& seq) {
    auto enc = bilstm_encode(p.forward_lstm, p.backward_lstm, p.embedding, seq.view());
    return {project(p.projection, enc.forward, enc.backward)};
}

/// One arm of the siamese network. Both arms hold a reference to the same
/// parameters, so they are the same function.
class Twin {
public:
    explicit Twin(const SiameseParams& shared) : shared_(&shared) {}
    SentimentVector operator()(const TrigramSeq& seq) const { return forward(*shared_, seq); }
    const SiameseParams& params() const { return *shared_; }

private:
    const SiameseParams* shared_;
};

inline std::pair<Twin, Twin> twins(const SiameseParams& p) { return {Twin(p), Twin(p)}; }

/// Euclidean distance between the two sentiment vectors. Diagnostic only;
/// training uses the cosine loss.
inline double energy(const SiameseParams& p, const TrigramSeq& c, const TrigramSeq& r) {
    return (forward(p, c).values - forward(p, r).values).norm();
}

// ---------------------------------------------------------------------------
// Loss.

enum class PairLabel : int { Dissimilar = -1, Similar = 1 };

inline constexpr int to_int(PairLabel y) { return static_cast<int>(y); }

inline void check_margin(double m) {
    if (!(m > 0.0 && m < 1.0)) throw InvalidArgument("margin must lie strictly between 0 and 1");
}

inline double pair_loss_from_cosine(double cos, PairLabel y, double m) {
    return y == PairLabel::Similar ? 1.0 - cos : std::max(0.0, cos - m);
}

inline double pair_loss(const SentimentVector& a, const SentimentVector& b, PairLabel y, double m) {
    check_margin(m);
    return pair_loss_from_cosine(cosine_sim(a.values, b.values), y, m);
}

/// d loss / d cos. The hinge at cos == m counts as inactive.
inline double pair_loss_slope(double cos, PairLabel y, double m) {
    if (y == PairLabel::Similar) return -1.0;
    return cos > m ? 1.0 : 0.0;
}

struct Pair {
    TrigramSeq left;
    TrigramSeq right;
    PairLabel y = PairLabel::Similar;
    std::string left_id;
    std::string right_id;
};

inline double batch_loss(const SiameseParams& p, std::span<const Pair> pairs, double m) {
    if (pairs.empty()) throw InvalidArgument("batch_loss on an empty batch");
    check_margin(m);
    double total = 0.0;
    for (const auto& pr : pairs) total += pair_loss(forward(p, pr.left), forward(p, pr.right), pr.y, m);
    return total;
}

// ---------------------------------------------------------------------------
// Gradients.

/// Accumulated gradient with the same layout as the parameters. Embedding
/// rows are tracked so clearing and updating touch only the rows in use.
class Gradient {
public:
    explicit Gradient(const ModelShape& shape)
        : g_(SiameseParams::zeros(shape)), touched_(static_cast<std::size_t>(shape.vocab_size + 1), 0) {}

    SiameseParams& tensors() { return g_; }
    const SiameseParams& tensors() const { return g_; }

    void mark(std::span<const std::uint32_t> ids) {
        for (auto id : ids) {
            if (!touched_[id]) {
                touched_[id] = 1;
                rows_.push_back(id);
            }
        }
    }

    void clear() {
        for (auto id : rows_) {
            g_.embedding.rows.row(id).setZero();
            touched_[id] = 0;
        }
        rows_.clear();
        for (auto* l : {&g_.forward_lstm, &g_.backward_lstm}) {
            l->input_weights.setZero();
            l->recurrent_weights.setZero();
            l->bias.setZero();
        }
        g_.projection.weight.setZero();
        g_.projection.bias.setZero();
    }

    double squared_norm() const {
        double sq = 0.0;
        for (auto id : rows_) sq += g_.embedding.rows.row(id).squaredNorm();
        for (const auto* l : {&g_.forward_lstm, &g_.backward_lstm}) {
            sq += l->input_weights.squaredNorm() + l->recurrent_weights.squaredNorm() + l->bias.squaredNorm();
        }
        return sq + g_.projection.weight.squaredNorm() + g_.projection.bias.squaredNorm();
    }

    /// p -= scale * g
    void apply(SiameseParams& p, double scale) const {
        for (auto id : rows_) p.embedding.rows.row(id) -= scale * g_.embedding.rows.row(id);
        auto step = [scale](LstmParams& dst, const LstmParams& src) {
            dst.input_weights -= scale * src.input_weights;
            dst.recurrent_weights -= scale * src.recurrent_weights;
            dst.bias -= scale * src.bias;
        };
        step(p.forward_lstm, g_.forward_lstm);
        step(p.backward_lstm, g_.backward_lstm);
        p.projection.weight -= scale * g_.projection.weight;
        p.projection.bias -= scale * g_.projection.bias;
    }

private:
    SiameseParams g_;
    std::vector<char> touched_;
    std::vector<std::uint32_t> rows_;
};

namespace detail {

struct TracedForward {
    LstmTrace fw;
    LstmTrace bw;
    Vector fw_final;
    Vector bw_final;
    Vector s;
};

inline TracedForward traced_forward(const SiameseParams& p, const TrigramSeq& seq) {
    TracedForward t{lstm_run(p.forward_lstm, p.embedding, seq.view(), false),
                    lstm_run(p.backward_lstm, p.embedding, seq.view(), true), {}, {}, {}};
    t.fw_final = t.fw.final_hidden();
    t.bw_final = t.bw.final_hidden();
    t.s = project(p.projection, t.fw_final, t.bw_final);
    return t;
}

inline void traced_backward(const SiameseParams& p, const TracedForward& t, const Vector& ds, Gradient& grad) {
    auto& g = grad.tensors();
    const Vector d_in = project_backward(p.projection, t.fw_final, t.bw_final, t.s, ds, g.projection);
    const Index h = p.forward_lstm.hidden_dim();
    grad.mark(t.fw.ids);
    lstm_backward(p.forward_lstm, p.embedding, t.fw, d_in.head(h), g.forward_lstm, g.embedding);
    lstm_backward(p.backward_lstm, p.embedding, t.bw, d_in.tail(h), g.backward_lstm, g.embedding);
}

}  // namespace detail

/// Adds d loss(pair) / d params into `grad`; returns the pair's loss.
inline double accumulate_pair_gradient(const SiameseParams& p, const Pair& pair, double m, Gradient& grad) {
    const auto left = detail::traced_forward(p, pair.left);
    const auto right = detail::traced_forward(p, pair.right);
    const double cos = cosine_sim(left.s, right.s);
    const double loss = pair_loss_from_cosine(cos, pair.y, m);
    const double slope = pair_loss_slope(cos, pair.y, m);
    if (slope != 0.0) {
        detail::traced_backward(p, left, slope * cosine_grad(left.s, right.s), grad);
        detail::traced_backward(p, right, slope * cosine_grad(right.s, left.s), grad);
    }
    return loss;
}

/// Loss of the batch and its gradient, accumulated in batch order.
inline double batch_loss_and_gradient(const SiameseParams& p, std::span<const Pair> pairs, double m, Gradient& grad) {
    check_margin(m);
    double total = 0.0;
    for (const auto& pr : pairs) total += accumulate_pair_gradient(p, pr, m, grad);
    return total;
}

// ---------------------------------------------------------------------------
// Pair construction.

namespace detail {

inline std::vector<Pair> build_pairs(const LabeledCorpus& left, const LabeledCorpus& right, const TrigramVocab& vocab,
                                     std::uint64_t seed, bool same_corpus) {
    std::array<std::vector<std::size_t>, kNumClasses> by_class;
    for (std::size_t j = 0; j < right.size(); ++j) by_class[index_of(right[j].sentiment())].push_back(j);

    std::vector<TrigramSeq> right_seq;
    right_seq.reserve(right.size());
    for (const auto& s : right) right_seq.push_back(encode(s, vocab));

    auto rng = make_rng(seed, 0xA11C);
    std::vector<Pair> pairs;
    pairs.reserve(2 * left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
        const auto cls = left[i].sentiment();
        const auto& same = by_class[index_of(cls)];
        std::size_t pos = 0;
        if (same_corpus) {
            // Uniform over same-class sentences other than i itself.
            const std::size_t avail = same.size() - 1;
            if (avail == 0) {
                throw InvalidArgument("no same-class partner for class " + std::string(to_string(cls)));
            }
            auto self = std::lower_bound(same.begin(), same.end(), i) - same.begin();
            auto k = uniform_index(rng, avail);
            if (static_cast<std::ptrdiff_t>(k) >= self) ++k;
            pos = same[k];
        } else {
            if (same.empty()) throw InvalidArgument("no same-class partner for class " + std::string(to_string(cls)));
            pos = same[uniform_index(rng, same.size())];
        }
        std::size_t others = right.size() - same.size();
        if (others == 0) {
            throw InvalidArgument("no different-class partner for class " + std::string(to_string(cls)));
        }
        auto k = uniform_index(rng, others);
        std::size_t neg = 0;
        for (auto c : kAllSentiments) {
            if (c == cls) continue;
            const auto& bucket = by_class[index_of(c)];
            if (k < bucket.size()) {
                neg = bucket[k];
                break;
            }
            k -= bucket.size();
        }
        auto left_seq = encode(left[i], vocab);
        pairs.push_back({left_seq, right_seq[pos], PairLabel::Similar, left[i].id, right[pos].id});
        pairs.push_back({std::move(left_seq), right_seq[neg], PairLabel::Dissimilar, left[i].id, right[neg].id});
    }
    return pairs;
}

}  // namespace detail

/// For every left sentence: one uniformly drawn same-class right sentence
/// (y = +1) and one uniformly drawn different-class right sentence (y = -1).
inline std::vector<Pair> make_pairs(const LabeledCorpus& left, const LabeledCorpus& right, const TrigramVocab& vocab,
                                    std::uint64_t seed) {
    return detail::build_pairs(left, right, vocab, seed, false);
}

/// Monolingual pairing; a sentence is never paired with itself.
inline std::vector<Pair> make_pairs(const LabeledCorpus& corpus, const TrigramVocab& vocab, std::uint64_t seed) {
    return detail::build_pairs(corpus, corpus, vocab, seed, true);
}

// ---------------------------------------------------------------------------
// Training.

struct TrainConfig {
    double margin = 0.5;
    Index output_dim = 128;
    Index hidden_dim = 64;
    Index embed_dim = 64;
    double lr = 0.01;
    std::size_t batch_size = 32;
    std::size_t epochs = 30;
    std::uint64_t seed = 0;
    double clip_norm = 5.0;

    void validate() const {
        check_margin(margin);
        if (output_dim < 1 || hidden_dim < 1 || embed_dim < 1) throw InvalidArgument("model dimensions must be >= 1");
        if (!(lr >= 0.0) || !std::isfinite(lr)) throw InvalidArgument("learning rate must be finite and >= 0");
        if (batch_size < 1) throw InvalidArgument("batch size must be >= 1");
        if (!(clip_norm > 0.0)) throw InvalidArgument("clip norm must be positive");
    }

    ModelShape shape(Index vocab_size) const { return {vocab_size, embed_dim, hidden_dim, output_dim}; }

    nlohmann::json to_json() const {
        return {{"margin", margin}, {"d", output_dim}, {"h", hidden_dim},    {"e", embed_dim},  {"lr", lr},
                {"batch_size", batch_size}, {"epochs", epochs}, {"seed", seed}, {"clip_norm", clip_norm}};
    }

    static TrainConfig from_json(const nlohmann::json& j) {
        TrainConfig c;
        c.margin = j.at("margin").get<double>();
        c.output_dim = j.at("d").get<Index>();
        c.hidden_dim = j.at("h").get<Index>();
        c.embed_dim = j.at("e").get<Index>();
        c.lr = j.at("lr").get<double>();
        c.batch_size = j.at("batch_size").get<std::size_t>();
        c.epochs = j.at("epochs").get<std::size_t>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.clip_norm = j.at("clip_norm").get<double>();
        return c;
    }
};

class TrainingError : public Error {
public:
    using Error::Error;
};

struct TrainResult {
    SiameseParams params;
    std::vector<double> history;  // total loss per epoch
};

/// Mini-batch gradient descent on the summed pair loss. Pairs are reshuffled
/// every epoch from the seed; gradients are clipped by global norm.
/// `on_epoch(epoch, loss)` is called after each epoch when provided.
inline TrainResult train(SiameseParams p, std::span<const Pair> pairs, const TrainConfig& cfg,
                         const std::function<void(std::size_t, double)>& on_epoch = {}) {
    cfg.validate();
    if (pairs.empty()) throw InvalidArgument("train: no pairs");
    Gradient grad(p.shape());
    std::vector<std::size_t> order(pairs.size());
    std::vector<double> losses(pairs.size());
    TrainResult result;
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), 0);
        auto rng = make_rng(cfg.seed, 0xE90C + epoch);
        shuffle(order, rng);
        for (std::size_t start = 0, batch = 0; start < order.size(); start += cfg.batch_size, ++batch) {
            const auto stop = std::min(order.size(), start + cfg.batch_size);
            grad.clear();
            for (std::size_t k = start; k < stop; ++k) {
                const auto idx = order[k];
                const double l = accumulate_pair_gradient(p, pairs[idx], cfg.margin, grad);
                if (!std::isfinite(l)) {
                    throw TrainingError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                                        std::to_string(batch));
                }
                losses[idx] = l;
            }
            const double norm = std::sqrt(grad.squared_norm());
            if (!std::isfinite(norm)) {
                throw TrainingError("non-finite gradient at epoch " + std::to_string(epoch) + ", batch " +
                                    std::to_string(batch));
            }
            const double scale = norm > cfg.clip_norm ? cfg.clip_norm / norm : 1.0;
            if (cfg.lr != 0.0) grad.apply(p, cfg.lr * scale);
        }
        // Summed in pair order so the total does not depend on the shuffle.
        const double total = std::accumulate(losses.begin(), losses.end(), 0.0);
        result.history.push_back(total);
        if (on_epoch) on_epoch(epoch, total);
    }
    result.params = std::move(p);
    return result;
}

// ---------------------------------------------------------------------------
// Model file.
//
// Line 1: JSON manifest {format, version, d, h, e, vocab_size, param_count,
//         config, vocab, extras}.
// Line 2: JSON payload {tensor name: flat array} in the tensor visit order.
// Doubles are written in shortest round-trip form, so loading reproduces
// every parameter bit for bit.

inline constexpr int kModelFormatVersion = 1;
inline constexpr std::string_view kModelFormatName = "sacmt-siamese";

class ModelFileError : public Error {
public:
    using Error::Error;
};
class ModelVersionError : public ModelFileError {
public:
    using ModelFileError::ModelFileError;
};
class ModelTruncatedError : public ModelFileError {
public:
    using ModelFileError::ModelFileError;
};
class ModelShapeError : public ModelFileError {
public:
    using ModelFileError::ModelFileError;
};

struct SiameseModel {
    SiameseParams params;
    TrainConfig config;
    TrigramVocab vocab;
    nlohmann::json extras = nlohmann::json::object();  // e.g. centroids, cluster map
};

inline std::string format_model(const SiameseModel& m) {
    const auto shape = m.params.shape();
    if (shape.vocab_size != static_cast<Index>(m.vocab.size())) {
        throw InvalidArgument("model vocab size does not match embedding rows");
    }
    nlohmann::json manifest;
    manifest["format"] = kModelFormatName;
    manifest["version"] = kModelFormatVersion;
    manifest["d"] = shape.output_dim;
    manifest["h"] = shape.hidden_dim;
    manifest["e"] = shape.embed_dim;
    manifest["vocab_size"] = shape.vocab_size;
    manifest["param_count"] = m.params.parameter_count();
    manifest["config"] = m.config.to_json();
    manifest["vocab"] = m.vocab.to_json();
    manifest["extras"] = m.extras;

    nlohmann::json payload = nlohmann::json::object();
    m.params.for_each_tensor([&](std::string_view name, std::span<const double> data) {
        for (double v : data) {
            if (!std::isfinite(v)) throw InvalidArgument("refusing to save non-finite parameter in " + std::string(name));
        }
        payload[std::string(name)] = std::vector<double>(data.begin(), data.end());
    });
    return manifest.dump() + "\n" + payload.dump() + "\n";
}

inline SiameseModel parse_model(std::string_view content) {
    const auto nl = content.find('\n');
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(content.substr(0, nl));
    } catch (const nlohmann::json::exception& e) {
        if (nl == std::string_view::npos) throw ModelTruncatedError("model file truncated in manifest");
        throw ModelFileError(std::string("model manifest is not valid JSON: ") + e.what());
    }
    if (!manifest.is_object() || manifest.value("format", "") != kModelFormatName) {
        throw ModelFileError("not a siamese model file");
    }
    if (!manifest.contains("version") || manifest["version"] != kModelFormatVersion) {
        throw ModelVersionError("unsupported model version " + manifest.value("version", nlohmann::json()).dump() +
                                " (expected " + std::to_string(kModelFormatVersion) + ")");
    }
    if (nl == std::string_view::npos) throw ModelTruncatedError("model file has no parameter payload");

    SiameseModel m;
    ModelShape shape;
    try {
        shape = {manifest.at("vocab_size").get<Index>(), manifest.at("e").get<Index>(), manifest.at("h").get<Index>(),
                 manifest.at("d").get<Index>()};
        m.config = TrainConfig::from_json(manifest.at("config"));
        m.vocab = TrigramVocab::from_json(manifest.at("vocab"));
        m.extras = manifest.value("extras", nlohmann::json::object());
    } catch (const nlohmann::json::exception& e) {
        throw ModelFileError(std::string("model manifest incomplete: ") + e.what());
    } catch (const ParseError& e) {
        throw ModelFileError(std::string("model manifest: ") + e.what());
    }
    if (shape.vocab_size < 0 || shape.embed_dim < 1 || shape.hidden_dim < 1 || shape.output_dim < 1) {
        throw ModelShapeError("model dimensions out of range");
    }
    if (static_cast<Index>(m.vocab.size()) != shape.vocab_size) {
        throw ModelShapeError("vocab has " + std::to_string(m.vocab.size()) + " trigrams, manifest says " +
                              std::to_string(shape.vocab_size));
    }

    auto payload_text = content.substr(nl + 1);
    const bool terminated = !payload_text.empty() && payload_text.back() == '\n';
    nlohmann::json payload;
    try {
        payload = nlohmann::json::parse(payload_text);
    } catch (const nlohmann::json::exception&) {
        throw ModelTruncatedError("model parameter payload is truncated or corrupt");
    }
    if (!terminated) throw ModelTruncatedError("model parameter payload is truncated");

    m.params = SiameseParams::zeros(shape);
    if (manifest.value("param_count", std::size_t{0}) != m.params.parameter_count()) {
        throw ModelShapeError("param_count does not match the declared shape");
    }
    m.params.for_each_tensor([&](std::string_view name, std::span<double> data) {
        const std::string key(name);
        if (!payload.contains(key)) throw ModelTruncatedError("model payload is missing tensor " + key);
        const auto& arr = payload[key];
        if (!arr.is_array() || arr.size() != data.size()) {
            throw ModelShapeError("tensor " + key + " has " + std::to_string(arr.is_array() ? arr.size() : 0) +
                                  " values, expected " + std::to_string(data.size()));
        }
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (!arr[i].is_number()) throw ModelFileError("tensor " + key + " holds a non-number");
            data[i] = arr[i].get<double>();
        }
    });
    return m;
}

inline void save_model(const SiameseModel& m, const std::filesystem::path& path) {
    io::atomic_write(path, format_model(m));
}

inline SiameseModel load_model(const std::filesystem::path& path) { return parse_model(io::read_file(path)); }

}  // namespace sacmt
