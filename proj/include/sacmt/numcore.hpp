#pragma once

// Dense kernels for the twin encoder: LSTM recurrence, bidirectional
// encoding, ReLU projection, cosine similarity, and their exact gradients.
// Everything is double precision.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "sacmt/error.hpp"
#include "sacmt/random.hpp"

namespace sacmt {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

inline constexpr double kZeroNorm = 1e-12;

/// u.v / (|u||v|) clamped to [-1, 1]; 0 when either norm is below 1e-12.
inline double cosine(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) throw InvalidArgument("cosine: dimension mismatch");
    // Extended precision keeps the rounded result stable under rescaling of
    // either argument, which finite-difference checks rely on.
    long double dot = 0.0L, uu = 0.0L, vv = 0.0L;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const long double a = u[i], b = v[i];
        dot += a * b;
        uu += a * a;
        vv += b * b;
    }
    const long double nu = std::sqrt(uu), nv = std::sqrt(vv);
    if (nu < kZeroNorm || nv < kZeroNorm) return 0.0;
    return std::clamp(static_cast<double>(dot / (nu * nv)), -1.0, 1.0);
}

inline double cosine_sim(const Vector& a, const Vector& b) {
    return cosine(std::span<const double>(a.data(), static_cast<std::size_t>(a.size())),
                  std::span<const double>(b.data(), static_cast<std::size_t>(b.size())));
}

/// d cos(a, b) / da. Zero where cosine is defined as 0 (degenerate norms).
inline Vector cosine_grad(const Vector& a, const Vector& b) {
    const double na = a.norm(), nb = b.norm();
    if (na < kZeroNorm || nb < kZeroNorm) return Vector::Zero(a.size());
    const double cos = a.dot(b) / (na * nb);
    return b / (na * nb) - (cos / (na * na)) * a;
}

// ---------------------------------------------------------------------------
// Parameters.

/// Gate blocks are stacked as rows [input; forget; output; candidate].
struct LstmParams {
    Matrix input_weights;      // 4h x e
    Matrix recurrent_weights;  // 4h x h
    Vector bias;               // 4h

    Index input_dim() const { return input_weights.cols(); }
    Index hidden_dim() const { return recurrent_weights.cols(); }

    static LstmParams zeros(Index e, Index h) {
        return {Matrix::Zero(4 * h, e), Matrix::Zero(4 * h, h), Vector::Zero(4 * h)};
    }

    /// Uniform in [-1/sqrt(h), 1/sqrt(h)], forget-gate bias 1.
    static LstmParams random(Index e, Index h, Rng& rng) {
        auto p = zeros(e, h);
        const double r = 1.0 / std::sqrt(static_cast<double>(h));
        for (Index j = 0; j < p.input_weights.size(); ++j) p.input_weights.data()[j] = uniform_real(rng, -r, r);
        for (Index j = 0; j < p.recurrent_weights.size(); ++j) {
            p.recurrent_weights.data()[j] = uniform_real(rng, -r, r);
        }
        for (Index j = 0; j < p.bias.size(); ++j) p.bias[j] = uniform_real(rng, -r, r);
        p.bias.segment(h, h).setOnes();
        return p;
    }
};

/// W is d x 2h and consumes [forward; backward].
struct ProjectionParams {
    Matrix weight;
    Vector bias;

    Index output_dim() const { return weight.rows(); }

    static ProjectionParams zeros(Index d, Index two_h) { return {Matrix::Zero(d, two_h), Vector::Zero(d)}; }

    static ProjectionParams random(Index d, Index two_h, Rng& rng) {
        auto p = zeros(d, two_h);
        // He-uniform, suited to the ReLU that follows.
        const double r = std::sqrt(6.0 / static_cast<double>(two_h));
        for (Index j = 0; j < p.weight.size(); ++j) p.weight.data()[j] = uniform_real(rng, -r, r);
        return p;
    }
};

/// Row i is the input vector of trigram id i; row 0 is the unknown trigram.
struct EmbeddingTable {
    RowMatrix rows;

    Index vocab_rows() const { return rows.rows(); }
    Index dim() const { return rows.cols(); }

    static EmbeddingTable zeros(Index n_plus_one, Index e) { return {RowMatrix::Zero(n_plus_one, e)}; }

    static EmbeddingTable random(Index n_plus_one, Index e, Rng& rng) {
        auto t = zeros(n_plus_one, e);
        for (Index j = 0; j < t.rows.size(); ++j) t.rows.data()[j] = uniform_real(rng, -0.1, 0.1);
        return t;
    }
};

// ---------------------------------------------------------------------------
// LSTM.

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

struct LstmState {
    Vector h;
    Vector c;
};

namespace detail {

/// Activated gates from pre-activations, in place: sigmoid on i/f/o, tanh on g.
inline void activate_gates(Vector& z, Index h) {
    for (Index k = 0; k < 3 * h; ++k) z[k] = sigmoid(z[k]);
    for (Index k = 3 * h; k < 4 * h; ++k) z[k] = std::tanh(z[k]);
}

}  // namespace detail

inline LstmState lstm_step(const LstmParams& p, const Vector& x, const Vector& h_prev, const Vector& c_prev) {
    const Index h = p.hidden_dim();
    if (x.size() != p.input_dim() || h_prev.size() != h || c_prev.size() != h) {
        throw InvalidArgument("lstm_step: shape mismatch");
    }
    if (!x.allFinite() || !h_prev.allFinite() || !c_prev.allFinite()) {
        throw InvalidArgument("lstm_step: non-finite input");
    }
    Vector z = p.input_weights * x + p.recurrent_weights * h_prev + p.bias;
    detail::activate_gates(z, h);
    LstmState out;
    out.c = z.segment(h, h).cwiseProduct(c_prev) + z.segment(0, h).cwiseProduct(z.segment(3 * h, h));
    out.h = z.segment(2 * h, h).cwiseProduct(out.c.array().tanh().matrix());
    return out;
}

/// Everything the backward pass needs from one directional run.
struct LstmTrace {
    std::vector<std::uint32_t> ids;  // in processing order
    Matrix gates;                    // 4h x T, activated
    Matrix cells;                    // h x (T+1), column 0 is the zero initial state
    Matrix hidden;                   // h x (T+1)

    Vector final_hidden() const { return hidden.col(hidden.cols() - 1); }
};

/// Runs the recurrence from the zero state over `ids` (reversed when
/// `reverse`), looking inputs up in `emb`.
inline LstmTrace lstm_run(const LstmParams& p, const EmbeddingTable& emb, std::span<const std::uint32_t> ids,
                          bool reverse) {
    if (ids.empty()) throw InvalidArgument("cannot encode an empty sequence");
    if (emb.dim() != p.input_dim()) throw InvalidArgument("embedding dim does not match LSTM input dim");
    const Index h = p.hidden_dim();
    const auto steps = static_cast<Index>(ids.size());
    LstmTrace tr;
    tr.ids.assign(ids.begin(), ids.end());
    if (reverse) std::reverse(tr.ids.begin(), tr.ids.end());
    tr.gates.resize(4 * h, steps);
    tr.cells = Matrix::Zero(h, steps + 1);
    tr.hidden = Matrix::Zero(h, steps + 1);

    Vector z(4 * h);
    for (Index t = 0; t < steps; ++t) {
        const auto id = tr.ids[static_cast<std::size_t>(t)];
        if (static_cast<Index>(id) >= emb.vocab_rows()) throw InvalidArgument("trigram id outside embedding table");
        z.noalias() = p.bias;
        z.noalias() += p.input_weights * emb.rows.row(id).transpose();
        z.noalias() += p.recurrent_weights * tr.hidden.col(t);
        detail::activate_gates(z, h);
        tr.gates.col(t) = z;
        tr.cells.col(t + 1) =
            z.segment(h, h).cwiseProduct(tr.cells.col(t)) + z.segment(0, h).cwiseProduct(z.segment(3 * h, h));
        tr.hidden.col(t + 1) = z.segment(2 * h, h).cwiseProduct(tr.cells.col(t + 1).array().tanh().matrix());
    }
    return tr;
}

/// Backpropagation through time from a gradient on the final hidden state.
/// Accumulates into `grad` and into rows of `emb_grad`.
inline void lstm_backward(const LstmParams& p, const EmbeddingTable& emb, const LstmTrace& tr,
                          const Vector& d_final_hidden, LstmParams& grad, EmbeddingTable& emb_grad) {
    const Index h = p.hidden_dim();
    const Index steps = tr.gates.cols();
    Vector dh = d_final_hidden;
    Vector dc = Vector::Zero(h);
    Vector da(4 * h);
    for (Index t = steps - 1; t >= 0; --t) {
        const auto g = tr.gates.col(t);
        const auto in = g.segment(0, h);
        const auto fg = g.segment(h, h);
        const auto og = g.segment(2 * h, h);
        const auto cand = g.segment(3 * h, h);
        const Vector tanh_c = tr.cells.col(t + 1).array().tanh();

        dc.array() += dh.array() * og.array() * (1.0 - tanh_c.array().square());
        da.segment(0, h) = (dc.array() * cand.array() * in.array() * (1.0 - in.array())).matrix();
        da.segment(h, h) = (dc.array() * tr.cells.col(t).array() * fg.array() * (1.0 - fg.array())).matrix();
        da.segment(2 * h, h) = (dh.array() * tanh_c.array() * og.array() * (1.0 - og.array())).matrix();
        da.segment(3 * h, h) = (dc.array() * in.array() * (1.0 - cand.array().square())).matrix();

        const auto id = tr.ids[static_cast<std::size_t>(t)];
        grad.input_weights.noalias() += da * emb.rows.row(id);
        grad.recurrent_weights.noalias() += da * tr.hidden.col(t).transpose();
        grad.bias += da;
        emb_grad.rows.row(id).noalias() += (p.input_weights.transpose() * da).transpose();

        dh.noalias() = p.recurrent_weights.transpose() * da;
        dc = dc.cwiseProduct(fg);
    }
}

struct BiEncoding {
    Vector forward;
    Vector backward;
};

/// Final hidden states of a forward pass over `ids` and of a backward pass
/// over the reversed sequence; the two directions use their own parameters.
inline BiEncoding bilstm_encode(const LstmParams& fw_params, const LstmParams& bw_params, const EmbeddingTable& emb,
                                std::span<const std::uint32_t> ids) {
    return {lstm_run(fw_params, emb, ids, false).final_hidden(), lstm_run(bw_params, emb, ids, true).final_hidden()};
}

// ---------------------------------------------------------------------------
// Projection.

/// relu(W [fw; bw] + b).
inline Vector project(const ProjectionParams& p, const Vector& fw, const Vector& bw) {
    if (fw.size() + bw.size() != p.weight.cols()) throw InvalidArgument("project: shape mismatch");
    Vector z = p.bias;
    z.noalias() += p.weight.leftCols(fw.size()) * fw;
    z.noalias() += p.weight.rightCols(bw.size()) * bw;
    return z.cwiseMax(0.0);
}

/// Gradient of the projection given its output `s` and upstream `ds`.
/// Units with s = 0 pass no gradient. Returns d/d[fw; bw].
inline Vector project_backward(const ProjectionParams& p, const Vector& fw, const Vector& bw, const Vector& s,
                               const Vector& ds, ProjectionParams& grad) {
    Vector dz = (s.array() > 0.0).select(ds, 0.0);
    Vector in(fw.size() + bw.size());
    in << fw, bw;
    grad.weight.noalias() += dz * in.transpose();
    grad.bias += dz;
    return p.weight.transpose() * dz;
}

// ---------------------------------------------------------------------------
// Gradient checking.

/// Max over coordinates of |g_a - g_n| / max(1e-8, |g_a| + |g_n|), where g_n is
/// the central difference (f(t+eps) - f(t-eps)) / (2 eps).
template <class LossFn>
double finite_diff_check(LossFn&& loss_fn, std::vector<double> params, std::span<const double> analytic,
                         double eps) {
    if (!(eps >= 1e-7 && eps <= 1e-3)) throw InvalidArgument("finite_diff_check: eps must lie in [1e-7, 1e-3]");
    if (analytic.size() != params.size()) throw InvalidArgument("finite_diff_check: gradient size mismatch");
    auto eval = [&](const std::vector<double>& theta) {
        const double v = loss_fn(std::span<const double>(theta));
        if (!std::isfinite(v)) throw Error("finite_diff_check: non-finite loss");
        return v;
    };
    eval(params);
    double worst = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double saved = params[i];
        params[i] = saved + eps;
        const double up = eval(params);
        params[i] = saved - eps;
        const double down = eval(params);
        params[i] = saved;
        const double numeric = (up - down) / (2.0 * eps);
        const double err =
            std::abs(analytic[i] - numeric) / std::max(1e-8, std::abs(analytic[i]) + std::abs(numeric));
        worst = std::max(worst, err);
    }
    return worst;
}

}  // namespace sacmt
