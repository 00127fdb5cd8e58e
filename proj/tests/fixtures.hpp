#pragma once

// Shared builders for the siamese tests and the acceptance suite.

#include <vector>

#include "sacmt/random.hpp"
#include "sacmt/siamese.hpp"

namespace testutil {

inline sacmt::TrigramSeq random_seq(sacmt::Rng& rng, std::size_t vocab_size, std::size_t max_len) {
    sacmt::TrigramSeq s;
    const auto len = 1 + sacmt::uniform_index(rng, max_len);
    for (std::size_t i = 0; i < len; ++i) s.ids.push_back(static_cast<sacmt::TrigramId>(sacmt::uniform_index(rng, vocab_size + 1)));
    return s;
}

inline std::vector<sacmt::Pair> random_pairs(sacmt::Rng& rng, std::size_t vocab_size, std::size_t count,
                                             std::size_t max_len) {
    std::vector<sacmt::Pair> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        sacmt::Pair p;
        p.left = random_seq(rng, vocab_size, max_len);
        p.right = random_seq(rng, vocab_size, max_len);
        p.y = sacmt::uniform_index(rng, 2) ? sacmt::PairLabel::Similar : sacmt::PairLabel::Dissimilar;
        pairs.push_back(std::move(p));
    }
    return pairs;
}

/// Every parameter drawn from U(-1, 1). The small initializer scale leaves
/// gradients near 1e-9, below what central differences can resolve.
inline sacmt::SiameseParams random_params(const sacmt::ModelShape& shape, sacmt::Rng& rng) {
    auto p = sacmt::SiameseParams::zeros(shape);
    auto theta = p.flatten();
    for (auto& t : theta) t = sacmt::uniform_real(rng, -1.0, 1.0);
    p.unflatten(theta);
    return p;
}

/// Max relative error between the hand-derived batch gradient and central
/// differences of batch_loss over every parameter.
inline double batch_gradient_error(const sacmt::SiameseParams& p, const std::vector<sacmt::Pair>& pairs, double margin,
                                   double eps) {
    sacmt::Gradient grad(p.shape());
    sacmt::batch_loss_and_gradient(p, pairs, margin, grad);
    const auto analytic = grad.tensors().flatten();
    auto scratch = p;
    auto loss = [&](std::span<const double> theta) {
        scratch.unflatten(theta);
        return sacmt::batch_loss(scratch, pairs, margin);
    };
    return sacmt::finite_diff_check(loss, p.flatten(), analytic, eps);
}

}  // namespace testutil
