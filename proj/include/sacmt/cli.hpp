#pragma once

// Command-line front end. Every subcommand writes its artifacts atomically
// and prints a one-line JSON summary on stdout.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "sacmt/baseline.hpp"
#include "sacmt/classify.hpp"
#include "sacmt/corpus.hpp"
#include "sacmt/io.hpp"
#include "sacmt/pipeline.hpp"
#include "sacmt/siamese.hpp"
#include "sacmt/skipgram.hpp"
#include "sacmt/variants.hpp"
#include "sacmt/vocab.hpp"

namespace sacmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Appends `--key value` for every entry of the JSON config named by
/// `--config` whose flag is not already on the command line, so explicit
/// flags win over the file.
inline std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::optional<std::string> path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[++i];
        } else if (args[i].starts_with("--config=")) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (!path) return rest;
    nlohmann::json cfg;
    try {
        cfg = nlohmann::json::parse(io::read_file(*path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config " + *path + ": " + e.what());
    }
    if (!cfg.is_object()) throw ParseError("config " + *path + " must be a JSON object");
    auto given = [&](const std::string& flag) {
        return std::any_of(rest.begin(), rest.end(),
                           [&](const std::string& a) { return a == flag || a.starts_with(flag + "="); });
    };
    auto scalar = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (const auto& [key, value] : cfg.items()) {
        const auto flag = "--" + key;
        if (given(flag)) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) rest.push_back(flag);
        } else if (value.is_array()) {
            for (const auto& v : value) {
                rest.push_back(flag);
                rest.push_back(scalar(v));
            }
        } else {
            rest.push_back(flag);
            rest.push_back(scalar(value));
        }
    }
    return rest;
}

namespace detail {

struct SkipgramFlags {
    SkipgramConfig cfg;

    void add(CLI::App* app, const std::string& prefix) {
        app->add_option("--" + prefix + "dim", cfg.dim, "skip-gram vector dimension")->capture_default_str();
        app->add_option("--" + prefix + "window", cfg.window, "skip-gram context window")->capture_default_str();
        app->add_option("--" + prefix + "negatives", cfg.negatives, "negative samples per context")
            ->capture_default_str();
        app->add_option("--" + prefix + "epochs", cfg.epochs, "skip-gram epochs")->capture_default_str();
        app->add_option("--" + prefix + "lr", cfg.lr, "initial skip-gram learning rate")->capture_default_str();
        app->add_option("--" + prefix + "min-count", cfg.min_count, "minimum word count")->capture_default_str();
    }
};

inline Sentiment majority_class(const LabeledCorpus& c) {
    const auto counts = c.class_counts();
    std::size_t best = 0;
    for (std::size_t k = 1; k < kNumClasses; ++k) {
        if (counts[k] > counts[best]) best = k;
    }
    return kAllSentiments[best];
}

inline void write_json(const std::string& path, const nlohmann::json& j) { io::atomic_write(path, j.dump(2) + "\n"); }

inline std::string dataset_name(const std::string& path) { return std::filesystem::path(path).stem().string(); }

inline std::size_t distinct_tokens(const std::vector<const LabeledCorpus*>& corpora) {
    std::set<std::string> seen;
    for (const auto* c : corpora) {
        for (const auto& s : *c) {
            for (auto& w : tokenize(normalize(s.text))) seen.insert(std::move(w));
        }
    }
    return seen.size();
}

inline std::string error_category(const std::exception& e) {
    if (dynamic_cast<const ModelFileError*>(&e)) return "model-file";
    if (dynamic_cast<const TrainingError*>(&e)) return "training";
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid-argument";
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return "json";
    if (dynamic_cast<const std::filesystem::filesystem_error*>(&e)) return "io";
    if (dynamic_cast<const Error*>(&e)) return "pipeline";
    return "internal";
}

}  // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Contrastive sentiment analysis for code-mixed text"};
    app.name("sacmt");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");
    app.footer("Any flag may also come from a JSON object passed with --config FILE; command-line flags win.");
    nlohmann::json summary;

    // stats -------------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "Dataset statistics and emoji class distribution");
    std::vector<std::string> stats_data;
    std::string stats_out, stats_table, stats_emoji_map, stats_emoji_table;
    stats->add_option("--data", stats_data, "TSV dataset (repeatable)")->required();
    stats->add_option("--out", stats_out, "write statistics JSON here");
    stats->add_option("--table", stats_table, "write the words / trigrams / class-share table here");
    stats->add_option("--emoji-map", stats_emoji_map, "JSON emoji -> label map; adds the emoji distribution");
    stats->add_option("--emoji-table", stats_emoji_table, "write the emoji class distribution table here");
    stats->callback([&] {
        nlohmann::json report = nlohmann::json::array();
        std::vector<std::pair<std::string, CorpusStats>> rows;
        std::vector<std::pair<std::string, LabeledCorpus>> relabeled;
        std::optional<EmojiMap> map;
        if (!stats_emoji_map.empty()) map = load_emoji_map(stats_emoji_map);
        for (const auto& path : stats_data) {
            auto corpus = load_dataset(path);
            auto st = corpus_stats(corpus);
            nlohmann::json entry = {{"dataset", detail::dataset_name(path)}, {"stats", st.to_json()}};
            if (map) {
                auto r = relabel_by_emoji(corpus, *map);
                entry["emoji"] = {{"kept", r.corpus.size()}, {"dropped", r.dropped}};
                relabeled.emplace_back(detail::dataset_name(path), std::move(r.corpus));
            }
            rows.emplace_back(detail::dataset_name(path), st);
            report.push_back(std::move(entry));
        }
        if (!stats_out.empty()) detail::write_json(stats_out, {{"datasets", report}});
        if (!stats_table.empty()) io::atomic_write(stats_table, format_stats_table(rows));
        if (map && !stats_emoji_table.empty()) {
            io::atomic_write(stats_emoji_table, format_emoji_distribution(*map, relabeled));
        }
        summary = {{"command", "stats"}, {"datasets", report}};
    });

    // skipgram ----------------------------------------------------------
    auto* sg = app.add_subcommand("skipgram", "Train skip-gram word embeddings");
    std::vector<std::string> sg_data;
    std::string sg_out;
    detail::SkipgramFlags sg_flags;
    sg->add_option("--data", sg_data, "TSV dataset (repeatable)")->required();
    sg->add_option("--out", sg_out, "embedding JSON to write")->required();
    sg->add_option("--seed", sg_flags.cfg.seed, "random seed")->required();
    sg_flags.add(sg, "");
    sg->callback([&] {
        std::vector<LabeledCorpus> corpora;
        std::vector<const LabeledCorpus*> ptrs;
        for (const auto& p : sg_data) corpora.push_back(load_dataset(p));
        for (const auto& c : corpora) ptrs.push_back(&c);
        std::vector<double> history;
        auto emb = train_skipgram(pooled_sentences(ptrs), sg_flags.cfg, &history);
        save_embeddings(emb, sg_out);
        summary = {{"command", "skipgram"}, {"out", sg_out},         {"words", emb.size()},
                   {"dim", emb.dim()},      {"objective", history}};
    });

    // cluster -----------------------------------------------------------
    auto* cl = app.add_subcommand("cluster", "Cluster transliteration variants into a canonical-form map");
    std::vector<std::string> cl_data;
    std::string cl_emb, cl_out, cl_report;
    double cl_tau = 0.6;
    cl->add_option("--data", cl_data, "TSV dataset supplying word frequencies (repeatable)")->required();
    cl->add_option("--embeddings", cl_emb, "embedding JSON")->required();
    cl->add_option("--tau", cl_tau, "similarity threshold")->capture_default_str();
    cl->add_option("--out", cl_out, "cluster map JSON to write")->required();
    cl->add_option("--report", cl_report, "write the cluster report here");
    cl->callback([&] {
        WordFrequencies freq;
        for (const auto& p : cl_data) {
            for (const auto& [w, n] : word_frequencies(load_dataset(p))) freq[w] += n;
        }
        auto map = cluster_variants(freq, load_embeddings(cl_emb), cl_tau);
        save_cluster_map(map, cl_out);
        if (!cl_report.empty()) io::atomic_write(cl_report, map.report());
        summary = {{"command", "cluster"}, {"out", cl_out},           {"words", freq.size()},
                   {"clusters", map.clusters().size()}, {"skipped", map.skipped()}};
    });

    // preprocess --------------------------------------------------------
    auto* pp = app.add_subcommand("preprocess", "Rewrite transliteration variants to their canonical forms");
    std::string pp_data, pp_out, pp_emb, pp_clusters, pp_report, pp_map_out;
    double pp_tau = 0.6;
    bool pp_skip = false;
    std::optional<std::uint64_t> pp_seed;
    detail::SkipgramFlags pp_sg;
    pp->add_option("--data", pp_data, "TSV dataset")->required();
    pp->add_option("--out", pp_out, "rewritten TSV to write")->required();
    pp->add_option("--embeddings", pp_emb, "embedding JSON (trained from --data when absent)");
    pp->add_option("--clusters", pp_clusters, "apply an existing cluster map instead of clustering");
    pp->add_option("--tau", pp_tau, "similarity threshold")->capture_default_str();
    pp->add_option("--report", pp_report, "write the cluster report here");
    pp->add_option("--map-out", pp_map_out, "write the cluster map here");
    pp->add_option("--seed", pp_seed, "random seed (required when embeddings are trained)");
    pp->add_flag("--no-preprocess", pp_skip, "copy the data unchanged");
    pp_sg.add(pp, "sg-");
    pp->callback([&] {
        auto corpus = load_dataset(pp_data);
        const auto before = detail::distinct_tokens({&corpus});
        ClusterMap map;
        if (!pp_skip) {
            if (!pp_clusters.empty()) {
                map = load_cluster_map(pp_clusters);
                corpus = apply_clusters(corpus, map);
            } else {
                WordEmbeddings emb;
                if (!pp_emb.empty()) {
                    emb = load_embeddings(pp_emb);
                } else {
                    if (!pp_seed) throw InvalidArgument("--seed is required when embeddings are trained");
                    pp_sg.cfg.seed = *pp_seed;
                    emb = train_skipgram(corpus, pp_sg.cfg);
                }
                auto r = preprocess_pipeline(corpus, emb, pp_tau);
                corpus = std::move(r.corpora.front());
                map = std::move(r.clusters);
            }
        }
        save_dataset(corpus, pp_out);
        if (!pp_report.empty()) io::atomic_write(pp_report, map.report());
        if (!pp_map_out.empty()) save_cluster_map(map, pp_map_out);
        summary = {{"command", "preprocess"}, {"out", pp_out}, {"sentences", corpus.size()},
                   {"clusters", map.clusters().size()}, {"preprocessed", !pp_skip},
                   {"distinct_tokens", {{"before", before}, {"after", detail::distinct_tokens({&corpus})}}}};
    });

    // train -------------------------------------------------------------
    auto* tr = app.add_subcommand("train", "Train the siamese sentiment encoder");
    std::string tr_left, tr_right, tr_out, tr_mode = "sentiment", tr_emoji_map, tr_emoji_table, tr_history,
                                          tr_anchors = "left", tr_report;
    TrainConfig tr_cfg;
    double tr_tau = 0.6;
    bool tr_no_pre = false, tr_mixed = false;
    detail::SkipgramFlags tr_sg;
    tr->add_option("--left", tr_left, "TSV corpus to classify (e.g. code-mixed)")->required();
    tr->add_option("--right", tr_right, "TSV partner corpus (e.g. English); pairs within --left when absent");
    tr->add_option("--out", tr_out, "model file to write")->required();
    tr->add_option("--seed", tr_cfg.seed, "random seed")->required();
    tr->add_option("--mode", tr_mode, "pair alignment by sentiment tag or by emoji")
        ->check(CLI::IsMember({"sentiment", "emoji"}))
        ->capture_default_str();
    tr->add_option("--emoji-map", tr_emoji_map, "JSON emoji -> label map (emoji mode)");
    tr->add_option("--emoji-table", tr_emoji_table, "write the emoji class distribution table here");
    tr->add_option("--margin", tr_cfg.margin, "contrastive margin in (0,1)")->capture_default_str();
    tr->add_option("--dim", tr_cfg.output_dim, "sentiment space dimension d")->capture_default_str();
    tr->add_option("--hidden", tr_cfg.hidden_dim, "LSTM hidden size h")->capture_default_str();
    tr->add_option("--embed-dim", tr_cfg.embed_dim, "trigram embedding size e")->capture_default_str();
    tr->add_option("--lr", tr_cfg.lr, "learning rate (loss is summed over the batch)")->capture_default_str();
    tr->add_option("--batch", tr_cfg.batch_size, "pairs per batch")->capture_default_str();
    tr->add_option("--epochs", tr_cfg.epochs, "training epochs")->capture_default_str();
    tr->add_option("--clip", tr_cfg.clip_norm, "global gradient-norm clip")->capture_default_str();
    tr->add_option("--tau", tr_tau, "variant similarity threshold")->capture_default_str();
    tr->add_flag("--no-preprocess", tr_no_pre, "skip transliteration-variant clustering");
    tr->add_flag("--mixed-pairs", tr_mixed, "also pair --left with itself when --right is given");
    tr->add_option("--anchors", tr_anchors, "training sentences used for the class centroids")
        ->check(CLI::IsMember({"left", "both"}))
        ->capture_default_str();
    tr->add_option("--history", tr_history, "write per-epoch training loss JSON here");
    tr->add_option("--report", tr_report, "write the cluster report here");
    tr_sg.add(tr, "sg-");
    tr->callback([&] {
        auto left = load_dataset(tr_left);
        std::optional<LabeledCorpus> right;
        if (!tr_right.empty()) right = load_dataset(tr_right);
        nlohmann::json info = {{"command", "train"}, {"out", tr_out}, {"mode", tr_mode}};

        if (tr_mode == "emoji") {
            if (tr_emoji_map.empty()) throw InvalidArgument("--emoji-map is required in emoji mode");
            const auto map = load_emoji_map(tr_emoji_map);
            auto l = relabel_by_emoji(left, map);
            info["dropped"] = {{"left", l.dropped}};
            left = std::move(l.corpus);
            std::vector<std::pair<std::string, LabeledCorpus>> dist{{detail::dataset_name(tr_left), left}};
            if (right) {
                auto r = relabel_by_emoji(*right, map);
                info["dropped"]["right"] = r.dropped;
                right = std::move(r.corpus);
                dist.emplace_back(detail::dataset_name(tr_right), *right);
            }
            if (!tr_emoji_table.empty()) io::atomic_write(tr_emoji_table, format_emoji_distribution(map, dist));
        }

        std::optional<ClusterMap> clusters;
        std::vector<const LabeledCorpus*> corpora{&left};
        if (right) corpora.push_back(&*right);
        info["distinct_tokens"]["before"] = detail::distinct_tokens(corpora);
        if (!tr_no_pre) {
            tr_sg.cfg.seed = tr_cfg.seed;
            const auto emb = train_skipgram(pooled_sentences(corpora), tr_sg.cfg);
            auto r = preprocess_pipeline(corpora, emb, tr_tau);
            left = std::move(r.corpora[0]);
            if (right) right = std::move(r.corpora[1]);
            clusters = std::move(r.clusters);
            corpora = {&left};
            if (right) corpora.push_back(&*right);
            if (!tr_report.empty()) io::atomic_write(tr_report, clusters->report());
            info["clusters"] = clusters->clusters().size();
        }

        info["distinct_tokens"]["after"] = detail::distinct_tokens(corpora);
        auto vocab = build_vocab(left);
        if (right) vocab.extend(*right);
        std::vector<Pair> pairs;
        if (right) {
            pairs = make_pairs(left, *right, vocab, tr_cfg.seed);
            if (tr_mixed) {
                auto mono = make_pairs(left, vocab, tr_cfg.seed + 1);
                pairs.insert(pairs.end(), mono.begin(), mono.end());
            }
        } else {
            pairs = make_pairs(left, vocab, tr_cfg.seed);
        }

        tr_cfg.validate();
        auto result = train(SiameseParams::init(tr_cfg.shape(static_cast<Index>(vocab.size())), tr_cfg.seed), pairs,
                            tr_cfg);

        EmbeddedCorpus anchors = embed_corpus(result.params, vocab, left);
        if (tr_anchors == "both" && right) {
            auto more = embed_corpus(result.params, vocab, *right);
            anchors.vectors.insert(anchors.vectors.end(), more.vectors.begin(), more.vectors.end());
            anchors.labels.insert(anchors.labels.end(), more.labels.begin(), more.labels.end());
        }
        SiameseModel model{std::move(result.params), tr_cfg, std::move(vocab), nlohmann::json::object()};
        model.extras["centroids"] = centroids_from(anchors).to_json();
        model.extras["majority_class"] = std::string(to_string(detail::majority_class(left)));
        model.extras["mode"] = tr_mode;
        model.extras["clusters"] = clusters ? clusters->to_json() : nlohmann::json();
        save_model(model, tr_out);
        if (!tr_history.empty()) detail::write_json(tr_history, {{"loss", result.history}});

        info["pairs"] = pairs.size();
        info["vocab"] = model.vocab.size();
        info["epochs"] = tr_cfg.epochs;
        info["final_loss"] = result.history.empty() ? 0.0 : result.history.back();
        summary = std::move(info);
    });

    // eval --------------------------------------------------------------
    auto* ev = app.add_subcommand("eval", "Evaluate a trained model on labeled data");
    std::string ev_model, ev_data, ev_out, ev_anchors, ev_zero = "neutral", ev_table, ev_name = "SACMT",
                                                       ev_paired, ev_emoji_map;
    std::size_t ev_knn = 0;
    ev->add_option("--model", ev_model, "model file")->required();
    ev->add_option("--data", ev_data, "TSV test corpus")->required();
    ev->add_option("--out", ev_out, "write metrics JSON here");
    ev->add_option("--anchors", ev_anchors, "TSV corpus to recompute centroids from (required for --knn)");
    ev->add_option("--knn", ev_knn, "classify by k nearest anchors instead of centroids");
    ev->add_option("--zero-class", ev_zero, "class for an all-zero sentence vector")
        ->check(CLI::IsMember({"negative", "neutral", "positive", "majority"}))
        ->capture_default_str();
    ev->add_option("--emoji-map", ev_emoji_map, "relabel the test corpus by emoji first");
    ev->add_option("--table", ev_table, "write an accuracy / precision / recall / F-score table here");
    ev->add_option("--name", ev_name, "model name for the table")->capture_default_str();
    ev->add_option("--paired-with", ev_paired,
                   "metrics JSON of the run without preprocessing; --table then shows both side by side");
    ev->callback([&] {
        const auto model = load_model(ev_model);
        auto prepare = [&](LabeledCorpus c) {
            if (!ev_emoji_map.empty()) c = relabel_by_emoji(c, load_emoji_map(ev_emoji_map)).corpus;
            if (model.extras.contains("clusters") && !model.extras["clusters"].is_null()) {
                c = apply_clusters(c, ClusterMap::from_json(model.extras["clusters"]));
            }
            return c;
        };
        const auto test = prepare(load_dataset(ev_data));
        if (test.empty()) throw InvalidArgument("test corpus is empty");

        PredictOptions opt;
        if (ev_zero == "majority") {
            opt.zero_vector_class = parse_sentiment(model.extras.value("majority_class", std::string("neutral")));
        } else {
            opt.zero_vector_class = parse_sentiment(ev_zero);
        }
        std::optional<EmbeddedCorpus> anchors;
        if (!ev_anchors.empty()) anchors = embed_corpus(model.params, model.vocab, prepare(load_dataset(ev_anchors)));
        if (ev_knn > 0 && !anchors) throw InvalidArgument("--knn needs --anchors");
        Centroids centroids;
        if (anchors) {
            centroids = centroids_from(*anchors);
        } else if (model.extras.contains("centroids")) {
            centroids = Centroids::from_json(model.extras["centroids"]);
        } else {
            throw InvalidArgument("model has no centroids; pass --anchors");
        }

        std::vector<Sentiment> gold, pred;
        for (const auto& s : test) {
            const Vector v = forward(model.params, encode(s, model.vocab)).values;
            gold.push_back(s.sentiment());
            pred.push_back(ev_knn > 0 ? predict_knn(v, *anchors, ev_knn, opt) : predict_vector(v, centroids, opt));
        }
        const auto metrics = metrics_from(gold, pred);
        if (!ev_out.empty()) detail::write_json(ev_out, metrics.to_json());
        if (!ev_table.empty()) {
            if (!ev_paired.empty()) {
                const auto other = Metrics::from_json(nlohmann::json::parse(io::read_file(ev_paired)));
                io::atomic_write(ev_table, format_ablation_table({{ev_name, metrics, other}}));
            } else {
                io::atomic_write(ev_table, format_metrics_table({{ev_name, metrics}}));
            }
        }
        summary = {{"command", "eval"}, {"metrics", metrics.to_json()}};
    });

    // baseline-asv ------------------------------------------------------
    auto* asv = app.add_subcommand("baseline-asv", "Averaged skip-gram vectors + L2 logistic regression");
    std::string asv_train, asv_test, asv_emb, asv_out, asv_model_out, asv_table, asv_name = "ASV";
    LogRegConfig asv_cfg;
    double asv_tau = 0.6;
    bool asv_no_pre = false;
    detail::SkipgramFlags asv_sg;
    asv->add_option("--train", asv_train, "TSV training corpus")->required();
    asv->add_option("--test", asv_test, "TSV test corpus")->required();
    asv->add_option("--embeddings", asv_emb, "embedding JSON (trained from --train when absent)");
    asv->add_option("--seed", asv_cfg.seed, "random seed")->required();
    asv->add_option("--l2", asv_cfg.l2, "L2 regularization coefficient")->capture_default_str();
    asv->add_option("--epochs", asv_cfg.epochs, "gradient descent iterations")->capture_default_str();
    asv->add_option("--lr", asv_cfg.lr, "step size")->capture_default_str();
    asv->add_option("--tau", asv_tau, "variant similarity threshold")->capture_default_str();
    asv->add_flag("--no-preprocess", asv_no_pre, "skip transliteration-variant clustering");
    asv->add_option("--out", asv_out, "write metrics JSON here");
    asv->add_option("--model-out", asv_model_out, "write the logistic regression weights here");
    asv->add_option("--table", asv_table, "write an accuracy / precision / recall / F-score table here");
    asv->add_option("--name", asv_name, "model name for the table")->capture_default_str();
    asv_sg.add(asv, "sg-");
    asv->callback([&] {
        auto train_c = load_dataset(asv_train);
        auto test_c = load_dataset(asv_test);
        WordEmbeddings emb;
        if (!asv_emb.empty()) {
            emb = load_embeddings(asv_emb);
        } else {
            asv_sg.cfg.seed = asv_cfg.seed;
            emb = train_skipgram(train_c, asv_sg.cfg);
        }
        std::size_t clusters = 0;
        if (!asv_no_pre) {
            auto r = preprocess_pipeline(train_c, emb, asv_tau);
            train_c = std::move(r.corpora.front());
            test_c = apply_clusters(test_c, r.clusters);
            clusters = r.clusters.clusters().size();
        }
        std::vector<Vector> xs;
        std::vector<Sentiment> ys;
        for (const auto& s : train_c) {
            xs.push_back(asv_vector(s, emb));
            ys.push_back(s.sentiment());
        }
        const auto model = train_logreg(xs, ys, asv_cfg);
        std::vector<Sentiment> gold, pred;
        for (const auto& s : test_c) {
            gold.push_back(s.sentiment());
            pred.push_back(predict_logreg(model, asv_vector(s, emb)));
        }
        const auto metrics = metrics_from(gold, pred);
        if (!asv_out.empty()) detail::write_json(asv_out, metrics.to_json());
        if (!asv_model_out.empty()) save_logreg(model, asv_model_out);
        if (!asv_table.empty()) io::atomic_write(asv_table, format_metrics_table({{asv_name, metrics}}));
        summary = {{"command", "baseline-asv"}, {"clusters", clusters}, {"metrics", metrics.to_json()}};
    });

    // embed -------------------------------------------------------------
    auto* em = app.add_subcommand("embed", "Project sentences into the learned sentiment space");
    std::string em_model, em_data, em_out;
    em->add_option("--model", em_model, "model file")->required();
    em->add_option("--data", em_data, "TSV corpus")->required();
    em->add_option("--out", em_out, "vector JSON to write")->required();
    em->callback([&] {
        const auto model = load_model(em_model);
        auto corpus = load_dataset(em_data);
        if (model.extras.contains("clusters") && !model.extras["clusters"].is_null()) {
            corpus = apply_clusters(corpus, ClusterMap::from_json(model.extras["clusters"]));
        }
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& s : corpus) {
            const Vector v = forward(model.params, encode(s, model.vocab)).values;
            rows.push_back({{"id", s.id},
                            {"label", std::string(to_string(s.sentiment()))},
                            {"vector", std::vector<double>(v.data(), v.data() + v.size())}});
        }
        detail::write_json(em_out, {{"dim", model.params.shape().output_dim}, {"sentences", rows}});
        summary = {{"command", "embed"}, {"out", em_out}, {"sentences", corpus.size()}};
    });

    try {
        args = expand_config(std::move(args));
    } catch (const std::exception& e) {
        err << "error [config]: " << e.what() << "\n";
        return kExitUsage;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error [usage]: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error [" << detail::error_category(e) << "]: " << e.what() << "\n";
        return kExitFailure;
    }
    out << summary.dump() << "\n";
    return kExitOk;
}

inline int run(int argc, char** argv) {
    return run(std::vector<std::string>(argv + 1, argv + argc));
}

}  // namespace sacmt::cli
