// Writes the seeded toy corpora used by the demos and the acceptance suite:
// a bilingual pair of datasets, a transliteration-variant corpus, an
// emoji-tagged copy of the code-mixed side and the emoji map.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "sacmt/corpus.hpp"
#include "sacmt/io.hpp"
#include "sacmt/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate synthetic sentiment corpora"};
    std::string dir;
    sacmt::synthetic::BilingualConfig bi;
    sacmt::synthetic::VariantCorpusConfig var;
    sacmt::synthetic::EmojiCorpusConfig emo;
    app.add_option("--out-dir", dir, "directory to write into")->required();
    app.add_option("--seed", bi.seed, "seed of the bilingual corpora")->capture_default_str();
    app.add_option("--train-per-class", bi.train_per_class)->capture_default_str();
    app.add_option("--test-per-class", bi.test_per_class)->capture_default_str();
    app.add_option("--variant-seed", var.seed)->capture_default_str();
    app.add_option("--emoji-seed", emo.seed)->capture_default_str();
    app.add_option("--conflict-rate", emo.conflict_rate)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        namespace fs = std::filesystem;
        fs::create_directories(dir);
        const fs::path root(dir);
        const auto c = sacmt::synthetic::bilingual(bi);
        sacmt::save_dataset(c.left_train, root / "cm_train.tsv");
        sacmt::save_dataset(c.left_test, root / "cm_test.tsv");
        sacmt::save_dataset(c.right_train, root / "en_train.tsv");
        sacmt::save_dataset(c.right_test, root / "en_test.tsv");

        const auto variants = sacmt::synthetic::variant_corpus(sacmt::synthetic::hindi_variant_families(), var);
        sacmt::save_dataset(variants, root / "variants.tsv");

        const auto map = sacmt::synthetic::default_emoji_map();
        sacmt::io::atomic_write(root / "emoji_map.json", map.to_json().dump(2) + "\n");
        sacmt::save_dataset(sacmt::synthetic::with_emojis(c.left_train, map, emo), root / "cm_emoji_train.tsv");
        auto test_emo = emo;
        test_emo.seed += 1;
        sacmt::save_dataset(sacmt::synthetic::with_emojis(c.left_test, map, test_emo), root / "cm_emoji_test.tsv");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
