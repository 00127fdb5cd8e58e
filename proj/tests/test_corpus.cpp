#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>

#include "oracles.hpp"
#include "sacmt/corpus.hpp"
#include "sacmt/random.hpp"
#include "sacmt/synthetic.hpp"
#include "sacmt/utf8.hpp"

using namespace sacmt;

namespace {

LabeledCorpus make_corpus(std::size_t per_class, std::uint64_t seed = 1) {
    synthetic::BilingualConfig cfg;
    cfg.train_per_class = per_class;
    cfg.test_per_class = 1;
    cfg.seed = seed;
    return synthetic::bilingual(cfg).left_train;
}

std::vector<std::string> ids(const LabeledCorpus& c) {
    std::vector<std::string> out;
    for (const auto& s : c) out.push_back(s.id);
    return out;
}

}  // namespace

TEST(Sentiment, ParsesCaseInsensitively) {
    EXPECT_EQ(parse_sentiment("positive"), Sentiment::Positive);
    EXPECT_EQ(parse_sentiment("NEUTRAL"), Sentiment::Neutral);
    EXPECT_EQ(parse_sentiment("Negative"), Sentiment::Negative);
    EXPECT_LT(Sentiment::Negative, Sentiment::Neutral);
    EXPECT_LT(Sentiment::Neutral, Sentiment::Positive);
}

TEST(Dataset, ParsesOneLine) {
    auto c = parse_dataset("1\tpositive\tIndia match jit gayi\n");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].id, "1");
    EXPECT_EQ(c[0].sentiment(), Sentiment::Positive);
    EXPECT_EQ(c[0].text, "India match jit gayi");
}

TEST(Dataset, EmptyContentGivesEmptyCorpus) { EXPECT_TRUE(parse_dataset("").empty()); }

TEST(Dataset, UnknownLabelIsReported) {
    try {
        parse_dataset("2\thappy\ttext\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("unknown label: happy"), std::string::npos);
    }
}

TEST(Dataset, RejectsMalformedDuplicateAndEmptyLines) {
    EXPECT_THROW(parse_dataset("1\tpositive\n"), ParseError);
    EXPECT_THROW(parse_dataset("\tpositive\tx\n"), ParseError);
    EXPECT_THROW(parse_dataset("1\tpositive\ta\n1\tneutral\tb\n"), ParseError);
    EXPECT_THROW(parse_dataset("1\tpositive\t@someone http://x.y\n"), ParseError);
}

TEST(Dataset, ErrorsNameTheLine) {
    try {
        parse_dataset("1\tpositive\tok\n2\tpositive\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(Dataset, AcceptsCrlfAndTabsInsideText) {
    auto c = parse_dataset("a\tneutral\tone\ttwo\r\n");
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].text, "one\ttwo");
}

TEST(Dataset, MissingFileIsAnError) { EXPECT_THROW(load_dataset("/nonexistent/none.tsv"), Error); }

TEST(Dataset, LoadSaveLoadRoundTripsBitIdentically) {
    testutil::TempDir dir("corpus");
    const std::string raw = "x1\tpositive\tbahut  acha 😄\nx2\tnegative\tBura   laga\nx3\tneutral\tok\n";
    {
        std::ofstream(dir / "in.tsv") << raw;
    }
    auto a = load_dataset(dir / "in.tsv");
    save_dataset(a, dir / "out.tsv");
    auto b = load_dataset(dir / "out.tsv");
    EXPECT_EQ(a.sentences().size(), b.sentences().size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].id, b[i].id);
        EXPECT_EQ(a[i].text, b[i].text);
        EXPECT_EQ(a[i].label, b[i].label);
    }
    EXPECT_EQ(io::read_file(dir / "out.tsv"), raw);
}

TEST(Corpus, RejectsUnlabeledAndDuplicateIds) {
    EXPECT_THROW(LabeledCorpus({Sentence{"a", "x", std::nullopt, ""}}), InvalidArgument);
    EXPECT_THROW(LabeledCorpus({Sentence{"a", "x", Sentiment::Positive, ""}, Sentence{"a", "y", Sentiment::Negative, ""}}),
                 InvalidArgument);
}

TEST(Corpus, ClassCountsSumToSize) {
    auto c = make_corpus(7);
    auto counts = c.class_counts();
    EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), std::size_t{0}), c.size());
}

TEST(Emoji, SingleEmojiRelabelsAndIsRemoved) {
    EmojiMap map;
    map.add("😄", Sentiment::Positive);
    map.add("😡", Sentiment::Negative);
    auto r = relabel_by_emoji(LabeledCorpus({Sentence{"1", "great day 😄", Sentiment::Negative, ""}}), map);
    ASSERT_EQ(r.corpus.size(), 1u);
    EXPECT_EQ(r.dropped, 0u);
    EXPECT_EQ(r.corpus[0].sentiment(), Sentiment::Positive);
    EXPECT_EQ(r.corpus[0].text, "great day");
}

TEST(Emoji, ConflictingEmojisAreDropped) {
    EmojiMap map;
    map.add("😄", Sentiment::Positive);
    map.add("😡", Sentiment::Negative);
    auto r = relabel_by_emoji(LabeledCorpus({Sentence{"1", "hmm 😄 😡", Sentiment::Neutral, ""}}), map);
    EXPECT_TRUE(r.corpus.empty());
    EXPECT_EQ(r.dropped, 1u);
}

TEST(Emoji, CorpusWithoutEmojisIsDroppedEntirely) {
    auto c = make_corpus(4);
    auto r = relabel_by_emoji(c, synthetic::default_emoji_map());
    EXPECT_TRUE(r.corpus.empty());
    EXPECT_EQ(r.dropped, c.size());
}

TEST(Emoji, RepeatedSameClassEmojisAreKept) {
    auto map = synthetic::default_emoji_map();
    auto r = relabel_by_emoji(LabeledCorpus({Sentence{"1", "kya baat 😄😁 😂", Sentiment::Negative, ""}}), map);
    ASSERT_EQ(r.corpus.size(), 1u);
    EXPECT_EQ(r.corpus[0].sentiment(), Sentiment::Positive);
    EXPECT_EQ(r.corpus[0].text, "kya baat");
}

TEST(Emoji, VariationSelectorDoesNotMatter) {
    EmojiMap map;
    map.add("❤️", Sentiment::Positive);  // with U+FE0F
    auto r = relabel_by_emoji(LabeledCorpus({Sentence{"1", "pyaar ❤", Sentiment::Neutral, ""},
                                             Sentence{"2", "pyaar ❤️", Sentiment::Neutral, ""}}),
                              map);
    ASSERT_EQ(r.corpus.size(), 2u);
    for (const auto& s : r.corpus) {
        EXPECT_EQ(s.sentiment(), Sentiment::Positive);
        EXPECT_EQ(s.text, "pyaar");
    }
}

TEST(Emoji, EmojiOnlySentenceIsDropped) {
    auto map = synthetic::default_emoji_map();
    auto r = relabel_by_emoji(LabeledCorpus({Sentence{"1", "😄", Sentiment::Neutral, ""}}), map);
    EXPECT_TRUE(r.corpus.empty());
    EXPECT_EQ(r.dropped, 1u);
}

TEST(Emoji, EmptyMapIsAnError) { EXPECT_THROW(relabel_by_emoji(make_corpus(2), EmojiMap{}), InvalidArgument); }

TEST(Emoji, MapRejectsTwoClassesForOneEmoji) {
    EmojiMap map;
    map.add("😄", Sentiment::Positive);
    EXPECT_THROW(map.add("😄", Sentiment::Negative), InvalidArgument);
}

TEST(Emoji, MapJsonRoundTrip) {
    auto map = synthetic::default_emoji_map();
    auto back = EmojiMap::from_json(map.to_json());
    EXPECT_EQ(back.entries(), map.entries());
}

TEST(EmojiProperty, OutputHasNoMapCodepoints) {
    auto map = synthetic::default_emoji_map();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        synthetic::EmojiCorpusConfig ec;
        ec.seed = seed;
        ec.conflict_rate = 0.2;
        auto tagged = synthetic::with_emojis(make_corpus(10, seed), map, ec);
        auto r = relabel_by_emoji(tagged, map);
        EXPECT_EQ(r.corpus.size() + r.dropped, tagged.size());
        for (const auto& s : r.corpus) {
            for (char32_t cp : utf8::decode(s.text)) EXPECT_FALSE(map.contains_codepoint(cp)) << s.text;
        }
    }
}

TEST(Split, SizesAndPartition) {
    std::vector<Sentence> v;
    for (int i = 0; i < 100; ++i) {
        v.push_back({"s" + std::to_string(i), "w" + std::to_string(i), kAllSentiments[static_cast<std::size_t>(i % 3)], ""});
    }
    LabeledCorpus c(std::move(v));
    auto sp = split(c, {0.8, 0.1, 0.1}, 7);
    EXPECT_EQ(sp.train.size(), 80u);
    EXPECT_EQ(sp.dev.size(), 10u);
    EXPECT_EQ(sp.test.size(), 10u);
    auto all = ids(sp.train);
    for (const auto& part : {ids(sp.dev), ids(sp.test)}) all.insert(all.end(), part.begin(), part.end());
    auto orig = ids(c);
    std::sort(all.begin(), all.end());
    std::sort(orig.begin(), orig.end());
    EXPECT_EQ(all, orig);
}

TEST(Split, Deterministic) {
    auto c = make_corpus(20);
    auto a = split(c, {}, 3);
    auto b = split(c, {}, 3);
    EXPECT_EQ(ids(a.train), ids(b.train));
    EXPECT_EQ(ids(a.dev), ids(b.dev));
    EXPECT_EQ(ids(a.test), ids(b.test));
}

TEST(Split, BadRatiosAndTinyClassesAreErrors) {
    auto c = make_corpus(20);
    EXPECT_THROW(split(c, {0.5, 0.5, 0.5}, 1), InvalidArgument);
    EXPECT_THROW(split(c, {1.0, 0.0, 0.0}, 1), InvalidArgument);
    EXPECT_THROW(split(make_corpus(2), {}, 1), InvalidArgument);
}

TEST(SplitProperty, PartitionAndStratification) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto rng = make_rng(seed, 99);
        std::vector<Sentence> v;
        const std::size_t n = 30 + uniform_index(rng, 120);
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back({"id" + std::to_string(i), "t" + std::to_string(i), kAllSentiments[uniform_index(rng, 3)], ""});
        }
        LabeledCorpus c(std::move(v));
        auto counts = c.class_counts();
        if (*std::min_element(counts.begin(), counts.end()) < 3) continue;
        auto sp = split(c, {0.7, 0.15, 0.15}, seed);
        EXPECT_EQ(sp.train.size() + sp.dev.size() + sp.test.size(), n);
        std::set<std::string> seen;
        for (const auto* part : {&sp.train, &sp.dev, &sp.test}) {
            for (const auto& s : *part) EXPECT_TRUE(seen.insert(s.id).second);
        }
        EXPECT_EQ(seen.size(), n);
        for (std::size_t k = 0; k < kNumClasses; ++k) {
            EXPECT_GE(sp.train.class_counts()[k], 1u);
            EXPECT_GE(sp.dev.class_counts()[k], 1u);
            EXPECT_GE(sp.test.class_counts()[k], 1u);
        }
    }
}

TEST(Stats, OneSentenceByHand) {
    auto st = corpus_stats(LabeledCorpus({Sentence{"1", "aa bb", Sentiment::Positive, ""}}));
    EXPECT_EQ(st.words, 2u);
    EXPECT_EQ(st.trigrams, 2u);  // "aa#", "bb#"
    EXPECT_EQ(st.percent[index_of(Sentiment::Positive)], 100);
    EXPECT_EQ(st.percent[index_of(Sentiment::Neutral)], 0);
}

TEST(Stats, MirrorsClassShares) {
    std::vector<Sentence> v;
    auto add = [&](Sentiment s, int n) {
        for (int i = 0; i < n; ++i) v.push_back({std::to_string(v.size()), "w", s, ""});
    };
    add(Sentiment::Positive, 35);
    add(Sentiment::Neutral, 50);
    add(Sentiment::Negative, 15);
    auto st = corpus_stats(LabeledCorpus(std::move(v)));
    EXPECT_EQ(st.percent[index_of(Sentiment::Positive)], 35);
    EXPECT_EQ(st.percent[index_of(Sentiment::Neutral)], 50);
    EXPECT_EQ(st.percent[index_of(Sentiment::Negative)], 15);
    auto table = format_stats_table({{"HECM", st}});
    EXPECT_EQ(table, "Datasets\tWords\tChar-trigrams\tPositive\tNeutral\tNegative\nHECM\t1\t1\t35%\t50%\t15%\n");
}

TEST(Stats, DuplicateSentenceDoesNotChangeDistinctTokens) {
    auto one = corpus_stats(LabeledCorpus({Sentence{"1", "kya baat hai", Sentiment::Positive, ""}}));
    auto two = corpus_stats(LabeledCorpus(
        {Sentence{"1", "kya baat hai", Sentiment::Positive, ""}, Sentence{"2", "kya baat hai", Sentiment::Positive, ""}}));
    EXPECT_EQ(one.words, two.words);
    EXPECT_EQ(one.trigrams, two.trigrams);
}

TEST(Stats, EmptyCorpusIsAnError) { EXPECT_THROW(corpus_stats(LabeledCorpus{}), InvalidArgument); }

TEST(StatsProperty, PercentagesSumToHundredWithinRounding) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto rng = make_rng(seed, 3);
        std::vector<Sentence> v;
        const std::size_t n = 1 + uniform_index(rng, 300);
        for (std::size_t i = 0; i < n; ++i) v.push_back({std::to_string(i), "x", kAllSentiments[uniform_index(rng, 3)], ""});
        auto st = corpus_stats(LabeledCorpus(std::move(v)));
        const long sum = st.percent[0] + st.percent[1] + st.percent[2];
        EXPECT_GE(sum, 99);
        EXPECT_LE(sum, 101);
    }
}

TEST(Stats, EmojiDistributionLayout) {
    auto map = synthetic::default_emoji_map();
    LabeledCorpus a({Sentence{"1", "x", Sentiment::Positive, ""}, Sentence{"2", "y", Sentiment::Negative, ""}});
    auto t = format_emoji_distribution(map, {{"HECM", a}});
    EXPECT_EQ(t.substr(0, t.find('\n')), "Emojis\tClass\tHECM");
    EXPECT_NE(t.find("\tPositive\t50%\n"), std::string::npos);
    EXPECT_NE(t.find("\tNeutral\t0%\n"), std::string::npos);
    EXPECT_NE(t.find("\tNegative\t50%\n"), std::string::npos);
}
