#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sacmt/random.hpp"
#include "sacmt/synthetic.hpp"
#include "sacmt/text.hpp"
#include "sacmt/vocab.hpp"

using namespace sacmt;

namespace {

LabeledCorpus one(const std::string& text) { return LabeledCorpus({Sentence{"1", text, Sentiment::Neutral, ""}}); }

std::string random_token(Rng& rng, std::size_t max_len) {
    static constexpr std::string_view alphabet = "abcdefghijklmnopqrstuvwxyzAEIOUY!?.0";
    std::string t;
    const auto len = 1 + uniform_index(rng, max_len);
    for (std::size_t i = 0; i < len; ++i) t += alphabet[uniform_index(rng, alphabet.size())];
    return t;
}

}  // namespace

TEST(Normalize, DropsHandlesAndUrls) { EXPECT_EQ(normalize("Heeey @bob http://x.y"), "heeey"); }

TEST(Normalize, LowercasesAndCollapsesWhitespace) {
    EXPECT_EQ(normalize("India  Match"), "india match");
    EXPECT_EQ(normalize("  a\tB\n c "), "a b c");
    EXPECT_EQ(normalize("see www.site.com now https://t.co/x"), "see now");
}

TEST(Normalize, EmptyResultIsAnError) {
    EXPECT_THROW(normalize("@a http://b"), InvalidArgument);
    EXPECT_THROW(normalize("   "), InvalidArgument);
}

TEST(Normalize, LeavesNonAsciiBytesAlone) { EXPECT_EQ(normalize("ÉCOLE 😄"), "École 😄"); }

TEST(Tokenize, SplitsOnWhitespaceOnly) {
    EXPECT_EQ(tokenize("india match jit gayi"), (std::vector<Token>{"india", "match", "jit", "gayi"}));
    EXPECT_EQ(tokenize("wow!!!"), (std::vector<Token>{"wow!!!"}));
    EXPECT_TRUE(tokenize("").empty());
}

TEST(Skeleton, VariantFamiliesShareSkeletons) {
    EXPECT_EQ(consonant_skeleton("khoobsurat"), "khbsrt");
    EXPECT_EQ(consonant_skeleton("khubsurat"), "khbsrt");
    EXPECT_EQ(consonant_skeleton("kyunki"), "kynk");
    EXPECT_EQ(consonant_skeleton("kiyunkee"), "kynk");
    EXPECT_EQ(consonant_skeleton("aapka"), "pk");
    EXPECT_EQ(consonant_skeleton("meharbaani"), "mhrbn");
    EXPECT_EQ(consonant_skeleton("aeiou"), "");
}

TEST(Skeleton, KeepsYAndDropsNonLetters) {
    EXPECT_EQ(consonant_skeleton("yaar!!"), "yr");
    EXPECT_EQ(consonant_skeleton("HeLLo"), "hll");
    EXPECT_EQ(consonant_skeleton("dil2"), "dl");
}

TEST(SkeletonProperty, IdempotentAndMatchesOracle) {
    auto rng = make_rng(17, 0);
    for (int i = 0; i < 2000; ++i) {
        const auto t = random_token(rng, 12);
        const auto s = consonant_skeleton(t);
        EXPECT_EQ(s, oracle::skeleton(t)) << t;
        EXPECT_EQ(consonant_skeleton(s), s) << t;
    }
}

TEST(Trigrams, WindowAndPadding) {
    EXPECT_EQ(char_trigrams("heey"), (std::vector<std::string>{"hee", "eey"}));
    EXPECT_EQ(char_trigrams("hey"), (std::vector<std::string>{"hey"}));
    EXPECT_EQ(char_trigrams("hi"), (std::vector<std::string>{"hi#"}));
    EXPECT_EQ(char_trigrams("a"), (std::vector<std::string>{"a##"}));
}

TEST(Trigrams, CountCodepointsNotBytes) {
    const auto g = char_trigrams("dil😄");
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[0], "dil");
    EXPECT_EQ(g[1], "il😄");
    EXPECT_EQ(char_trigrams("😄"), (std::vector<std::string>{"😄##"}));
}

TEST(TrigramProperty, LengthRuleAndOracle) {
    auto rng = make_rng(5, 1);
    for (int i = 0; i < 2000; ++i) {
        const auto t = random_token(rng, 15);
        const auto g = char_trigrams(t);
        EXPECT_EQ(g.size(), std::max<std::size_t>(1, t.size() < 2 ? 1 : t.size() - 2)) << t;
        EXPECT_EQ(g, oracle::trigrams(t)) << t;
    }
}

TEST(Vocab, BuildsInFirstOccurrenceOrder) {
    auto v = build_vocab(one("abc abc"));
    EXPECT_EQ(v.size(), 1u);
    EXPECT_EQ(v.id_of("abc"), 1u);

    auto w = build_vocab(one("abcd"));
    EXPECT_EQ(w.size(), 2u);
    EXPECT_EQ(w.id_of("abc"), 1u);
    EXPECT_EQ(w.id_of("bcd"), 2u);
    EXPECT_EQ(w.gram(2), "bcd");
}

TEST(Vocab, EncodeKnownUnknownAndRepeated) {
    auto v = build_vocab(one("abcd"));
    EXPECT_EQ(encode_text("abcd", v).ids, (std::vector<TrigramId>{1, 2}));
    EXPECT_EQ(encode_text("xyz", v).ids, (std::vector<TrigramId>{kUnknownTrigram}));
    EXPECT_EQ(encode_text("abcd abcd", v).ids, (std::vector<TrigramId>{1, 2, 1, 2}));
    EXPECT_EQ(encode_text("ABCD", v).ids, (std::vector<TrigramId>{1, 2}));
}

TEST(Vocab, EmptyCorpusIsAnError) { EXPECT_THROW(build_vocab(LabeledCorpus{}), InvalidArgument); }

TEST(Vocab, JsonRoundTripAndValidation) {
    auto c = synthetic::bilingual({}).left_train;
    auto v = build_vocab(c);
    auto back = TrigramVocab::from_json(v.to_json());
    ASSERT_EQ(back.size(), v.size());
    for (TrigramId id = 1; id <= v.size(); ++id) EXPECT_EQ(back.gram(id), v.gram(id));

    auto j = v.to_json();
    j["version"] = 99;
    EXPECT_THROW(TrigramVocab::from_json(j), ParseError);
    auto k = v.to_json();
    k[v.gram(1)] = 2;  // two grams share id 2, id 1 unused
    EXPECT_THROW(TrigramVocab::from_json(k), ParseError);
}

TEST(VocabProperty, DeterministicAndIdsInRange) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        synthetic::BilingualConfig cfg;
        cfg.seed = seed;
        cfg.train_per_class = 10;
        auto data = synthetic::bilingual(cfg);
        auto a = build_vocab(data.left_train);
        auto b = build_vocab(data.left_train);
        EXPECT_EQ(a.to_json(), b.to_json());
        for (const auto& s : data.right_train) {
            const auto seq = encode(s, a);
            EXPECT_GE(seq.size(), 1u);
            for (auto id : seq.ids) EXPECT_LE(id, a.size());
        }
        for (const auto& s : data.left_train) {
            for (auto id : encode(s, a).ids) EXPECT_NE(id, kUnknownTrigram);
        }
    }
}
