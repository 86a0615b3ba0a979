// Copyright 2026 The Polaris Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "polaris/polaris.hpp"
#include "test_support.hpp"

namespace polaris {
namespace {

using testing::seed;

OpinionPair pair_of(std::string lemma, std::optional<std::string> feature, bool negated = false) {
  OpinionPair p;
  p.adjective = {0, std::move(lemma), negated};
  if (feature) {
    p.feature = FeatureMention{1, *feature, ""};
    p.distance = 1;
  }
  return p;
}

PairResolution resolve(std::string_view domain, std::string lemma,
                       std::optional<std::string> feature, bool negated = false) {
  return resolve_pair(pair_of(std::move(lemma), std::move(feature), negated), domain, seed());
}

constexpr PairResolution kPosMatrix{Resolution::Positive, ResolutionSource::RelativeMatrix};
constexpr PairResolution kNegMatrix{Resolution::Negative, ResolutionSource::RelativeMatrix};

TEST(ResolvePair, RelativeThroughMatrix) {
  EXPECT_EQ(resolve("MOBILE", "크다", "크기"), kNegMatrix);
  EXPECT_EQ(resolve("HOTEL", "크다", "호텔"), kPosMatrix);
  EXPECT_EQ(resolve("MOBILE", "크다", "카메라"), kPosMatrix);
  EXPECT_EQ(resolve("MOBILE", "많다", "화면"),
            (PairResolution{Resolution::Neutral, ResolutionSource::RelativeMatrix}));
}

TEST(ResolvePair, Amplifier) {
  EXPECT_EQ(resolve("MOVIE", "강하다", "흡인력"),
            (PairResolution{Resolution::Positive, ResolutionSource::AmplifierRule}));
  EXPECT_EQ(resolve("MOVIE", "강하다", "폭력성"),
            (PairResolution{Resolution::Negative, ResolutionSource::AmplifierRule}));
  // A noun without inherent valence falls through to the matrix.
  EXPECT_EQ(resolve("MOVIE", "강하다", "인물"),
            (PairResolution{Resolution::Neutral, ResolutionSource::RelativeMatrix}));
}

TEST(ResolvePair, AbsoluteIgnoresFeature) {
  const PairResolution pos{Resolution::Positive, ResolutionSource::AbsoluteLexicon};
  EXPECT_EQ(resolve("MOBILE", "좋다", "배터리"), pos);
  EXPECT_EQ(resolve("MOBILE", "좋다", std::nullopt), pos);
  EXPECT_EQ(resolve("HOTEL", "비싸다", "방").value, Resolution::Negative);
}

TEST(ResolvePair, NegationFlipsPolarOnly) {
  EXPECT_EQ(resolve("MOBILE", "크다", "카메라", true), kNegMatrix);
  EXPECT_EQ(resolve("MOBILE", "많다", "화면", true).value, Resolution::Neutral);
  EXPECT_EQ(resolve("MOBILE", "크다", std::nullopt, true).value, Resolution::Undetermined);
}

TEST(ResolvePair, UndeterminedCases) {
  EXPECT_EQ(resolve("MOBILE", "크다", std::nullopt),
            (PairResolution{Resolution::Undetermined, ResolutionSource::NoFeature}));
  EXPECT_EQ(resolve("MOBILE", "크다", "스피커"),
            (PairResolution{Resolution::Undetermined, ResolutionSource::NoCell}));
}

TEST(ResolvePair, UnknownDomainThrows) {
  EXPECT_THROW(resolve("CAR", "크다", "크기"), UnknownDomainError);
}

TEST(ResolvePair, AbsoluteDominanceEverywhere) {
  for (const auto& a : seed().data().adjectives) {
    if (a.cls != AdjectiveClass::Absolute) continue;
    const auto expected = from_polarity(*a.absolute_polarity);
    for (const auto& f : seed().data().features) {
      const auto r = resolve(f.domain, a.lemma, f.noun.canonical);
      EXPECT_EQ(r.value, expected) << a.lemma << " " << f.noun.canonical;
      EXPECT_EQ(r.source, ResolutionSource::AbsoluteLexicon);
    }
  }
}

TEST(ResolvePair, ZCellsAreNeutral) {
  std::size_t z = 0;
  for (const auto& m : seed().data().matrix) {
    if (m.cell != Cell::Z) continue;
    const auto* adj = seed().adjective(m.lemma);
    const auto* noun = seed().feature(m.domain, m.canonical);
    if (adj->cls == AdjectiveClass::Amplifier && noun->inherent_polarity) continue;
    ++z;
    EXPECT_EQ(resolve(m.domain, m.lemma, m.canonical).value, Resolution::Neutral);
    EXPECT_EQ(resolve(m.domain, m.lemma, m.canonical, true).value, Resolution::Neutral);
  }
  EXPECT_GT(z, 0u);
}

TEST(Negate, Involution) {
  for (const auto& r : testing::kResolutionAlphabet) EXPECT_EQ(negate(negate(r)), r);
  for (auto v : {Resolution::Positive, Resolution::Negative, Resolution::Neutral, Resolution::Undetermined})
    EXPECT_EQ(negate(negate(PairResolution{v, ResolutionSource::AmplifierRule})).value, v);
}

TEST(ClassifySentence, Examples) {
  const PairResolution pos{Resolution::Positive, ResolutionSource::AbsoluteLexicon};
  const PairResolution neu{Resolution::Neutral, ResolutionSource::RelativeMatrix};
  const PairResolution und{Resolution::Undetermined, ResolutionSource::NoCell};
  using V = std::vector<PairResolution>;
  EXPECT_EQ(classify_sentence(V{}), SentenceLabel::NoOpinion);
  EXPECT_EQ(classify_sentence(V{neu, neu}), SentenceLabel::Fact);
  EXPECT_EQ(classify_sentence(V{neu, und}), SentenceLabel::Undetermined);
  EXPECT_EQ(classify_sentence(V{pos, und}), SentenceLabel::OpinionPositive);
  EXPECT_EQ(classify_sentence(V{pos, kNegMatrix}), SentenceLabel::OpinionMixed);
  EXPECT_EQ(classify_sentence(V{kNegMatrix, neu}), SentenceLabel::OpinionNegative);
}

TEST(ClassifySentence, MatchesTruthTableOracle) {
  const auto sequences = testing::all_sequences(4);
  std::size_t len4 = 0;
  for (const auto& seq : sequences) {
    len4 += seq.size() == 4;
    EXPECT_EQ(classify_sentence(seq), testing::truth_table_label(seq));
  }
  EXPECT_EQ(len4, 625u);
}

TEST(ClassifySentence, OrderDoesNotMatter) {
  std::mt19937 rng(3);
  for (auto seq : testing::all_sequences(4)) {
    const auto label = classify_sentence(seq);
    std::shuffle(seq.begin(), seq.end(), rng);
    EXPECT_EQ(classify_sentence(seq), label);
  }
}

TEST(ClassifySentence, AddingPositiveNeverLosesPositivity) {
  const PairResolution pos{Resolution::Positive, ResolutionSource::AbsoluteLexicon};
  for (auto seq : testing::all_sequences(3)) {
    const auto before = classify_sentence(seq);
    seq.push_back(pos);
    const auto after = classify_sentence(seq);
    if (before == SentenceLabel::OpinionNegative || before == SentenceLabel::OpinionMixed)
      EXPECT_EQ(after, SentenceLabel::OpinionMixed);
    else
      EXPECT_TRUE(after == SentenceLabel::OpinionPositive || after == SentenceLabel::OpinionMixed);
  }
}

TEST(ClassifyDocument, Examples) {
  using L = SentenceLabel;
  using V = std::vector<L>;
  EXPECT_EQ(classify_document(V{}).document_label, DocumentLabel::NonOpinion);
  EXPECT_EQ(classify_document(V{L::Fact, L::NoOpinion}).document_label, DocumentLabel::NonOpinion);
  EXPECT_EQ(classify_document(V{L::OpinionPositive, L::OpinionPositive, L::OpinionNegative})
                .document_label,
            DocumentLabel::Positive);
  EXPECT_EQ(classify_document(V{L::OpinionNegative, L::Fact}).document_label,
            DocumentLabel::Negative);
  EXPECT_EQ(classify_document(V{L::OpinionPositive, L::OpinionNegative}).document_label,
            DocumentLabel::Mixed);
  EXPECT_EQ(classify_document(V{L::OpinionMixed}).document_label, DocumentLabel::Mixed);

  const auto rep = classify_document(V{L::Fact, L::Fact, L::Undetermined});
  EXPECT_EQ(rep.count(L::Fact), 2u);
  EXPECT_EQ(rep.count(L::Undetermined), 1u);
  EXPECT_EQ(rep.sentence_labels.size(), 3u);
}

TEST(Analyze, SentenceExamples) {
  auto label = [](std::string_view domain, std::string_view text) {
    return analyze_sentence(text, seed(), domain).label;
  };
  EXPECT_EQ(label("HOTEL", "Lostey hotheyl cupyen-ey khun kenmul-i manh-supnita."),
            SentenceLabel::Fact);
  EXPECT_EQ(label("HOTEL", "Hotheyl kyumo-ka khu-ko kunsaha-neyyo."),
            SentenceLabel::OpinionPositive);
  EXPECT_EQ(label("HOTEL", "Lostey hotyel-un khu-ko wungcang-haysseyo."),
            SentenceLabel::OpinionPositive);
  EXPECT_EQ(label("MOBILE", "Aiphon-uy khuki-ka sayngkak-pota khu-n kes kath-ayo."),
            SentenceLabel::OpinionNegative);
  EXPECT_EQ(label("MOBILE", "Hayntuphon pethun-i khe-se cal nullye-yo."),
            SentenceLabel::OpinionPositive);
  EXPECT_EQ(label("MOBILE", "카메라-가 크-지 않-아요."), SentenceLabel::OpinionNegative);
  EXPECT_EQ(label("MOBILE", "오늘 날씨"), SentenceLabel::NoOpinion);
}

TEST(Analyze, DocumentMajority) {
  const auto doc = analyze_document(
      "카메라-가 크-고 좋-아요. 크기-가 크-다. 화면-이 크-네요.", seed(), "MOBILE");
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_EQ(doc.report.count(SentenceLabel::OpinionPositive), 2u);
  EXPECT_EQ(doc.report.count(SentenceLabel::OpinionNegative), 1u);
  EXPECT_EQ(doc.report.document_label, DocumentLabel::Positive);
  EXPECT_THROW(analyze_document("x", seed(), "CAR"), UnknownDomainError);
}

}  // namespace
}  // namespace polaris
