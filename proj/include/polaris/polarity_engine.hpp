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

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polaris/lexicon.hpp"
#include "polaris/text_analysis.hpp"
#include "polaris/types.hpp"

namespace polaris {

enum class Resolution { Positive, Negative, Neutral, Undetermined };

enum class ResolutionSource { AbsoluteLexicon, RelativeMatrix, AmplifierRule, NoFeature, NoCell };

struct PairResolution {
  Resolution value = Resolution::Undetermined;
  ResolutionSource source = ResolutionSource::NoFeature;

  bool operator==(const PairResolution&) const = default;
};

enum class SentenceLabel {
  OpinionPositive,
  OpinionNegative,
  OpinionMixed,
  Fact,
  NoOpinion,
  Undetermined,
};

inline constexpr std::array<SentenceLabel, 6> kAllSentenceLabels = {
    SentenceLabel::OpinionPositive, SentenceLabel::OpinionNegative, SentenceLabel::OpinionMixed,
    SentenceLabel::Fact,            SentenceLabel::NoOpinion,       SentenceLabel::Undetermined};

enum class DocumentLabel { Positive, Negative, Mixed, NonOpinion };

inline constexpr std::string_view to_string(Resolution r) {
  switch (r) {
    case Resolution::Positive: return "Positive";
    case Resolution::Negative: return "Negative";
    case Resolution::Neutral: return "Neutral";
    case Resolution::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

inline constexpr std::string_view to_string(ResolutionSource s) {
  switch (s) {
    case ResolutionSource::AbsoluteLexicon: return "AbsoluteLexicon";
    case ResolutionSource::RelativeMatrix: return "RelativeMatrix";
    case ResolutionSource::AmplifierRule: return "AmplifierRule";
    case ResolutionSource::NoFeature: return "NoFeature";
    case ResolutionSource::NoCell: return "NoCell";
  }
  return "NoCell";
}

inline constexpr std::string_view to_string(SentenceLabel l) {
  switch (l) {
    case SentenceLabel::OpinionPositive: return "OpinionPositive";
    case SentenceLabel::OpinionNegative: return "OpinionNegative";
    case SentenceLabel::OpinionMixed: return "OpinionMixed";
    case SentenceLabel::Fact: return "Fact";
    case SentenceLabel::NoOpinion: return "NoOpinion";
    case SentenceLabel::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

inline constexpr std::string_view to_string(DocumentLabel l) {
  switch (l) {
    case DocumentLabel::Positive: return "Positive";
    case DocumentLabel::Negative: return "Negative";
    case DocumentLabel::Mixed: return "Mixed";
    case DocumentLabel::NonOpinion: return "NonOpinion";
  }
  return "NonOpinion";
}

inline constexpr bool is_opinion(SentenceLabel l) {
  return l == SentenceLabel::OpinionPositive || l == SentenceLabel::OpinionNegative ||
         l == SentenceLabel::OpinionMixed;
}

// Swaps Positive and Negative; Neutral and Undetermined are left alone.
inline constexpr PairResolution negate(PairResolution r) {
  if (r.value == Resolution::Positive)
    r.value = Resolution::Negative;
  else if (r.value == Resolution::Negative)
    r.value = Resolution::Positive;
  return r;
}

inline constexpr Resolution from_polarity(Polarity p) {
  return p == Polarity::Positive ? Resolution::Positive : Resolution::Negative;
}

// Rule order: Absolute lexicon, then an amplifier over a valenced noun, then
// the domain matrix. Negation is applied last.
inline PairResolution resolve_pair(const OpinionPair& pair, std::string_view domain,
                                   const LexiconBundle& bundle) {
  if (!bundle.has_domain(domain)) throw UnknownDomainError(std::string(domain));
  const AdjectiveEntry* adj = bundle.adjective(pair.adjective.lemma);
  PairResolution r{Resolution::Undetermined, ResolutionSource::NoFeature};

  if (adj && adj->cls == AdjectiveClass::Absolute && adj->absolute_polarity) {
    r = {from_polarity(*adj->absolute_polarity), ResolutionSource::AbsoluteLexicon};
  } else if (pair.feature) {
    const FeatureNoun* noun = bundle.feature(domain, pair.feature->canonical);
    if (adj && adj->cls == AdjectiveClass::Amplifier && noun && noun->inherent_polarity) {
      r = {from_polarity(*noun->inherent_polarity), ResolutionSource::AmplifierRule};
    } else if (auto cell = bundle.lookup_relative(domain, pair.feature->canonical,
                                                  pair.adjective.lemma)) {
      switch (*cell) {
        case Cell::Plus: r = {Resolution::Positive, ResolutionSource::RelativeMatrix}; break;
        case Cell::Minus: r = {Resolution::Negative, ResolutionSource::RelativeMatrix}; break;
        case Cell::Z: r = {Resolution::Neutral, ResolutionSource::RelativeMatrix}; break;
      }
    } else {
      r = {Resolution::Undetermined, ResolutionSource::NoCell};
    }
  }
  return pair.adjective.negated ? negate(r) : r;
}

inline SentenceLabel classify_sentence(std::span<const PairResolution> resolutions) {
  if (resolutions.empty()) return SentenceLabel::NoOpinion;
  bool pos = false, neg = false, neutral = false, undetermined = false;
  for (const auto& r : resolutions) {
    switch (r.value) {
      case Resolution::Positive: pos = true; break;
      case Resolution::Negative: neg = true; break;
      case Resolution::Neutral: neutral = true; break;
      case Resolution::Undetermined: undetermined = true; break;
    }
  }
  if (pos && neg) return SentenceLabel::OpinionMixed;
  if (pos) return SentenceLabel::OpinionPositive;
  if (neg) return SentenceLabel::OpinionNegative;
  if (neutral && !undetermined) return SentenceLabel::Fact;
  return SentenceLabel::Undetermined;
}

struct DocumentReport {
  std::vector<SentenceLabel> sentence_labels;
  std::array<std::size_t, kAllSentenceLabels.size()> counts{};
  DocumentLabel document_label = DocumentLabel::NonOpinion;

  std::size_t count(SentenceLabel l) const { return counts[static_cast<std::size_t>(l)]; }

  bool operator==(const DocumentReport&) const = default;
};

// Majority of OpinionPositive vs OpinionNegative sentences; a tie (including
// mixed-only documents) is Mixed; no opinion sentences at all is NonOpinion.
inline DocumentReport classify_document(std::span<const SentenceLabel> labels) {
  DocumentReport rep;
  rep.sentence_labels.assign(labels.begin(), labels.end());
  for (auto l : labels) ++rep.counts[static_cast<std::size_t>(l)];
  const auto pos = rep.count(SentenceLabel::OpinionPositive);
  const auto neg = rep.count(SentenceLabel::OpinionNegative);
  const auto mixed = rep.count(SentenceLabel::OpinionMixed);
  if (pos + neg + mixed == 0)
    rep.document_label = DocumentLabel::NonOpinion;
  else if (pos > neg)
    rep.document_label = DocumentLabel::Positive;
  else if (neg > pos)
    rep.document_label = DocumentLabel::Negative;
  else
    rep.document_label = DocumentLabel::Mixed;
  return rep;
}

}  // namespace polaris
