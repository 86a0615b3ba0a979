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

// Slow, direct reimplementations used to cross-check the library.

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "polaris/polaris.hpp"
#include "test_support.hpp"

namespace polaris::testing {

// Five representative resolutions, one per distinct behaviour.
inline const std::array<PairResolution, 5> kResolutionAlphabet = {{
    {Resolution::Positive, ResolutionSource::AbsoluteLexicon},
    {Resolution::Negative, ResolutionSource::RelativeMatrix},
    {Resolution::Neutral, ResolutionSource::RelativeMatrix},
    {Resolution::Undetermined, ResolutionSource::NoFeature},
    {Resolution::Undetermined, ResolutionSource::NoCell},
}};

// Label as a function of which values occur, written out as a full table over
// (positive, negative, neutral, undetermined) presence bits.
inline SentenceLabel truth_table_label(const std::vector<PairResolution>& rs) {
  if (rs.empty()) return SentenceLabel::NoOpinion;
  int bits = 0;
  for (const auto& r : rs) {
    if (r.value == Resolution::Positive) bits |= 8;
    if (r.value == Resolution::Negative) bits |= 4;
    if (r.value == Resolution::Neutral) bits |= 2;
    if (r.value == Resolution::Undetermined) bits |= 1;
  }
  using L = SentenceLabel;
  static const std::array<L, 16> table = {
      /* 0000 */ L::NoOpinion,       /* 0001 */ L::Undetermined,
      /* 0010 */ L::Fact,            /* 0011 */ L::Undetermined,
      /* 0100 */ L::OpinionNegative, /* 0101 */ L::OpinionNegative,
      /* 0110 */ L::OpinionNegative, /* 0111 */ L::OpinionNegative,
      /* 1000 */ L::OpinionPositive, /* 1001 */ L::OpinionPositive,
      /* 1010 */ L::OpinionPositive, /* 1011 */ L::OpinionPositive,
      /* 1100 */ L::OpinionMixed,    /* 1101 */ L::OpinionMixed,
      /* 1110 */ L::OpinionMixed,    /* 1111 */ L::OpinionMixed,
  };
  return table[bits];
}

// Every sequence of length 0..max_len over the alphabet.
inline std::vector<std::vector<PairResolution>> all_sequences(std::size_t max_len) {
  std::vector<std::vector<PairResolution>> out = {{}};
  std::vector<std::vector<PairResolution>> frontier = {{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<PairResolution>> next;
    for (const auto& seq : frontier)
      for (const auto& r : kResolutionAlphabet) {
        auto s = seq;
        s.push_back(r);
        next.push_back(s);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Independent frequency count: split on anything that is not part of a word,
// try every rewrite rule and keep the longest one, then scan the adjective
// and alias lists linearly.
inline ClassCounts recount(const std::string& text, const LexiconBundle& bundle) {
  std::string cleaned;
  for (char c : text) {
    const bool sep = c == ' ' || c == '\n' || c == '\t' || c == '.' || c == '!' || c == '?' ||
                     c == ',' || c == '"' || c == '(' || c == ')';
    cleaned += sep ? ' ' : c;
  }
  std::vector<std::string> words;
  std::string cur;
  for (char c : cleaned + " ") {
    if (c == ' ') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur += (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
    }
  }
  ClassCounts counts;
  for (const auto& w : words) {
    std::string lemma = w;
    std::size_t best = 0;
    bool found = false;
    for (const auto& r : bundle.data().rules) {
      if (r.suffix.size() > w.size() || w.compare(w.size() - r.suffix.size(), r.suffix.size(), r.suffix) != 0)
        continue;
      std::string candidate = w.substr(0, w.size() - r.suffix.size()) + r.replacement;
      if (candidate.empty()) continue;
      if (!found || r.suffix.size() > best) {
        lemma = candidate;
        best = r.suffix.size();
        found = true;
      }
    }
    for (const auto& a : bundle.data().aliases)
      if (a.alias == lemma) lemma = a.lemma;
    for (const auto& a : bundle.data().adjectives) {
      if (a.lemma != lemma) continue;
      ++counts.total;
      if (a.cls == AdjectiveClass::Absolute) ++counts.absolute;
      else ++counts.relative;
      break;
    }
  }
  return counts;
}

// The bundled corpora plus seeded random documents over every domain.
inline std::vector<CorpusDocument> mini_corpus() {
  std::vector<CorpusDocument> docs = {
      {"HOTEL", read_text(kCorpusDir / "hotel_khuta.txt")},
      {"MOBILE", read_text(kCorpusDir / "mobile_khuta.txt")},
  };
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"크-다", "좋-아요", "khu-n", "많-다", "비싸-다", "호텔-이",
                                          "나쁘-다", "kang-han", "방", "cohta", "작-아요", "안"};
  const auto domains = seed().domains();
  for (int d = 0; d < 40; ++d) {
    std::string text;
    const int n = static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) text += words[rng() % words.size()] + (rng() % 5 ? " " : ". ");
    docs.push_back({domains[rng() % domains.size()], text});
  }
  return docs;
}

}  // namespace polaris::testing
