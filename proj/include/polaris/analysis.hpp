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

// End-to-end sentence and document analysis over a bundle.

#pragma once

#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "polaris/lexicon.hpp"
#include "polaris/polarity_engine.hpp"
#include "polaris/text_analysis.hpp"

namespace polaris {

template <typename T>
concept Tokenizer = requires(const T& t, std::string_view s) {
  { t(s) } -> std::convertible_to<std::vector<Token>>;
};

struct AnalysisOptions {
  std::size_t window = kDefaultWindow;
  std::size_t negation_span = kNegationSpan;
};

struct SentenceAnalysis {
  std::size_t index = 0;
  std::string text;
  std::vector<Token> tokens;
  Mentions mentions;
  std::vector<OpinionPair> pairs;
  std::vector<PairResolution> resolutions;  // parallel to pairs
  SentenceLabel label = SentenceLabel::NoOpinion;
  bool comparative = false;  // ComparativeDetected note; label is unaffected
};

struct DocumentAnalysis {
  std::vector<SentenceAnalysis> sentences;
  DocumentReport report;
};

template <Tokenizer Tok>
SentenceAnalysis analyze_sentence(std::string_view sentence, const LexiconBundle& bundle,
                                  std::string_view domain, const Tok& tokenizer,
                                  const AnalysisOptions& opts = {}) {
  SentenceAnalysis out;
  out.text = std::string(sentence);
  out.tokens = tokenizer(sentence);
  out.mentions = detect_mentions(out.tokens, bundle, domain, opts.negation_span);
  out.pairs = pair_mentions(out.mentions.adjectives, out.mentions.features, opts.window);
  out.resolutions.reserve(out.pairs.size());
  for (const auto& p : out.pairs) out.resolutions.push_back(resolve_pair(p, domain, bundle));
  out.label = classify_sentence(out.resolutions);
  out.comparative = has_comparative_cue(out.tokens);
  return out;
}

inline SentenceAnalysis analyze_sentence(std::string_view sentence, const LexiconBundle& bundle,
                                         std::string_view domain,
                                         const AnalysisOptions& opts = {}) {
  return analyze_sentence(sentence, bundle, domain, SuffixTokenizer(bundle), opts);
}

template <Tokenizer Tok>
DocumentAnalysis analyze_document(std::string_view text, const LexiconBundle& bundle,
                                  std::string_view domain, const Tok& tokenizer,
                                  const AnalysisOptions& opts = {}) {
  if (!bundle.has_domain(domain)) throw UnknownDomainError(std::string(domain));
  DocumentAnalysis doc;
  std::vector<SentenceLabel> labels;
  const auto sentences = segment_sentences(text);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    auto s = analyze_sentence(sentences[i], bundle, domain, tokenizer, opts);
    s.index = i;
    labels.push_back(s.label);
    doc.sentences.push_back(std::move(s));
  }
  doc.report = classify_document(labels);
  return doc;
}

inline DocumentAnalysis analyze_document(std::string_view text, const LexiconBundle& bundle,
                                         std::string_view domain,
                                         const AnalysisOptions& opts = {}) {
  return analyze_document(text, bundle, domain, SuffixTokenizer(bundle), opts);
}

}  // namespace polaris
