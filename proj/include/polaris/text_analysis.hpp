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

// Sentence splitting, suffix-rewrite lemmatization, mention detection and
// proximity pairing of adjectives with the feature nouns they predicate.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polaris/lexicon.hpp"
#include "polaris/types.hpp"

namespace polaris {

struct Token {
  std::string surface;
  std::string lemma;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

struct AdjectiveMention {
  std::size_t token_index = 0;
  std::string lemma;
  bool negated = false;

  bool operator==(const AdjectiveMention&) const = default;
};

struct FeatureMention {
  std::size_t token_index = 0;
  std::string canonical;
  std::string category;

  bool operator==(const FeatureMention&) const = default;
};

struct OpinionPair {
  AdjectiveMention adjective;
  std::optional<FeatureMention> feature;
  std::optional<std::size_t> distance;  // set iff feature is set

  bool operator==(const OpinionPair&) const = default;
};

struct Mentions {
  std::vector<AdjectiveMention> adjectives;
  std::vector<FeatureMention> features;
};

inline constexpr std::size_t kDefaultWindow = 8;
inline constexpr std::size_t kNegationSpan = 2;

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Multi-byte punctuation stripped from token edges.
inline constexpr std::array<std::string_view, 14> kWidePunct = {
    "“", "”", "‘", "’", "、", "，", "…",
    "「", "」", "『", "』", "《", "》", "。"};

inline bool is_ascii_punct(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  return u < 0x80 && ((u >= 0x21 && u <= 0x2F) || (u >= 0x3A && u <= 0x40) ||
                      (u >= 0x5B && u <= 0x60) || (u >= 0x7B && u <= 0x7E));
}

inline std::string_view strip_punct(std::string_view s) {
  bool changed = true;
  while (changed && !s.empty()) {
    changed = false;
    if (is_ascii_punct(s.front())) { s.remove_prefix(1); changed = true; continue; }
    if (is_ascii_punct(s.back())) { s.remove_suffix(1); changed = true; continue; }
    for (auto p : kWidePunct) {
      if (s.starts_with(p)) { s.remove_prefix(p.size()); changed = true; break; }
      if (s.ends_with(p)) { s.remove_suffix(p.size()); changed = true; break; }
    }
  }
  return s;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

}  // namespace detail

// Splits on . ! ? and the ideographic full stop, and on newlines. Pieces are
// whitespace-trimmed; empty pieces are dropped.
inline std::vector<std::string> segment_sentences(std::string_view text) {
  static constexpr std::string_view kIdeographicStop = "。";
  std::vector<std::string> out;
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    auto piece = detail::trim(text.substr(start, end - start));
    if (!piece.empty()) out.emplace_back(piece);
  };
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (c == '.' || c == '!' || c == '?' || c == '\n') {
      flush(i);
      start = ++i;
    } else if (text.substr(i).starts_with(kIdeographicStop)) {
      flush(i);
      i += kIdeographicStop.size();
      start = i;
    } else {
      ++i;
    }
  }
  flush(text.size());
  return out;
}

// Lemma of a single surface form: ASCII is lowercased, then the first rule
// whose suffix matches is applied once. Rules are expected longest-first.
inline std::string lemmatize(std::string_view surface, std::span<const RewriteRule> rules) {
  std::string lower = detail::ascii_lower(surface);
  for (const auto& r : rules) {
    if (!std::string_view(lower).ends_with(r.suffix)) continue;
    std::string lemma = lower.substr(0, lower.size() - r.suffix.size()) + r.replacement;
    if (!lemma.empty()) return lemma;
  }
  return lower;
}

inline std::vector<Token> tokenize(std::string_view sentence, std::span<const RewriteRule> rules) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < sentence.size()) {
    while (i < sentence.size() && detail::is_space(sentence[i])) ++i;
    std::size_t j = i;
    while (j < sentence.size() && !detail::is_space(sentence[j])) ++j;
    if (j > i) {
      auto word = detail::strip_punct(sentence.substr(i, j - i));
      if (!word.empty())
        tokens.push_back({std::string(word), lemmatize(word, rules), tokens.size()});
    }
    i = j;
  }
  return tokens;
}

// Default tokenizer bound to a bundle's rewrite rules. Any callable with the
// same signature producing Tokens with non-empty lemmas and increasing indices
// can be used in its place.
class SuffixTokenizer {
 public:
  explicit SuffixTokenizer(const LexiconBundle& bundle) : rules_(bundle.lemmatizer_rules()) {}

  std::vector<Token> operator()(std::string_view sentence) const {
    return tokenize(sentence, rules_);
  }

 private:
  std::span<const RewriteRule> rules_;
};

inline bool is_negation_token(const Token& t, const LexiconBundle& bundle) {
  return bundle.is_negation_cue(t.lemma) || bundle.is_negation_cue(t.surface) ||
         bundle.is_negation_cue(detail::ascii_lower(t.surface));
}

inline Mentions detect_mentions(std::span<const Token> tokens, const LexiconBundle& bundle,
                                std::string_view domain,
                                std::size_t negation_span = kNegationSpan) {
  if (!bundle.has_domain(domain)) throw UnknownDomainError(std::string(domain));
  Mentions m;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (const auto* adj = bundle.resolve_adjective(t.lemma)) {
      bool negated = false;
      std::size_t lo = i >= negation_span ? i - negation_span : 0;
      std::size_t hi = std::min(tokens.size() - 1, i + negation_span);
      for (std::size_t j = lo; j <= hi && !negated; ++j)
        negated = j != i && is_negation_token(tokens[j], bundle);
      m.adjectives.push_back({t.index, adj->lemma, negated});
    }
    auto feat = bundle.canonicalize_feature(domain, t.lemma);
    if (!feat) feat = bundle.canonicalize_feature(domain, detail::ascii_lower(t.surface));
    if (feat) m.features.push_back({t.index, feat->canonical, feat->category});
  }
  return m;
}

// Each adjective takes the nearest feature within `window` tokens. Ties go to
// the preceding feature, then to the lowest index.
inline std::vector<OpinionPair> pair_mentions(std::span<const AdjectiveMention> adjectives,
                                              std::span<const FeatureMention> features,
                                              std::size_t window = kDefaultWindow) {
  std::vector<OpinionPair> pairs;
  pairs.reserve(adjectives.size());
  for (const auto& adj : adjectives) {
    const FeatureMention* best = nullptr;
    std::size_t best_dist = 0;
    for (const auto& f : features) {
      std::size_t dist = f.token_index > adj.token_index ? f.token_index - adj.token_index
                                                         : adj.token_index - f.token_index;
      if (dist > window) continue;
      if (best == nullptr) {
        best = &f;
        best_dist = dist;
        continue;
      }
      bool precedes = f.token_index <= adj.token_index;
      bool best_precedes = best->token_index <= adj.token_index;
      if (dist < best_dist || (dist == best_dist && precedes && !best_precedes) ||
          (dist == best_dist && precedes == best_precedes && f.token_index < best->token_index)) {
        best = &f;
        best_dist = dist;
      }
    }
    OpinionPair p{adj, std::nullopt, std::nullopt};
    if (best) {
      p.feature = *best;
      p.distance = best_dist;
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

// Comparative constructions ("-pota", "보다") are flagged but not resolved.
inline bool has_comparative_cue(std::span<const Token> tokens) {
  static constexpr std::array<std::string_view, 3> kCues = {"-pota", "-potan", "보다"};
  for (const auto& t : tokens) {
    std::string lower = detail::ascii_lower(t.surface);
    std::string_view s = lower;
    if (s == "pota") return true;
    for (auto cue : kCues)
      if (s.ends_with(cue)) return true;
  }
  return false;
}

}  // namespace polaris
