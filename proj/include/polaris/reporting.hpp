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

// Corpus statistics: adjective class frequencies per domain, keyword
// concordance precision, and matrix slices laid out by topic category.
//
// Tallies are plain counters with an associative, commutative merge so that
// documents can be counted independently and combined in any grouping.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polaris/analysis.hpp"
#include "polaris/lexicon.hpp"

namespace polaris {

struct CorpusDocument {
  std::string domain;
  std::string text;
};

struct ClassCounts {
  std::uint64_t total = 0;
  std::uint64_t absolute = 0;
  std::uint64_t relative = 0;  // Relative and Amplifier occurrences

  ClassCounts& operator+=(const ClassCounts& o) {
    total += o.total;
    absolute += o.absolute;
    relative += o.relative;
    return *this;
  }
  bool operator==(const ClassCounts&) const = default;
};

struct FrequencyTally {
  std::map<std::string, ClassCounts> per_domain;

  FrequencyTally& merge(const FrequencyTally& o) {
    for (const auto& [d, c] : o.per_domain) per_domain[d] += c;
    return *this;
  }
  bool operator==(const FrequencyTally&) const = default;
};

struct FrequencyReport {
  std::map<std::string, ClassCounts> per_domain;
  ClassCounts averages;              // half-up rounded means over domains present
  std::uint64_t absolute_pct_tenths = 0;  // percent * 10, over the rounded total
  std::uint64_t relative_pct_tenths = 0;
  bool rounding_consistent = true;   // averages.absolute + averages.relative == averages.total

  double absolute_pct() const { return static_cast<double>(absolute_pct_tenths) / 10.0; }
  double relative_pct() const { return static_cast<double>(relative_pct_tenths) / 10.0; }

  bool operator==(const FrequencyReport&) const = default;
};

namespace detail {

inline std::uint64_t round_half_up(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0 : (2 * num + den) / (2 * den);
}

}  // namespace detail

// Counts adjective-lexicon token occurrences in one document.
inline FrequencyTally tally_frequency(const CorpusDocument& doc, const LexiconBundle& bundle) {
  if (!bundle.has_domain(doc.domain)) throw UnknownDomainError(doc.domain);
  FrequencyTally tally;
  ClassCounts& c = tally.per_domain[doc.domain];
  const SuffixTokenizer tok(bundle);
  for (const auto& sentence : segment_sentences(doc.text)) {
    for (const auto& t : tok(sentence)) {
      const auto* adj = bundle.resolve_adjective(t.lemma);
      if (!adj) continue;
      ++c.total;
      if (adj->cls == AdjectiveClass::Absolute)
        ++c.absolute;
      else
        ++c.relative;
    }
  }
  return tally;
}

inline FrequencyReport summarize_frequency(const FrequencyTally& tally) {
  FrequencyReport rep;
  rep.per_domain = tally.per_domain;
  ClassCounts sum;
  for (const auto& [_, c] : tally.per_domain) sum += c;
  const std::uint64_t n = tally.per_domain.size();
  rep.averages.total = detail::round_half_up(sum.total, n);
  rep.averages.absolute = detail::round_half_up(sum.absolute, n);
  rep.averages.relative = detail::round_half_up(sum.relative, n);
  rep.absolute_pct_tenths = detail::round_half_up(1000 * rep.averages.absolute, rep.averages.total);
  rep.relative_pct_tenths = detail::round_half_up(1000 * rep.averages.relative, rep.averages.total);
  rep.rounding_consistent =
      rep.averages.absolute + rep.averages.relative == rep.averages.total;
  return rep;
}

inline FrequencyReport frequency_report(std::span<const CorpusDocument> corpus,
                                        const LexiconBundle& bundle) {
  FrequencyTally tally;
  for (const auto& doc : corpus) tally.merge(tally_frequency(doc, bundle));
  return summarize_frequency(tally);
}

// ---------------------------------------------------------------------------

struct ConcordanceTally {
  std::uint64_t total = 0;
  std::uint64_t opinion = 0;

  ConcordanceTally& merge(const ConcordanceTally& o) {
    total += o.total;
    opinion += o.opinion;
    return *this;
  }
  bool operator==(const ConcordanceTally&) const = default;
};

struct ConcordanceReport {
  std::string adjective;
  std::string domain;
  std::uint64_t total = 0;
  std::uint64_t opinion = 0;
  std::uint64_t noise = 0;
  double precision = 0.0;

  bool operator==(const ConcordanceReport&) const = default;
};

namespace detail {

// Lexicon lemma for a query given as lemma or alias; unknown queries are
// matched verbatim against token lemmas.
inline std::string concordance_key(std::string_view query, const LexiconBundle& bundle) {
  if (const auto* adj = bundle.resolve_adjective(query)) return adj->lemma;
  return std::string(query);
}

inline bool token_matches(const Token& t, std::string_view key, const LexiconBundle& bundle) {
  if (t.lemma == key) return true;
  const auto* adj = bundle.resolve_adjective(t.lemma);
  return adj && adj->lemma == key;
}

}  // namespace detail

inline ConcordanceTally tally_concordance(std::string_view document, std::string_view domain,
                                          std::string_view lemma, const LexiconBundle& bundle,
                                          const AnalysisOptions& opts = {}) {
  if (lemma.empty()) throw std::invalid_argument("concordance lemma must be non-empty");
  const std::string key = detail::concordance_key(lemma, bundle);
  ConcordanceTally tally;
  for (const auto& s : analyze_document(document, bundle, domain, opts).sentences) {
    bool hit = false;
    for (const auto& t : s.tokens) hit = hit || detail::token_matches(t, key, bundle);
    if (!hit) continue;
    ++tally.total;
    if (is_opinion(s.label)) ++tally.opinion;
  }
  return tally;
}

inline ConcordanceReport summarize_concordance(const ConcordanceTally& tally,
                                               std::string adjective, std::string domain) {
  ConcordanceReport rep;
  rep.adjective = std::move(adjective);
  rep.domain = std::move(domain);
  rep.total = tally.total;
  rep.opinion = tally.opinion;
  rep.noise = tally.total - tally.opinion;
  rep.precision =
      tally.total == 0 ? 0.0 : static_cast<double>(tally.opinion) / static_cast<double>(tally.total);
  return rep;
}

inline ConcordanceReport concordance_report(std::span<const std::string> documents,
                                            std::string_view domain, std::string_view lemma,
                                            const LexiconBundle& bundle,
                                            const AnalysisOptions& opts = {}) {
  ConcordanceTally tally;
  for (const auto& doc : documents)
    tally.merge(tally_concordance(doc, domain, lemma, bundle, opts));
  return summarize_concordance(tally, detail::concordance_key(lemma, bundle), std::string(domain));
}

// ---------------------------------------------------------------------------

struct CategoryBlock {
  std::string category;
  std::vector<std::string> features;
  // cells[a][f]: adjective a (in slice order) against feature f.
  std::vector<std::vector<std::optional<Cell>>> cells;
};

struct MatrixSlice {
  std::string domain;
  std::vector<std::string> adjectives;
  std::vector<CategoryBlock> blocks;

  std::size_t feature_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.features.size();
    return n;
  }

  // relative.tsv records for the cells present in the slice.
  std::string to_tsv() const {
    std::vector<MatrixRecord> records;
    for (const auto& b : blocks)
      for (std::size_t a = 0; a < adjectives.size(); ++a)
        for (std::size_t f = 0; f < b.features.size(); ++f)
          if (b.cells[a][f]) records.push_back({domain, b.features[f], adjectives[a], *b.cells[a][f], {}});
    return format_matrix_tsv(std::move(records));
  }

  // One block per category: a feature header row, then one row per adjective.
  // Absent cells print as '.'.
  std::string to_grid() const {
    std::string out = "DOMAIN\t" + domain + "\n";
    for (const auto& b : blocks) {
      out += "\nCATEGORY\t" + b.category + "\n";
      for (const auto& f : b.features) out += "\t" + f;
      out += "\n";
      for (std::size_t a = 0; a < adjectives.size(); ++a) {
        out += adjectives[a];
        for (const auto& c : b.cells[a]) out += "\t" + std::string(c ? to_symbol(*c) : ".");
        out += "\n";
      }
    }
    return out;
  }
};

// Features with at least one cell for the requested adjectives, grouped by
// category; categories and features in byte order.
inline MatrixSlice export_matrix_slice(const LexiconBundle& bundle, std::string_view domain,
                                       std::span<const std::string> adjectives) {
  if (!bundle.has_domain(domain)) throw UnknownDomainError(std::string(domain));
  MatrixSlice slice{std::string(domain), {adjectives.begin(), adjectives.end()}, {}};
  std::map<std::string, std::map<std::string, bool>> grouped;
  for (const auto& f : bundle.data().features) {
    if (f.domain != domain) continue;
    for (const auto& a : adjectives)
      if (bundle.lookup_relative(domain, f.noun.canonical, a)) {
        grouped[f.category][f.noun.canonical] = true;
        break;
      }
  }
  for (const auto& [category, features] : grouped) {
    CategoryBlock block{category, {}, {}};
    for (const auto& [name, _] : features) block.features.push_back(name);
    for (const auto& a : adjectives) {
      std::vector<std::optional<Cell>> row;
      for (const auto& name : block.features) row.push_back(bundle.lookup_relative(domain, name, a));
      block.cells.push_back(std::move(row));
    }
    slice.blocks.push_back(std::move(block));
  }
  return slice;
}

}  // namespace polaris
