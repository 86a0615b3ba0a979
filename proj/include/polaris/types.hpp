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

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polaris {

// Evaluative orientation. There is deliberately no neutral member: neutrality
// is carried by Cell::Z and PairResolution::Neutral.
enum class Polarity { Positive, Negative };

// One entry of the opinion-feature dictionary.
enum class Cell { Plus, Minus, Z };

enum class AdjectiveClass { Absolute, Relative, Amplifier };

inline constexpr Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

inline constexpr std::string_view to_string(Polarity p) {
  return p == Polarity::Positive ? "Positive" : "Negative";
}

inline constexpr std::string_view to_symbol(Polarity p) {
  return p == Polarity::Positive ? "+" : "-";
}

inline constexpr std::string_view to_symbol(Cell c) {
  switch (c) {
    case Cell::Plus: return "+";
    case Cell::Minus: return "-";
    case Cell::Z: return "z";
  }
  return "z";
}

inline constexpr std::string_view to_code(AdjectiveClass c) {
  switch (c) {
    case AdjectiveClass::Absolute: return "ABS";
    case AdjectiveClass::Relative: return "REL";
    case AdjectiveClass::Amplifier: return "AMP";
  }
  return "REL";
}

inline std::optional<Cell> parse_cell(std::string_view s) {
  if (s == "+") return Cell::Plus;
  if (s == "-") return Cell::Minus;
  if (s == "z") return Cell::Z;
  return std::nullopt;
}

inline std::optional<AdjectiveClass> parse_class(std::string_view s) {
  if (s == "ABS") return AdjectiveClass::Absolute;
  if (s == "REL") return AdjectiveClass::Relative;
  if (s == "AMP") return AdjectiveClass::Amplifier;
  return std::nullopt;
}

// Where a record came from; used for diagnostics only and ignored by equality.
struct SourceLocation {
  std::string file;
  std::size_t line = 0;
};

struct AdjectiveEntry {
  std::string lemma;
  AdjectiveClass cls = AdjectiveClass::Relative;
  std::optional<Polarity> absolute_polarity;  // present iff cls == Absolute
  SourceLocation origin;

  bool operator==(const AdjectiveEntry& o) const {
    return lemma == o.lemma && cls == o.cls &&
           absolute_polarity == o.absolute_polarity;
  }
};

struct FeatureNoun {
  std::string canonical;
  std::set<std::string> synonyms;
  std::optional<Polarity> inherent_polarity;

  bool operator==(const FeatureNoun&) const = default;
};

struct FeatureRecord {
  std::string domain;
  std::string category;
  FeatureNoun noun;
  SourceLocation origin;

  bool operator==(const FeatureRecord& o) const {
    return domain == o.domain && category == o.category && noun == o.noun;
  }
};

struct MatrixRecord {
  std::string domain;
  std::string canonical;
  std::string lemma;
  Cell cell = Cell::Z;
  SourceLocation origin;

  bool operator==(const MatrixRecord& o) const {
    return domain == o.domain && canonical == o.canonical &&
           lemma == o.lemma && cell == o.cell;
  }
};

// Maps a romanized or variant spelling onto a lexicon lemma.
struct AliasRecord {
  std::string alias;
  std::string lemma;
  SourceLocation origin;

  bool operator==(const AliasRecord& o) const {
    return alias == o.alias && lemma == o.lemma;
  }
};

struct RewriteRule {
  std::string suffix;
  std::string replacement;

  bool operator==(const RewriteRule&) const = default;
};

// Canonical feature resolved from a surface noun.
struct FeatureRef {
  std::string canonical;
  std::string category;

  bool operator==(const FeatureRef&) const = default;
};

class UnknownDomainError : public std::runtime_error {
 public:
  explicit UnknownDomainError(const std::string& domain)
      : std::runtime_error("unknown domain: " + domain), domain_(domain) {}

  const std::string& domain() const noexcept { return domain_; }

 private:
  std::string domain_;
};

}  // namespace polaris
