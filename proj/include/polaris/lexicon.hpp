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

// Lexical resources: the adjective lexicon (ABS/REL/AMP), per-domain feature
// catalogs with synonyms, and the opinion-feature matrix. A LexiconBundle is
// immutable once constructed and may be shared freely between threads.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "polaris/tsv.hpp"
#include "polaris/types.hpp"

namespace polaris {

// Raw records as read from disk (or built in code). No invariants are
// enforced here; see validate_bundle.
struct LexiconData {
  std::vector<AdjectiveEntry> adjectives;
  std::vector<FeatureRecord> features;
  std::vector<MatrixRecord> matrix;
  std::vector<AliasRecord> aliases;
  std::vector<RewriteRule> rules;
  std::vector<std::string> negation_cues;
};

namespace detail {

inline bool is_domain_name(std::string_view s) {
  if (s.empty() || s.front() < 'A' || s.front() > 'Z') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

template <typename T, typename Less>
std::vector<T> sorted_copy(const std::vector<T>& v, Less less) {
  std::vector<T> out = v;
  std::stable_sort(out.begin(), out.end(), less);
  return out;
}

inline std::vector<RewriteRule> longest_first(std::vector<RewriteRule> rules) {
  std::stable_sort(rules.begin(), rules.end(),
                   [](const RewriteRule& a, const RewriteRule& b) {
                     return a.suffix.size() > b.suffix.size();
                   });
  return rules;
}

}  // namespace detail

class LexiconBundle {
 public:
  LexiconBundle() = default;

  explicit LexiconBundle(LexiconData data) : data_(std::move(data)) {
    data_.rules = detail::longest_first(std::move(data_.rules));
    for (std::size_t i = 0; i < data_.adjectives.size(); ++i)
      adjectives_.try_emplace(data_.adjectives[i].lemma, i);
    for (const auto& a : data_.aliases) aliases_.try_emplace(a.alias, a.lemma);
    for (const auto& f : data_.features) {
      auto& dom = domains_[f.domain];
      const FeatureRef ref{f.noun.canonical, f.category};
      dom.surfaces.try_emplace(f.noun.canonical, ref);
      for (const auto& s : f.noun.synonyms) dom.surfaces.try_emplace(s, ref);
      dom.nouns.try_emplace(f.noun.canonical, &f.noun);
    }
    for (const auto& m : data_.matrix)
      matrix_.try_emplace(std::make_tuple(m.domain, m.canonical, m.lemma), m.cell);
    cues_.insert(data_.negation_cues.begin(), data_.negation_cues.end());
  }

  // The bundle holds pointers into data_, so copies must rebuild indices.
  LexiconBundle(const LexiconBundle& o) : LexiconBundle(o.data_) {}
  LexiconBundle& operator=(const LexiconBundle& o) {
    if (this != &o) *this = LexiconBundle(o.data_);
    return *this;
  }
  LexiconBundle(LexiconBundle&&) noexcept = default;
  LexiconBundle& operator=(LexiconBundle&&) noexcept = default;

  const LexiconData& data() const noexcept { return data_; }

  const AdjectiveEntry* adjective(std::string_view lemma) const {
    auto it = adjectives_.find(lemma);
    return it == adjectives_.end() ? nullptr : &data_.adjectives[it->second];
  }

  // Resolves a lemma or a registered alias (e.g. a romanized form).
  const AdjectiveEntry* resolve_adjective(std::string_view form) const {
    if (const auto* e = adjective(form)) return e;
    auto it = aliases_.find(form);
    return it == aliases_.end() ? nullptr : adjective(it->second);
  }

  // Fixed polarity of an Absolute adjective. Takes no domain on purpose.
  std::optional<Polarity> lookup_absolute(std::string_view lemma) const {
    const auto* e = adjective(lemma);
    if (e == nullptr || e->cls != AdjectiveClass::Absolute) return std::nullopt;
    return e->absolute_polarity;
  }

  // Exact matrix cell, or nullopt when the triple is absent.
  std::optional<Cell> lookup_relative(std::string_view domain,
                                      std::string_view canonical,
                                      std::string_view lemma) const {
    auto it = matrix_.find(std::make_tuple(std::string(domain), std::string(canonical),
                                           std::string(lemma)));
    if (it == matrix_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<FeatureRef> canonicalize_feature(std::string_view domain,
                                                 std::string_view surface) const {
    auto d = domains_.find(domain);
    if (d == domains_.end()) return std::nullopt;
    auto it = d->second.surfaces.find(surface);
    if (it == d->second.surfaces.end()) return std::nullopt;
    return it->second;
  }

  const FeatureNoun* feature(std::string_view domain, std::string_view canonical) const {
    auto d = domains_.find(domain);
    if (d == domains_.end()) return nullptr;
    auto it = d->second.nouns.find(canonical);
    return it == d->second.nouns.end() ? nullptr : it->second;
  }

  bool has_domain(std::string_view domain) const {
    return domains_.find(domain) != domains_.end();
  }

  std::vector<std::string> domains() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : domains_) out.push_back(name);
    return out;
  }

  // Rewrite rules, longest suffix first (stable among equal lengths).
  std::span<const RewriteRule> lemmatizer_rules() const { return data_.rules; }

  bool is_negation_cue(std::string_view s) const { return cues_.find(s) != cues_.end(); }

  std::size_t count(AdjectiveClass cls) const {
    std::size_t n = 0;
    for (const auto& [lemma, idx] : adjectives_)
      if (data_.adjectives[idx].cls == cls) ++n;
    return n;
  }

  // Equality over order-normalized content; source locations are ignored.
  friend bool operator==(const LexiconBundle& a, const LexiconBundle& b) {
    auto adj_less = [](const AdjectiveEntry& x, const AdjectiveEntry& y) {
      return std::tie(x.lemma, x.cls, x.absolute_polarity) <
             std::tie(y.lemma, y.cls, y.absolute_polarity);
    };
    auto feat_less = [](const FeatureRecord& x, const FeatureRecord& y) {
      return std::tie(x.domain, x.noun.canonical, x.category) <
             std::tie(y.domain, y.noun.canonical, y.category);
    };
    auto cell_less = [](const MatrixRecord& x, const MatrixRecord& y) {
      return std::tie(x.domain, x.canonical, x.lemma, x.cell) <
             std::tie(y.domain, y.canonical, y.lemma, y.cell);
    };
    auto alias_less = [](const AliasRecord& x, const AliasRecord& y) {
      return std::tie(x.alias, x.lemma) < std::tie(y.alias, y.lemma);
    };
    const auto& da = a.data_;
    const auto& db = b.data_;
    return detail::sorted_copy(da.adjectives, adj_less) ==
               detail::sorted_copy(db.adjectives, adj_less) &&
           detail::sorted_copy(da.features, feat_less) ==
               detail::sorted_copy(db.features, feat_less) &&
           detail::sorted_copy(da.matrix, cell_less) ==
               detail::sorted_copy(db.matrix, cell_less) &&
           detail::sorted_copy(da.aliases, alias_less) ==
               detail::sorted_copy(db.aliases, alias_less) &&
           da.rules == db.rules && a.cues_ == b.cues_;
  }

 private:
  struct DomainIndex {
    std::map<std::string, FeatureRef, std::less<>> surfaces;
    std::map<std::string, const FeatureNoun*, std::less<>> nouns;
  };

  LexiconData data_;
  std::map<std::string, std::size_t, std::less<>> adjectives_;
  std::map<std::string, std::string, std::less<>> aliases_;
  std::map<std::string, DomainIndex, std::less<>> domains_;
  std::map<std::tuple<std::string, std::string, std::string>, Cell> matrix_;
  std::set<std::string, std::less<>> cues_;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  DuplicateClass,
  DuplicateLemma,
  AbsolutePolarity,
  InvalidDomainName,
  DuplicateFeature,
  SynonymOverlap,
  DuplicateCell,
  DanglingMatrixKey,
  NonRelativeInMatrix,
  DanglingAlias,
  AliasShadowsLemma,
};

inline constexpr std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateClass: return "DuplicateClass";
    case ViolationKind::DuplicateLemma: return "DuplicateLemma";
    case ViolationKind::AbsolutePolarity: return "AbsolutePolarity";
    case ViolationKind::InvalidDomainName: return "InvalidDomainName";
    case ViolationKind::DuplicateFeature: return "DuplicateFeature";
    case ViolationKind::SynonymOverlap: return "SynonymOverlap";
    case ViolationKind::DuplicateCell: return "DuplicateCell";
    case ViolationKind::DanglingMatrixKey: return "DanglingMatrixKey";
    case ViolationKind::NonRelativeInMatrix: return "NonRelativeInMatrix";
    case ViolationKind::DanglingAlias: return "DanglingAlias";
    case ViolationKind::AliasShadowsLemma: return "AliasShadowsLemma";
  }
  return "Unknown";
}

struct Violation {
  ViolationKind kind;
  std::string message;
  SourceLocation origin;
};

using ValidationReport = std::vector<Violation>;

inline ValidationReport validate_bundle(const LexiconBundle& bundle) {
  const LexiconData& d = bundle.data();
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string msg, const SourceLocation& at) {
    report.push_back({k, std::move(msg), at});
  };

  // Lemma partition.
  std::map<std::string, std::set<AdjectiveClass>> classes;
  std::set<std::pair<std::string, AdjectiveClass>> seen_entry;
  std::set<std::string> reported_class;
  for (const auto& e : d.adjectives) {
    auto& cls = classes[e.lemma];
    if (!cls.empty() && !cls.contains(e.cls) && reported_class.insert(e.lemma).second)
      add(ViolationKind::DuplicateClass,
          "lemma '" + e.lemma + "' is assigned to more than one class", e.origin);
    if (!seen_entry.emplace(e.lemma, e.cls).second)
      add(ViolationKind::DuplicateLemma, "lemma '" + e.lemma + "' listed twice", e.origin);
    cls.insert(e.cls);
    if (e.absolute_polarity.has_value() != (e.cls == AdjectiveClass::Absolute))
      add(ViolationKind::AbsolutePolarity,
          "lemma '" + e.lemma + "': polarity must be present iff class is ABS", e.origin);
  }

  // Feature catalog.
  std::map<std::pair<std::string, std::string>, std::string> owner;  // (domain, surface) -> canonical
  std::set<std::pair<std::string, std::string>> canonicals;
  for (const auto& f : d.features) {
    if (!detail::is_domain_name(f.domain))
      add(ViolationKind::InvalidDomainName, "invalid domain name '" + f.domain + "'",
          f.origin);
    if (!canonicals.emplace(f.domain, f.noun.canonical).second)
      add(ViolationKind::DuplicateFeature,
          "feature '" + f.noun.canonical + "' listed twice in " + f.domain, f.origin);
  }
  for (const auto& f : d.features) {
    if (f.noun.synonyms.contains(f.noun.canonical))
      add(ViolationKind::SynonymOverlap,
          "feature '" + f.noun.canonical + "' lists itself as a synonym", f.origin);
    auto claim = [&](const std::string& surface) {
      auto [it, fresh] = owner.try_emplace({f.domain, surface}, f.noun.canonical);
      if (!fresh && it->second != f.noun.canonical)
        add(ViolationKind::SynonymOverlap,
            "'" + surface + "' is claimed by both '" + it->second + "' and '" +
                f.noun.canonical + "' in " + f.domain,
            f.origin);
    };
    claim(f.noun.canonical);
    for (const auto& s : f.noun.synonyms)
      if (s != f.noun.canonical) claim(s);
  }

  // Matrix closure.
  std::set<std::tuple<std::string, std::string, std::string>> cells;
  for (const auto& m : d.matrix) {
    if (!cells.emplace(m.domain, m.canonical, m.lemma).second) {
      add(ViolationKind::DuplicateCell,
          "cell (" + m.domain + ", " + m.canonical + ", " + m.lemma + ") listed twice",
          m.origin);
      continue;
    }
    if (!canonicals.contains({m.domain, m.canonical})) {
      add(ViolationKind::DanglingMatrixKey,
          "feature '" + m.canonical + "' is not in the " + m.domain + " catalog", m.origin);
      continue;
    }
    auto c = classes.find(m.lemma);
    if (c == classes.end()) {
      add(ViolationKind::DanglingMatrixKey,
          "adjective '" + m.lemma + "' is not in the lexicon", m.origin);
      continue;
    }
    if (!c->second.contains(AdjectiveClass::Relative) &&
        !c->second.contains(AdjectiveClass::Amplifier))
      add(ViolationKind::NonRelativeInMatrix,
          "adjective '" + m.lemma + "' is not REL or AMP but has a matrix cell", m.origin);
  }

  for (const auto& a : d.aliases) {
    if (classes.contains(a.alias))
      add(ViolationKind::AliasShadowsLemma, "alias '" + a.alias + "' is also a lemma",
          a.origin);
    else if (!classes.contains(a.lemma))
      add(ViolationKind::DanglingAlias,
          "alias '" + a.alias + "' points to unknown lemma '" + a.lemma + "'", a.origin);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Loading

class LexiconError : public std::runtime_error {
 public:
  enum class Kind { MissingFile, MalformedLine, DuplicateLemma, DanglingMatrixKey, Invalid };

  LexiconError(Kind kind, std::string file, std::size_t line, const std::string& reason)
      : std::runtime_error(format(kind, file, line, reason)),
        kind_(kind),
        file_(std::move(file)),
        line_(line) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

  static std::string_view kind_name(Kind k) {
    switch (k) {
      case Kind::MissingFile: return "MissingFile";
      case Kind::MalformedLine: return "MalformedLine";
      case Kind::DuplicateLemma: return "DuplicateLemma";
      case Kind::DanglingMatrixKey: return "DanglingMatrixKey";
      case Kind::Invalid: return "InvalidBundle";
    }
    return "InvalidBundle";
  }

 private:
  static std::string format(Kind k, const std::string& file, std::size_t line,
                            const std::string& reason) {
    std::string out = file;
    if (line) out += ":" + std::to_string(line);
    out += ": ";
    out += kind_name(k);
    out += ": " + reason;
    return out;
  }

  Kind kind_;
  std::string file_;
  std::size_t line_;
};

namespace detail {

class FileReader {
 public:
  FileReader(const std::filesystem::path& dir, std::string name, bool required)
      : name_(std::move(name)) {
    path_ = (dir / name_).string();
    present_ = tsv::read_file(path_, content_);
    if (!present_ && required)
      throw LexiconError(LexiconError::Kind::MissingFile, path_, 0, "required file not found");
  }

  bool present() const { return present_; }

  // Data rows with the optional column-name header removed.
  std::vector<tsv::Row> rows(const std::vector<std::string>& header) const {
    if (!present_) return {};
    tsv::LineProblem problem;
    std::size_t at = 0;
    auto rows = tsv::parse(content_, problem, at);
    if (problem == tsv::LineProblem::ByteOrderMark) fail(at, "byte order mark");
    if (problem == tsv::LineProblem::CarriageReturn) fail(at, "CR line ending");
    if (!rows.empty() && rows.front().fields == header) rows.erase(rows.begin());
    for (const auto& r : rows)
      if (r.fields.size() != header.size())
        fail(r.line_no, "expected " + std::to_string(header.size()) + " columns, got " +
                            std::to_string(r.fields.size()));
    return rows;
  }

  [[noreturn]] void fail(std::size_t line, const std::string& reason) const {
    throw LexiconError(LexiconError::Kind::MalformedLine, path_, line, reason);
  }

  SourceLocation at(std::size_t line) const { return {path_, line}; }

 private:
  std::string name_;
  std::string path_;
  std::string content_;
  bool present_ = false;
};

inline std::optional<Polarity> parse_sign(std::string_view s) {
  if (s == "+") return Polarity::Positive;
  if (s == "-") return Polarity::Negative;
  return std::nullopt;
}

}  // namespace detail

// Parses the resource directory without checking cross-references.
inline LexiconBundle read_bundle(const std::filesystem::path& dir) {
  using detail::FileReader;
  LexiconData data;

  FileReader adjectives(dir, "adjectives.tsv", true);
  FileReader features(dir, "features.tsv", true);
  FileReader relative(dir, "relative.tsv", true);
  FileReader endings(dir, "endings.tsv", false);
  FileReader negation(dir, "negation.tsv", false);
  FileReader aliases(dir, "aliases.tsv", false);

  for (const auto& r : adjectives.rows({"lemma", "class", "polarity"})) {
    const auto& f = r.fields;
    if (f[0].empty()) adjectives.fail(r.line_no, "empty lemma");
    auto cls = parse_class(f[1]);
    if (!cls) adjectives.fail(r.line_no, "unknown class '" + f[1] + "'");
    AdjectiveEntry e{f[0], *cls, std::nullopt, adjectives.at(r.line_no)};
    if (*cls == AdjectiveClass::Absolute) {
      e.absolute_polarity = detail::parse_sign(f[2]);
      if (!e.absolute_polarity) adjectives.fail(r.line_no, "ABS entry needs polarity + or -");
    } else if (f[2] != "NA") {
      adjectives.fail(r.line_no, "non-ABS entry must have polarity NA");
    }
    data.adjectives.push_back(std::move(e));
  }

  for (const auto& r : features.rows({"domain", "category", "canonical", "synonyms",
                                      "inherent"})) {
    const auto& f = r.fields;
    if (!detail::is_domain_name(f[0]))
      features.fail(r.line_no, "domain must be an uppercase identifier");
    if (f[1].empty()) features.fail(r.line_no, "empty category");
    if (f[2].empty()) features.fail(r.line_no, "empty canonical form");
    FeatureRecord rec{f[0], f[1], {f[2], {}, std::nullopt}, features.at(r.line_no)};
    if (!f[3].empty()) {
      for (auto& s : tsv::split(f[3], ';')) {
        if (s.empty()) features.fail(r.line_no, "empty synonym");
        rec.noun.synonyms.insert(std::move(s));
      }
    }
    if (f[4] != "0") {
      rec.noun.inherent_polarity = detail::parse_sign(f[4]);
      if (!rec.noun.inherent_polarity)
        features.fail(r.line_no, "inherent polarity must be +, - or 0");
    }
    data.features.push_back(std::move(rec));
  }

  for (const auto& r : relative.rows({"domain", "canonical", "lemma", "cell"})) {
    const auto& f = r.fields;
    if (!detail::is_domain_name(f[0]))
      relative.fail(r.line_no, "domain must be an uppercase identifier");
    if (f[1].empty() || f[2].empty()) relative.fail(r.line_no, "empty key");
    auto cell = parse_cell(f[3]);
    if (!cell) relative.fail(r.line_no, "cell must be +, - or z");
    data.matrix.push_back({f[0], f[1], f[2], *cell, relative.at(r.line_no)});
  }

  for (const auto& r : endings.rows({"suffix", "replacement"})) {
    if (r.fields[0].empty()) endings.fail(r.line_no, "empty suffix");
    data.rules.push_back({r.fields[0], r.fields[1]});
  }

  for (const auto& r : negation.rows({"cue"})) {
    if (r.fields[0].empty()) negation.fail(r.line_no, "empty cue");
    data.negation_cues.push_back(r.fields[0]);
  }

  for (const auto& r : aliases.rows({"alias", "lemma"})) {
    if (r.fields[0].empty() || r.fields[1].empty())
      aliases.fail(r.line_no, "empty alias or lemma");
    data.aliases.push_back({r.fields[0], r.fields[1], aliases.at(r.line_no)});
  }

  return LexiconBundle(std::move(data));
}

// Reads and validates; the first violation is raised as a LexiconError.
inline LexiconBundle load_bundle(const std::filesystem::path& dir) {
  LexiconBundle bundle = read_bundle(dir);
  auto report = validate_bundle(bundle);
  if (!report.empty()) {
    const auto& v = report.front();
    auto kind = LexiconError::Kind::Invalid;
    if (v.kind == ViolationKind::DuplicateClass || v.kind == ViolationKind::DuplicateLemma)
      kind = LexiconError::Kind::DuplicateLemma;
    else if (v.kind == ViolationKind::DanglingMatrixKey)
      kind = LexiconError::Kind::DanglingMatrixKey;
    throw LexiconError(kind, v.origin.file, v.origin.line,
                       std::string(to_string(v.kind)) + ": " + v.message);
  }
  return bundle;
}

// ---------------------------------------------------------------------------
// Serialization

// Matrix records in relative.tsv layout, sorted by (domain, canonical, lemma).
inline std::string format_matrix_tsv(std::vector<MatrixRecord> cells) {
  std::sort(cells.begin(), cells.end(), [](const MatrixRecord& a, const MatrixRecord& b) {
    return std::tie(a.domain, a.canonical, a.lemma) < std::tie(b.domain, b.canonical, b.lemma);
  });
  std::string out = "# domain\tcanonical\tlemma\tcell\n";
  for (const auto& m : cells)
    out += m.domain + "\t" + m.canonical + "\t" + m.lemma + "\t" +
           std::string(to_symbol(m.cell)) + "\n";
  return out;
}

// Writes the bundle back as TSV files (order-normalized).
inline void write_bundle(const LexiconBundle& bundle, const std::filesystem::path& dir) {
  const LexiconData& d = bundle.data();
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& content) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << content;
  };

  auto adjectives = d.adjectives;
  std::sort(adjectives.begin(), adjectives.end(),
            [](const auto& a, const auto& b) { return std::tie(a.lemma, a.cls) < std::tie(b.lemma, b.cls); });
  std::string s = "# lemma\tclass\tpolarity\n";
  for (const auto& e : adjectives)
    s += e.lemma + "\t" + std::string(to_code(e.cls)) + "\t" +
         (e.absolute_polarity ? std::string(to_symbol(*e.absolute_polarity)) : "NA") + "\n";
  write("adjectives.tsv", s);

  auto features = d.features;
  std::sort(features.begin(), features.end(), [](const auto& a, const auto& b) {
    return std::tie(a.domain, a.category, a.noun.canonical) <
           std::tie(b.domain, b.category, b.noun.canonical);
  });
  s = "# domain\tcategory\tcanonical\tsynonyms\tinherent\n";
  for (const auto& f : features) {
    std::vector<std::string> syn(f.noun.synonyms.begin(), f.noun.synonyms.end());
    s += f.domain + "\t" + f.category + "\t" + f.noun.canonical + "\t" + tsv::join(syn, ";") +
         "\t" +
         (f.noun.inherent_polarity ? std::string(to_symbol(*f.noun.inherent_polarity)) : "0") +
         "\n";
  }
  write("features.tsv", s);

  write("relative.tsv", format_matrix_tsv(d.matrix));

  s = "# suffix\treplacement\n";
  for (const auto& r : d.rules) s += r.suffix + "\t" + r.replacement + "\n";
  write("endings.tsv", s);

  std::set<std::string> cues(d.negation_cues.begin(), d.negation_cues.end());
  s = "# cue\n";
  for (const auto& c : cues) s += c + "\n";
  write("negation.tsv", s);

  auto aliases = d.aliases;
  std::sort(aliases.begin(), aliases.end(),
            [](const auto& a, const auto& b) { return std::tie(a.alias, a.lemma) < std::tie(b.alias, b.lemma); });
  s = "# alias\tlemma\n";
  for (const auto& a : aliases) s += a.alias + "\t" + a.lemma + "\n";
  write("aliases.tsv", s);
}

}  // namespace polaris
