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

// polaris: command-line front end.
//
//   polaris classify    --lexicon DIR (--domain D | --manifest FILE) [--format tsv|json] [inputs...]
//   polaris concordance --lexicon DIR --domain D --adjective LEMMA [--format tsv|json] [inputs...]
//   polaris stats       --lexicon DIR --manifest FILE [--format tsv|json]
//   polaris lexicon validate --lexicon DIR
//   polaris lexicon export   --lexicon DIR --domain D [--adjective A]... [--format grid|tsv]
//
// Exit codes: 0 ok, 2 lexicon error, 3 input error. Data goes to stdout only
// after the whole command has succeeded; diagnostics go to stderr.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polaris/polaris.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLexicon = 2;
constexpr int kExitInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ManifestRow {
  std::string doc_id;
  std::string domain;
  std::string path;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::string content;
  if (!polaris::tsv::read_file(path, content)) throw InputError("cannot read " + path);
  return content;
}

std::vector<ManifestRow> read_manifest(const std::string& path,
                                       const polaris::LexiconBundle& bundle) {
  std::string content = read_input(path);
  polaris::tsv::LineProblem problem;
  std::size_t at = 0;
  auto rows = polaris::tsv::parse(content, problem, at);
  if (problem != polaris::tsv::LineProblem::None)
    throw InputError(path + ":" + std::to_string(at) + ": bad line ending or BOM");
  if (!rows.empty() && rows.front().fields == std::vector<std::string>{"doc_id", "domain", "path"})
    rows.erase(rows.begin());

  const fs::path base = fs::path(path).parent_path();
  std::vector<ManifestRow> out;
  std::set<std::string> ids;
  for (const auto& r : rows) {
    const std::string where = path + ":" + std::to_string(r.line_no) + ": ";
    if (r.fields.size() != 3) throw InputError(where + "expected doc_id, domain, path");
    ManifestRow row{r.fields[0], r.fields[1], r.fields[2]};
    if (row.doc_id.empty()) throw InputError(where + "empty doc_id");
    if (!ids.insert(row.doc_id).second) throw InputError(where + "duplicate doc_id " + row.doc_id);
    if (!bundle.has_domain(row.domain)) throw InputError(where + "unknown domain " + row.domain);
    fs::path p(row.path);
    if (p.is_relative()) p = base / p;
    row.path = p.string();
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end(),
            [](const ManifestRow& a, const ManifestRow& b) { return a.doc_id < b.doc_id; });
  return out;
}

std::string format_pair(const polaris::OpinionPair& p, const polaris::PairResolution& r) {
  std::string s = p.adjective.negated ? "!" : "";
  s += p.adjective.lemma + "@" + std::to_string(p.adjective.token_index) + ">";
  s += p.feature ? p.feature->canonical + "@" + std::to_string(p.feature->token_index) : "-";
  s += ":" + std::string(polaris::to_string(r.value)) + "/" +
       std::string(polaris::to_string(r.source));
  return s;
}

json pair_json(const polaris::OpinionPair& p, const polaris::PairResolution& r) {
  json j;
  j["adjective"] = p.adjective.lemma;
  j["token_index"] = p.adjective.token_index;
  j["negated"] = p.adjective.negated;
  if (p.feature) {
    j["feature"] = p.feature->canonical;
    j["category"] = p.feature->category;
    j["feature_index"] = p.feature->token_index;
    j["distance"] = *p.distance;
  } else {
    j["feature"] = nullptr;
  }
  j["polarity"] = polaris::to_string(r.value);
  j["source"] = polaris::to_string(r.source);
  return j;
}

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string tenths(std::uint64_t t) {
  return std::to_string(t / 10) + "." + std::to_string(t % 10);
}

struct Options {
  std::string lexicon;
  std::string domain;
  std::string manifest;
  std::string format = "tsv";
  std::string slice_format = "grid";
  std::string adjective;
  std::vector<std::string> adjectives;
  std::vector<std::string> inputs;
  std::size_t window = polaris::kDefaultWindow;
};

polaris::LexiconBundle open_lexicon(const Options& o) {
  if (o.lexicon.empty())
    throw polaris::LexiconError(polaris::LexiconError::Kind::MissingFile, "", 0,
                                "no lexicon directory (use --lexicon or POLARIS_LEXICON_DIR)");
  return polaris::load_bundle(o.lexicon);
}

std::string run_classify(const Options& o) {
  const auto bundle = open_lexicon(o);
  std::vector<ManifestRow> docs;
  if (!o.manifest.empty()) {
    docs = read_manifest(o.manifest, bundle);
  } else {
    if (!bundle.has_domain(o.domain)) throw InputError("unknown domain " + o.domain);
    auto inputs = o.inputs.empty() ? std::vector<std::string>{"-"} : o.inputs;
    std::set<std::string> seen;
    for (const auto& in : inputs) {
      if (!seen.insert(in).second) throw InputError("input given twice: " + in);
      docs.push_back({in, o.domain, in});
    }
    std::sort(docs.begin(), docs.end(),
              [](const ManifestRow& a, const ManifestRow& b) { return a.doc_id < b.doc_id; });
  }

  const polaris::AnalysisOptions opts{o.window, polaris::kNegationSpan};
  std::string out;
  for (const auto& doc : docs) {
    const auto analysis = polaris::analyze_document(read_input(doc.path), bundle, doc.domain, opts);
    for (const auto& s : analysis.sentences) {
      if (o.format == "json") {
        json j;
        j["schema"] = 1;
        j["doc_id"] = doc.doc_id;
        j["domain"] = doc.domain;
        j["sentence_index"] = s.index;
        j["label"] = polaris::to_string(s.label);
        j["text"] = s.text;
        j["pairs"] = json::array();
        for (std::size_t i = 0; i < s.pairs.size(); ++i)
          j["pairs"].push_back(pair_json(s.pairs[i], s.resolutions[i]));
        j["notes"] = json::array();
        if (s.comparative) j["notes"].push_back("ComparativeDetected");
        out += j.dump() + "\n";
      } else {
        std::vector<std::string> pairs;
        for (std::size_t i = 0; i < s.pairs.size(); ++i)
          pairs.push_back(format_pair(s.pairs[i], s.resolutions[i]));
        out += doc.doc_id + "\t" + std::to_string(s.index) + "\t" +
               std::string(polaris::to_string(s.label)) + "\t" +
               (pairs.empty() ? "-" : polaris::tsv::join(pairs, ";")) + "\t" +
               (s.comparative ? "ComparativeDetected" : "-") + "\n";
      }
    }
  }
  return out;
}

std::string run_concordance(const Options& o) {
  const auto bundle = open_lexicon(o);
  if (!bundle.has_domain(o.domain)) throw InputError("unknown domain " + o.domain);
  if (o.adjective.empty()) throw InputError("--adjective must be non-empty");
  std::vector<std::string> docs;
  for (const auto& in : o.inputs.empty() ? std::vector<std::string>{"-"} : o.inputs)
    docs.push_back(read_input(in));
  const polaris::AnalysisOptions opts{o.window, polaris::kNegationSpan};
  const auto rep = polaris::concordance_report(docs, o.domain, o.adjective, bundle, opts);
  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["adjective"] = rep.adjective;
    j["domain"] = rep.domain;
    j["total"] = rep.total;
    j["opinion"] = rep.opinion;
    j["noise"] = rep.noise;
    j["precision"] = rep.precision;
    return j.dump() + "\n";
  }
  return "adjective\tdomain\ttotal\topinion\tnoise\tprecision\n" + rep.adjective + "\t" +
         rep.domain + "\t" + std::to_string(rep.total) + "\t" + std::to_string(rep.opinion) +
         "\t" + std::to_string(rep.noise) + "\t" + fixed3(rep.precision) + "\n";
}

std::string run_stats(const Options& o) {
  const auto bundle = open_lexicon(o);
  if (o.manifest.empty()) throw InputError("stats needs --manifest");
  std::vector<polaris::CorpusDocument> corpus;
  for (const auto& row : read_manifest(o.manifest, bundle))
    corpus.push_back({row.domain, read_input(row.path)});
  const auto rep = polaris::frequency_report(corpus, bundle);

  if (o.format == "json") {
    json j;
    j["schema"] = 1;
    j["per_domain"] = json::object();
    for (const auto& [d, c] : rep.per_domain)
      j["per_domain"][d] = {{"total", c.total}, {"absolute", c.absolute}, {"relative", c.relative}};
    j["averages"] = {{"total", rep.averages.total},
                     {"absolute", rep.averages.absolute},
                     {"relative", rep.averages.relative}};
    j["percentages"] = {{"absolute", rep.absolute_pct()}, {"relative", rep.relative_pct()}};
    j["rounding_consistent"] = rep.rounding_consistent;
    return j.dump() + "\n";
  }
  std::string out = "domain\ttotal\tabsolute\trelative\n";
  auto row = [&](const std::string& name, const polaris::ClassCounts& c) {
    out += name + "\t" + std::to_string(c.total) + "\t" + std::to_string(c.absolute) + "\t" +
           std::to_string(c.relative) + "\n";
  };
  for (const auto& [d, c] : rep.per_domain) row(d, c);
  row("AVERAGE", rep.averages);
  out += "PERCENT\t" + std::string(rep.averages.total ? "100.0" : "0.0") + "\t" +
         tenths(rep.absolute_pct_tenths) + "\t" + tenths(rep.relative_pct_tenths) + "\n";
  out += std::string("ROUNDING\t") + (rep.rounding_consistent ? "consistent" : "inconsistent") + "\n";
  return out;
}

// Returns the report and sets `clean` to whether it is empty.
std::string run_validate(const Options& o, bool& clean) {
  if (o.lexicon.empty())
    throw polaris::LexiconError(polaris::LexiconError::Kind::MissingFile, "", 0,
                                "no lexicon directory (use --lexicon or POLARIS_LEXICON_DIR)");
  const auto report = polaris::validate_bundle(polaris::read_bundle(o.lexicon));
  std::string out;
  for (const auto& v : report)
    out += std::string(polaris::to_string(v.kind)) + "\t" + v.origin.file + "\t" +
           std::to_string(v.origin.line) + "\t" + v.message + "\n";
  clean = report.empty();
  return out;
}

std::string run_export(const Options& o) {
  const auto bundle = open_lexicon(o);
  if (!bundle.has_domain(o.domain)) throw InputError("unknown domain " + o.domain);
  const auto slice = polaris::export_matrix_slice(bundle, o.domain, o.adjectives);
  return o.slice_format == "tsv" ? slice.to_tsv() : slice.to_grid();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polaris: feature-aware adjective polarity for product reviews"};
  app.require_subcommand(1);
  Options o;

  auto add_lexicon = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", o.lexicon, "Lexicon directory")->envname("POLARIS_LEXICON_DIR");
  };

  auto* classify = app.add_subcommand("classify", "Label every sentence of the inputs");
  add_lexicon(classify);
  auto* dom = classify->add_option("--domain", o.domain, "Domain of all inputs");
  auto* man = classify->add_option("--manifest", o.manifest, "TSV of doc_id, domain, path");
  dom->excludes(man);
  classify->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));
  classify->add_option("--window", o.window, "Pairing window in tokens");
  classify->add_option("inputs", o.inputs, "Text files ('-' for stdin)");

  auto* conc = app.add_subcommand("concordance", "Opinion/noise split of sentences with a keyword");
  add_lexicon(conc);
  conc->add_option("--domain", o.domain)->required();
  conc->add_option("--adjective", o.adjective)->required();
  conc->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));
  conc->add_option("--window", o.window, "Pairing window in tokens");
  conc->add_option("inputs", o.inputs, "Text files ('-' for stdin)");

  auto* stats = app.add_subcommand("stats", "Absolute/relative adjective frequencies per domain");
  add_lexicon(stats);
  stats->add_option("--manifest", o.manifest)->required();
  stats->add_option("--format", o.format)->check(CLI::IsMember({"tsv", "json"}));

  auto* lexicon = app.add_subcommand("lexicon", "Lexicon maintenance");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "Report every consistency violation");
  add_lexicon(validate);
  auto* exp = lexicon->add_subcommand("export", "Print a matrix slice by topic category");
  add_lexicon(exp);
  exp->add_option("--domain", o.domain)->required();
  exp->add_option("--adjective", o.adjectives, "Adjective lemma (repeatable)");
  exp->add_option("--format", o.slice_format, "grid or tsv")->check(CLI::IsMember({"grid", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    std::string out;
    int code = kExitOk;
    if (classify->parsed()) {
      if (o.domain.empty() == o.manifest.empty())
        throw InputError("classify needs exactly one of --domain or --manifest");
      out = run_classify(o);
    } else if (conc->parsed()) {
      out = run_concordance(o);
    } else if (stats->parsed()) {
      out = run_stats(o);
    } else if (validate->parsed()) {
      bool clean = false;
      out = run_validate(o, clean);
      if (!clean) code = kExitLexicon;
      std::cerr << (clean ? "lexicon is valid\n" : "lexicon has violations\n");
    } else if (exp->parsed()) {
      out = run_export(o);
    }
    std::cout << out;
    std::cout.flush();
    return code;
  } catch (const polaris::LexiconError& e) {
    std::cerr << "polaris: lexicon error: " << e.what() << '\n';
    return kExitLexicon;
  } catch (const polaris::UnknownDomainError& e) {
    std::cerr << "polaris: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "polaris: " << e.what() << '\n';
    return kExitInput;
  }
}
