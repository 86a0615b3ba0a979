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

// Loads the seed lexicon and classifies a few romanized review sentences.

#include <iostream>

#include "polaris/polaris.hpp"

int main(int argc, char** argv) {
  const char* dir = argc > 1 ? argv[1] : POLARIS_LEXICON_DIR;
  const polaris::LexiconBundle bundle = polaris::load_bundle(dir);

  struct Review {
    const char* domain;
    const char* text;
  };
  const Review reviews[] = {
      {"HOTEL", "Lostey hotheyl cupyen-ey khun kenmul-i manh-supnita."},
      {"HOTEL", "Hotheyl kyumo-ka khu-ko kunsaha-neyyo."},
      {"HOTEL", "Lostey hotyel-un khu-ko wungcang-haysseyo."},
      {"MOBILE", "Aiphon-uy khuki-ka sayngkak-pota khu-n kes kath-ayo."},
      {"MOBILE", "Hayntuphon pethun-i khe-se cal nullye-yo."},
      {"MOVIE", "I yenghwa-nun kwankayk-ul ppalatuli-nun hupilyek-I kang-haysseyo."},
      {"MOVIE", "Phoklyekseng-I kang-han yenghwa-tukunyo."},
  };

  for (const auto& r : reviews) {
    const auto s = polaris::analyze_sentence(r.text, bundle, r.domain);
    std::cout << r.domain << '\t' << polaris::to_string(s.label) << '\t' << r.text << '\n';
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      const auto& p = s.pairs[i];
      std::cout << "    " << p.adjective.lemma << (p.adjective.negated ? " (negated)" : "")
                << " -> " << (p.feature ? p.feature->canonical : std::string("-")) << " : "
                << polaris::to_string(s.resolutions[i].value) << " via "
                << polaris::to_string(s.resolutions[i].source) << '\n';
    }
  }
  return 0;
}
