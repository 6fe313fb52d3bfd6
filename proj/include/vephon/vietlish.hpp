#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vephon/g2p.hpp"
#include "vephon/phoneme.hpp"
#include "vephon/syllable.hpp"

namespace vephon {

// Projects English words onto legal Vietnamese syllables. Two tiers: the
// override lexicon pins golden pairs verbatim, the projection rules cover
// everything else. Both live in data files (projection.tsv,
// vietlish_overrides.tsv).
class VietlishLocalizer {
 public:
  struct Override {
    std::string text;                   // localized Vietnamese orthography
    std::optional<std::string> tokens;  // pinned phoneme line, if any
  };

  static VietlishLocalizer load(const std::string& data_dir,
                                const PhonemeVocabulary& vocab);

  // Overrides win; otherwise each IPA syllable is projected: onset clusters
  // reduce to the consonant nearest the vowel, trailing s/z drop from coda
  // clusters, stop codas take the checked tone (sắc) and everything else the
  // level tone, and the result must pass the orthography tables' legality
  // check.
  std::vector<Syllable> localize(const std::string& word,
                                 const std::vector<IpaSyllable>& ipa,
                                 const OrthographyTables& tables) const;

  // localize, then the `$`-separated phoneme sequence. Overrides with a
  // pinned token line short-circuit.
  PhonemeSequence localize_to_phonemes(const std::string& word,
                                       const std::vector<IpaSyllable>& ipa,
                                       const OrthographyTables& tables,
                                       const PhonemeVocabulary& vocab) const;

  std::string localized_text(const std::string& word,
                             const std::vector<IpaSyllable>& ipa,
                             const OrthographyTables& tables) const;

  const Override* find_override(const std::string& word) const;
  void add_override(const std::string& word, Override entry);  // for tests

 private:
  struct ProjectionRow {
    std::optional<std::string> onset;
    std::optional<std::string> nucleus;
    std::optional<std::string> nucleus_coda;  // offglide from diphthongs
    std::optional<std::string> coda;
  };

  Syllable project_syllable(const IpaSyllable& syl, const OrthographyTables& tables,
                            const std::string& word) const;
  const ProjectionRow& projection(const std::string& phone,
                                  const std::string& word) const;

  std::unordered_map<std::string, ProjectionRow> projection_;
  std::unordered_map<std::string, Override> overrides_;
  int checked_tone_ = 4;
  int level_tone_ = 1;
};

}  // namespace vephon
