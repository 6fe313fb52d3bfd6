#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vephon/phoneme.hpp"

namespace vephon {

// One syllable of an IPA transcription; `stressed` is set by a leading
// primary-stress mark.
struct IpaSyllable {
  std::vector<std::string> phones;
  bool stressed = false;

  bool operator==(const IpaSyllable& other) const = default;
};

// The tokenizable IPA phone set (ipa_phones.tsv, one phone per line).
// Multi-character phones (dʒ, aɪ, iː, ...) are matched longest-first.
class IpaPhoneTable {
 public:
  static IpaPhoneTable load(const std::string& path);

  bool contains(const std::string& phone) const;
  size_t max_phone_cps() const { return max_cps_; }

 private:
  std::unordered_map<std::string, bool> phones_;
  size_t max_cps_ = 0;
};

// Splits on "." syllable dots; ˈ marks the following syllable stressed and
// ˌ (secondary stress) is skipped. Offsets in errors count code points of
// the transcription. Enclosing slashes are accepted and ignored.
std::vector<IpaSyllable> parse_ipa(const std::string& transcription,
                                   const IpaPhoneTable& table);

enum class PhoneClass {
  SharedVowel,
  SharedConsonant,
  EnglishVowel,
  EnglishConsonant,
};

// IPA-to-representative mapping (en_map.tsv: phone, target token, class).
// The pseudo-row `<stress>` fixes which tone token realizes primary stress.
// Verified at load: one row per phone, shared rows target Vietnamese
// categories, english rows target english_only tokens.
class EnPhonemeMapping {
 public:
  static EnPhonemeMapping load(const std::string& path, const IpaPhoneTable& table,
                               const PhonemeVocabulary& vocab);

  // Syllables joined by `|`; within a stressed syllable the stress tone
  // token lands right after the vowel run. Never emits `$`.
  PhonemeSequence map_standard(const std::vector<IpaSyllable>& syllables,
                               const PhonemeVocabulary& vocab) const;

  struct Row {
    std::string target;
    PhoneClass cls;
  };
  const Row& row(const std::string& phone) const;  // coverage error if absent
  const Row* find(const std::string& phone) const;
  const std::string& stress_token() const { return stress_token_; }

 private:
  std::unordered_map<std::string, Row> rows_;
  std::string stress_token_;
};

struct IpaLexiconEntry {
  std::string word;
  std::string ipa;
  std::optional<double> duration_hint;
};

// `word<TAB>ipa[<TAB>duration_seconds]`; words are lowercase ASCII letters
// or hyphen and every transcription must tokenize.
class IpaLexicon {
 public:
  static IpaLexicon load(const std::string& path, const IpaPhoneTable& table);

  const std::vector<IpaLexiconEntry>& entries() const { return entries_; }
  const IpaLexiconEntry* find(const std::string& word) const;

 private:
  std::vector<IpaLexiconEntry> entries_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace vephon
