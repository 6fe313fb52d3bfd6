#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vephon/phoneme.hpp"

namespace vephon {

// Structured Vietnamese syllable. Fields hold token surfaces from the
// vocabulary's Vietnamese categories; tone is the 1..6 digit of the -1..-6
// tone tokens.
struct Syllable {
  std::optional<std::string> initial;
  std::optional<std::string> medial;
  std::string nucleus;
  std::optional<std::string> ending;
  int tone = 1;

  bool operator==(const Syllable& other) const = default;
};

std::string to_string(const Syllable& s);

// Unicode NFC over the Vietnamese letter repertoire (precomposed vowels,
// breve/circumflex/horn modifiers, the five tone marks), case folding, and
// whitespace collapsing. Code points outside the repertoire pass through.
std::string normalize(const std::string& text);

// Orthography tables loaded from data files: onset spellings (initials.tsv),
// the closed rhyme set (rhymes.tsv), tone marks (tones.tsv) and the
// coda/tone phonotactics (phonotactics.tsv).
class OrthographyTables {
 public:
  static OrthographyTables load(const std::string& data_dir,
                                const PhonemeVocabulary& vocab);

  // Decomposes one normalized word; the decomposition is unique under the
  // shipped tables. Unknown graphemes and vowel-less words are parse errors,
  // an illegal tone/coda combination is a phonotactics error.
  Syllable parse_syllable(const std::string& word) const;

  // Inverse of parse_syllable over legal syllables.
  std::string render_syllable(const Syllable& s) const;

  // Throws unless the structure has a canonical spelling and the tone is
  // allowed with the coda.
  void check_legal(const Syllable& s) const;

  bool is_checked_coda(const std::string& ending) const;
  const std::vector<int>& allowed_tones(const std::optional<std::string>& ending) const;

  // Token surfaces in emission order: initial, medial, nucleus, tone (levels
  // are unmarked), ending.
  std::vector<std::string> syllable_tokens(const Syllable& s) const;

  // Every legal syllable generable from the tables (canonical spellings).
  std::vector<Syllable> enumerate_legal() const;

  // Whole sentence to a `$`-separated phoneme sequence. Parse failures carry
  // the word index; unparseable words fail the whole call.
  PhonemeSequence text_to_phonemes(const std::string& sentence,
                                   const PhonemeVocabulary& vocab) const;

 private:
  struct InitialRow {
    std::string spelling;
    std::string token;
    std::string flags;   // "-", "gi", "qu"
    std::string render;  // "-", "default", "front", "medial"
  };
  struct RhymeRow {
    std::string spelling;
    std::optional<std::string> medial;
    std::string nucleus;
    std::optional<std::string> ending;
    bool ctx_bare = false, ctx_onset = false, ctx_q = false;
    bool canon_bare = false, canon_onset = false, canon_q = false;
    int tone_pos = 0;
  };

  enum class Context { Bare, Onset, Q };

  const RhymeRow* find_rhyme(const std::string& spelling, Context ctx) const;
  const RhymeRow* canon_row(const Syllable& s, Context ctx) const;
  std::string initial_spelling(const std::string& token,
                               const std::string& rhyme_spelling,
                               bool has_medial) const;
  void validate_against(const PhonemeVocabulary& vocab) const;
  void validate_canon_unique() const;

  std::vector<InitialRow> initials_;
  std::vector<RhymeRow> rhymes_;
  std::vector<int> open_tones_;
  std::vector<int> checked_tones_;
  std::vector<std::string> checked_codas_;
};

}  // namespace vephon
