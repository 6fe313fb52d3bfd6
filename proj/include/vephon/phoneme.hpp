#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vephon/error.hpp"

namespace vephon {

enum class TokenKind {
  Initial,
  Medial,
  Nucleus,
  Ending,
  Tone,
  EnglishOnly,
  Separator,
  Control,
};

enum class TokenOrigin {
  Vietnamese,
  English,
  Shared,
};

std::string to_string(TokenKind kind);
std::string to_string(TokenOrigin origin);
TokenKind token_kind_from_string(const std::string& s);
TokenOrigin token_origin_from_string(const std::string& s);

// One unit of the representative vocabulary. Tokens are opaque text atoms;
// nothing downstream makes phonetic judgments from the surface.
struct PhonemeToken {
  std::string surface;
  TokenKind kind = TokenKind::Initial;
  TokenOrigin origin = TokenOrigin::Vietnamese;

  bool operator==(const PhonemeToken& other) const = default;
};

// Checks the per-token invariants (non-empty, no whitespace, kind/surface
// agreement for tone, separator and control tokens).
void validate_token(const PhonemeToken& token);

bool is_tone_surface(const std::string& surface);

class PhonemeVocabulary {
 public:
  PhonemeVocabulary() = default;

  // Inventory file: UTF-8, line-oriented, `surface<TAB>kind<TAB>origin`,
  // `#` starts a comment, order defines ids.
  static PhonemeVocabulary load(const std::string& path);
  static PhonemeVocabulary from_tokens(std::vector<PhonemeToken> tokens);

  const std::vector<PhonemeToken>& entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

  const PhonemeToken& at(size_t id) const;
  std::optional<int> id_of(const std::string& surface) const;
  const PhonemeToken* find(const std::string& surface) const;
  bool contains(const std::string& surface) const { return find(surface) != nullptr; }

  // Entries with origin vietnamese/shared and a syllable-structural kind.
  // The bundled default inventory must have exactly 53 of these.
  size_t vietnamese_category_count() const;

  size_t count_kind(TokenKind kind) const;

  // Serializes back to the inventory format, bit-exact for files produced by
  // this writer (comments from the source file are not preserved).
  std::string to_inventory_text() const;

 private:
  void rebuild_index();
  void validate() const;

  std::vector<PhonemeToken> entries_;
  std::unordered_map<std::string, int> index_;
};

// Ordered tokens with `$` (Vietnamese word/syllable space) and `|` (English
// syllable boundary) separators. Construction enforces the invariants:
// no adjacent separators, no leading/trailing separator, tone tokens only
// directly after a vowel-bearing token, no control tokens.
class PhonemeSequence {
 public:
  PhonemeSequence() = default;
  explicit PhonemeSequence(std::vector<PhonemeToken> tokens);

  const std::vector<PhonemeToken>& tokens() const { return tokens_; }
  size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  bool operator==(const PhonemeSequence& other) const = default;

 private:
  std::vector<PhonemeToken> tokens_;
};

// Tokens joined by single spaces; separators rendered as their surfaces.
std::string serialize(const PhonemeSequence& seq);

// Inverse of serialize over valid sequences. Unknown surfaces and structural
// violations are reported with the token position (0-based).
PhonemeSequence parse_sequence(const std::string& text, const PhonemeVocabulary& vocab);

std::vector<int> to_ids(const PhonemeSequence& seq, const PhonemeVocabulary& vocab);
PhonemeSequence from_ids(const std::vector<int>& ids, const PhonemeVocabulary& vocab);

}  // namespace vephon
