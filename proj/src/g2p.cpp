#include "vephon/g2p.hpp"

#include <algorithm>

#include "vephon/tsv.hpp"
#include "vephon/utf8.hpp"

namespace vephon {

namespace {

constexpr char32_t kPrimaryStress = 0x02C8;    // ˈ
constexpr char32_t kSecondaryStress = 0x02CC;  // ˌ

PhoneClass phone_class_from_string(const std::string& s, const std::string& where) {
  if (s == "shared_vowel") return PhoneClass::SharedVowel;
  if (s == "shared_consonant") return PhoneClass::SharedConsonant;
  if (s == "english_vowel") return PhoneClass::EnglishVowel;
  if (s == "english_consonant") return PhoneClass::EnglishConsonant;
  throw_error(ErrorKind::Parse, where + ": unknown phone class '" + s + "'");
}

bool is_vowel_class(PhoneClass cls) {
  return cls == PhoneClass::SharedVowel || cls == PhoneClass::EnglishVowel;
}

}  // namespace

IpaPhoneTable IpaPhoneTable::load(const std::string& path) {
  IpaPhoneTable table;
  for (const auto& row : tsv::read_file(path)) {
    tsv::expect_fields(row, 1, path);
    const std::string& phone = row.fields[0];
    if (table.phones_.count(phone)) {
      throw_error(ErrorKind::Validate,
                  path + ":" + std::to_string(row.line_no) + ": duplicate phone '" +
                      phone + "'");
    }
    table.phones_[phone] = true;
    table.max_cps_ = std::max(table.max_cps_, utf8::length(phone));
  }
  if (table.phones_.empty()) {
    throw_error(ErrorKind::Validate, path + ": empty phone table");
  }
  return table;
}

bool IpaPhoneTable::contains(const std::string& phone) const {
  return phones_.count(phone) > 0;
}

std::vector<IpaSyllable> parse_ipa(const std::string& transcription,
                                   const IpaPhoneTable& table) {
  std::vector<char32_t> cps = utf8::decode(transcription);
  // Enclosing /slashes/ are presentation, not content.
  size_t begin = 0, end = cps.size();
  if (end - begin >= 2 && cps[begin] == U'/' && cps[end - 1] == U'/') {
    ++begin;
    --end;
  }

  std::vector<IpaSyllable> syllables;
  IpaSyllable current;
  bool current_open = false;
  bool stress_pending = false;

  auto flush = [&] {
    if (!current_open) return;
    syllables.push_back(current);
    current = IpaSyllable{};
    current_open = false;
  };

  size_t i = begin;
  while (i < end) {
    char32_t cp = cps[i];
    if (cp == U'.') {
      flush();
      ++i;
      continue;
    }
    if (cp == kPrimaryStress) {
      flush();
      stress_pending = true;
      ++i;
      continue;
    }
    if (cp == kSecondaryStress || cp == U' ') {
      ++i;
      continue;
    }
    // Longest phone match from this position.
    size_t max_len = std::min(table.max_phone_cps(), end - i);
    std::string matched;
    size_t matched_len = 0;
    for (size_t len = max_len; len >= 1; --len) {
      std::string candidate =
          utf8::encode(std::vector<char32_t>(cps.begin() + i, cps.begin() + i + len));
      if (table.contains(candidate)) {
        matched = candidate;
        matched_len = len;
        break;
      }
    }
    if (matched_len == 0) {
      throw_error(ErrorKind::Parse, "unknown IPA symbol '" + utf8::encode(cp) +
                                        "' at offset " + std::to_string(i));
    }
    if (!current_open) {
      current_open = true;
      current.stressed = stress_pending;
      stress_pending = false;
    }
    current.phones.push_back(matched);
    i += matched_len;
  }
  flush();

  int stressed = 0;
  for (const auto& syl : syllables) stressed += syl.stressed ? 1 : 0;
  if (stressed > 1) {
    throw_error(ErrorKind::Parse, "more than one primary stress in '" +
                                      transcription + "'");
  }
  return syllables;
}

EnPhonemeMapping EnPhonemeMapping::load(const std::string& path,
                                        const IpaPhoneTable& table,
                                        const PhonemeVocabulary& vocab) {
  EnPhonemeMapping mapping;
  for (const auto& row : tsv::read_file(path)) {
    tsv::expect_fields(row, 3, path);
    const std::string& phone = row.fields[0];
    const std::string& target = row.fields[1];
    const std::string& cls = row.fields[2];
    std::string where = path + ":" + std::to_string(row.line_no);
    if (phone == "<stress>") {
      if (cls != "stress") {
        throw_error(ErrorKind::Parse, where + ": <stress> row must have class stress");
      }
      const PhonemeToken* token = vocab.find(target);
      if (!token || token->kind != TokenKind::Tone) {
        throw_error(ErrorKind::Validate,
                    where + ": stress target '" + target + "' is not a tone token");
      }
      mapping.stress_token_ = target;
      continue;
    }
    if (!table.contains(phone)) {
      throw_error(ErrorKind::Validate,
                  where + ": phone '" + phone + "' missing from the phone table");
    }
    if (mapping.rows_.count(phone)) {
      // The mapping must be a function.
      throw_error(ErrorKind::Validate, where + ": duplicate row for phone '" + phone + "'");
    }
    Row r;
    r.target = target;
    r.cls = phone_class_from_string(cls, where);
    const PhonemeToken* token = vocab.find(target);
    if (!token) {
      throw_error(ErrorKind::Validate,
                  where + ": target '" + target + "' missing from the vocabulary");
    }
    switch (r.cls) {
      case PhoneClass::SharedVowel:
        if (token->kind != TokenKind::Nucleus) {
          throw_error(ErrorKind::Validate,
                      where + ": shared vowel must target a nucleus category");
        }
        break;
      case PhoneClass::SharedConsonant:
        if (token->kind != TokenKind::Initial && token->kind != TokenKind::Medial) {
          throw_error(ErrorKind::Validate,
                      where + ": shared consonant must target an initial or medial");
        }
        break;
      case PhoneClass::EnglishVowel:
      case PhoneClass::EnglishConsonant:
        if (token->kind != TokenKind::EnglishOnly) {
          throw_error(ErrorKind::Validate,
                      where + ": english phone must target an english_only token");
        }
        break;
    }
    mapping.rows_.emplace(phone, std::move(r));
  }
  if (mapping.stress_token_.empty()) {
    throw_error(ErrorKind::Validate, path + ": missing <stress> row");
  }
  return mapping;
}

const EnPhonemeMapping::Row* EnPhonemeMapping::find(const std::string& phone) const {
  auto it = rows_.find(phone);
  if (it == rows_.end()) return nullptr;
  return &it->second;
}

const EnPhonemeMapping::Row& EnPhonemeMapping::row(const std::string& phone) const {
  const Row* r = find(phone);
  if (!r) {
    throw_error(ErrorKind::Coverage, "no mapping row for phone '" + phone + "'");
  }
  return *r;
}

PhonemeSequence EnPhonemeMapping::map_standard(const std::vector<IpaSyllable>& syllables,
                                               const PhonemeVocabulary& vocab) const {
  std::vector<PhonemeToken> tokens;
  for (size_t si = 0; si < syllables.size(); ++si) {
    const IpaSyllable& syl = syllables[si];
    if (si > 0) tokens.push_back(*vocab.find("|"));

    // The stress tone goes after the last phone of the first vowel run.
    int tone_after = -1;
    if (syl.stressed) {
      for (size_t pi = 0; pi < syl.phones.size(); ++pi) {
        if (is_vowel_class(row(syl.phones[pi]).cls)) {
          tone_after = static_cast<int>(pi);
        } else if (tone_after >= 0) {
          break;
        }
      }
    }
    for (size_t pi = 0; pi < syl.phones.size(); ++pi) {
      const Row& r = row(syl.phones[pi]);
      const PhonemeToken* token = vocab.find(r.target);
      if (!token) {
        throw_error(ErrorKind::Validate,
                    "mapping target '" + r.target + "' missing from vocabulary");
      }
      tokens.push_back(*token);
      if (static_cast<int>(pi) == tone_after) {
        tokens.push_back(*vocab.find(stress_token_));
      }
    }
  }
  return PhonemeSequence(std::move(tokens));
}

IpaLexicon IpaLexicon::load(const std::string& path, const IpaPhoneTable& table) {
  IpaLexicon lexicon;
  for (const auto& row : tsv::read_file(path)) {
    if (row.fields.size() != 2 && row.fields.size() != 3) {
      throw_error(ErrorKind::Parse, path + ":" + std::to_string(row.line_no) +
                                        ": expected 2 or 3 fields");
    }
    IpaLexiconEntry entry;
    entry.word = row.fields[0];
    entry.ipa = row.fields[1];
    for (char c : entry.word) {
      if (!((c >= 'a' && c <= 'z') || c == '-')) {
        throw_error(ErrorKind::Validate,
                    path + ":" + std::to_string(row.line_no) +
                        ": word must be lowercase ASCII letters or hyphen: '" +
                        entry.word + "'");
      }
    }
    try {
      parse_ipa(entry.ipa, table);
    } catch (const Error& e) {
      throw_error(e.kind(), path + ":" + std::to_string(row.line_no) + ": " + e.what());
    }
    if (row.fields.size() == 3) {
      entry.duration_hint = std::stod(row.fields[2]);
    }
    if (lexicon.index_.count(entry.word)) {
      throw_error(ErrorKind::Validate, path + ":" + std::to_string(row.line_no) +
                                           ": duplicate word '" + entry.word + "'");
    }
    lexicon.index_[entry.word] = lexicon.entries_.size();
    lexicon.entries_.push_back(std::move(entry));
  }
  return lexicon;
}

const IpaLexiconEntry* IpaLexicon::find(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return nullptr;
  return &entries_[it->second];
}

}  // namespace vephon
