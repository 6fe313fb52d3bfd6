#include "vephon/vietlish.hpp"

#include <sstream>

#include "vephon/tsv.hpp"

namespace vephon {

VietlishLocalizer VietlishLocalizer::load(const std::string& data_dir,
                                          const PhonemeVocabulary& vocab) {
  VietlishLocalizer localizer;

  std::string proj_path = data_dir + "/projection.tsv";
  auto expect_kind = [&](const std::string& surface, std::vector<TokenKind> kinds,
                         const std::string& where) {
    const PhonemeToken* token = vocab.find(surface);
    if (!token) {
      throw_error(ErrorKind::Validate,
                  where + ": '" + surface + "' missing from vocabulary");
    }
    for (TokenKind k : kinds) {
      if (token->kind == k) return;
    }
    throw_error(ErrorKind::Validate,
                where + ": '" + surface + "' has unexpected kind " +
                    to_string(token->kind));
  };
  for (const auto& row : tsv::read_file(proj_path)) {
    tsv::expect_fields(row, 4, proj_path);
    std::string where = proj_path + ":" + std::to_string(row.line_no);
    ProjectionRow pr;
    if (row.fields[1] != "-") {
      pr.onset = row.fields[1];
      expect_kind(*pr.onset, {TokenKind::Initial, TokenKind::Medial}, where);
    }
    if (row.fields[2] != "-") {
      std::string nucleus = row.fields[2];
      size_t plus = nucleus.find('+');
      if (plus != std::string::npos) {
        pr.nucleus_coda = nucleus.substr(plus + 1);
        nucleus.resize(plus);
        expect_kind(*pr.nucleus_coda, {TokenKind::Ending}, where);
      }
      pr.nucleus = nucleus;
      expect_kind(*pr.nucleus, {TokenKind::Nucleus}, where);
    }
    if (row.fields[3] != "-") {
      pr.coda = row.fields[3];
      expect_kind(*pr.coda, {TokenKind::Ending}, where);
    }
    if (localizer.projection_.count(row.fields[0])) {
      throw_error(ErrorKind::Validate,
                  where + ": duplicate projection for '" + row.fields[0] + "'");
    }
    localizer.projection_.emplace(row.fields[0], std::move(pr));
  }

  std::string ov_path = data_dir + "/vietlish_overrides.tsv";
  for (const auto& row : tsv::read_file(ov_path)) {
    if (row.fields.size() != 2 && row.fields.size() != 3) {
      throw_error(ErrorKind::Parse, ov_path + ":" + std::to_string(row.line_no) +
                                        ": expected 2 or 3 fields");
    }
    Override entry;
    entry.text = row.fields[1];
    if (row.fields.size() == 3) entry.tokens = row.fields[2];
    localizer.overrides_.emplace(row.fields[0], std::move(entry));
  }
  return localizer;
}

const VietlishLocalizer::Override* VietlishLocalizer::find_override(
    const std::string& word) const {
  auto it = overrides_.find(normalize(word));
  if (it == overrides_.end()) return nullptr;
  return &it->second;
}

void VietlishLocalizer::add_override(const std::string& word, Override entry) {
  overrides_[normalize(word)] = std::move(entry);
}

const VietlishLocalizer::ProjectionRow& VietlishLocalizer::projection(
    const std::string& phone, const std::string& word) const {
  auto it = projection_.find(phone);
  if (it == projection_.end()) {
    throw_error(ErrorKind::Localize,
                "no projection for phone '" + phone + "' in '" + word + "'");
  }
  return it->second;
}

Syllable VietlishLocalizer::project_syllable(const IpaSyllable& syl,
                                             const OrthographyTables& tables,
                                             const std::string& word) const {
  // Split the phone string at the first vowel.
  int nucleus_at = -1;
  for (size_t i = 0; i < syl.phones.size(); ++i) {
    if (projection(syl.phones[i], word).nucleus) {
      nucleus_at = static_cast<int>(i);
      break;
    }
  }
  if (nucleus_at < 0) {
    throw_error(ErrorKind::Localize,
                "syllable of '" + word + "' has no vowel to project");
  }

  Syllable s;
  // Onset cluster reduces to the consonant nearest the vowel; a w there
  // becomes the medial glide.
  if (nucleus_at > 0) {
    const ProjectionRow& onset = projection(syl.phones[nucleus_at - 1], word);
    if (onset.onset) {
      const std::string& target = *onset.onset;
      if (target == "w") {
        s.medial = target;
      } else {
        s.initial = target;
      }
    }
  }

  const ProjectionRow& nucleus = projection(syl.phones[nucleus_at], word);
  s.nucleus = *nucleus.nucleus;
  bool offglide = false;
  if (nucleus.nucleus_coda) {
    s.ending = nucleus.nucleus_coda;
    offglide = true;
  }

  // Coda cluster: trailing s/z drop first, then the first remaining
  // consonant projects. Vowel phones after the nucleus are offglides the
  // table did not fold in; they drop. With an offglide coda from the
  // nucleus the English codas drop entirely.
  std::vector<std::string> coda;
  for (size_t i = nucleus_at + 1; i < syl.phones.size(); ++i) {
    const ProjectionRow& row = projection(syl.phones[i], word);
    if (row.nucleus) continue;
    coda.push_back(syl.phones[i]);
  }
  while (coda.size() > 1 && (coda.back() == "s" || coda.back() == "z")) {
    coda.pop_back();
  }
  if (!offglide && !coda.empty()) {
    s.ending = projection(coda.front(), word).coda;
    // Front vowels take the palatal codas (inh/ich, ênh/êch).
    if (s.ending && (s.nucleus == "i" || s.nucleus == "ê")) {
      if (*s.ending == "ngz") s.ending = "nhz";
      if (*s.ending == "cz") s.ending = "chz";
    }
  }

  s.tone = (s.ending && tables.is_checked_coda(*s.ending)) ? checked_tone_ : level_tone_;

  // ă and â never stand open.
  if (!s.ending) {
    if (s.nucleus == "ă") s.nucleus = "a";
    if (s.nucleus == "â") s.nucleus = "ơ";
  }

  auto legal = [&](const Syllable& cand) {
    try {
      tables.check_legal(cand);
      return true;
    } catch (const Error&) {
      return false;
    }
  };
  if (legal(s)) return s;
  if (s.medial) {
    Syllable cand = s;
    cand.medial.reset();
    if (legal(cand)) return cand;
  }
  if (s.ending) {
    Syllable cand = s;
    cand.ending.reset();
    cand.tone = level_tone_;
    if (cand.nucleus == "ă") cand.nucleus = "a";
    if (cand.nucleus == "â") cand.nucleus = "ơ";
    if (cand.medial && !legal(cand)) cand.medial.reset();
    if (legal(cand)) return cand;
  }
  throw_error(ErrorKind::Localize,
              "projection of '" + word + "' produced an illegal syllable " +
                  to_string(s));
}

std::vector<Syllable> VietlishLocalizer::localize(const std::string& word,
                                                  const std::vector<IpaSyllable>& ipa,
                                                  const OrthographyTables& tables) const {
  if (const Override* entry = find_override(word)) {
    std::vector<Syllable> result;
    std::istringstream in(normalize(entry->text));
    std::string part;
    while (in >> part) result.push_back(tables.parse_syllable(part));
    return result;
  }
  if (ipa.empty()) {
    throw_error(ErrorKind::Localize, "no IPA syllables for '" + word + "'");
  }
  std::vector<Syllable> result;
  result.reserve(ipa.size());
  for (const auto& syl : ipa) {
    result.push_back(project_syllable(syl, tables, word));
  }
  return result;
}

std::string VietlishLocalizer::localized_text(const std::string& word,
                                              const std::vector<IpaSyllable>& ipa,
                                              const OrthographyTables& tables) const {
  if (const Override* entry = find_override(word)) return entry->text;
  std::string text;
  for (const auto& s : localize(word, ipa, tables)) {
    if (!text.empty()) text += ' ';
    text += tables.render_syllable(s);
  }
  return text;
}

PhonemeSequence VietlishLocalizer::localize_to_phonemes(
    const std::string& word, const std::vector<IpaSyllable>& ipa,
    const OrthographyTables& tables, const PhonemeVocabulary& vocab) const {
  if (const Override* entry = find_override(word); entry && entry->tokens) {
    return parse_sequence(*entry->tokens, vocab);
  }
  std::vector<Syllable> syllables = localize(word, ipa, tables);
  std::vector<PhonemeToken> tokens;
  for (size_t i = 0; i < syllables.size(); ++i) {
    if (i > 0) tokens.push_back(*vocab.find("$"));
    for (const auto& surface : tables.syllable_tokens(syllables[i])) {
      const PhonemeToken* token = vocab.find(surface);
      if (!token) {
        throw_error(ErrorKind::Validate,
                    "token '" + surface + "' missing from vocabulary");
      }
      tokens.push_back(*token);
    }
  }
  return PhonemeSequence(std::move(tokens));
}

}  // namespace vephon
