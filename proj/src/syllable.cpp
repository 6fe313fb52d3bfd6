#include "vephon/syllable.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "vephon/tsv.hpp"
#include "vephon/utf8.hpp"

namespace vephon {

namespace {

// Vietnamese letter repertoire. Each row: toneless base, then the letter
// carrying sắc(4), huyền(2), hỏi(3), ngã(6), nặng(5).
struct LetterRow {
  const char* base;
  const char* sac;
  const char* huyen;
  const char* hoi;
  const char* nga;
  const char* nang;
};

constexpr LetterRow kLetterRows[] = {
    {"a", "á", "à", "ả", "ã", "ạ"},   {"ă", "ắ", "ằ", "ẳ", "ẵ", "ặ"},
    {"â", "ấ", "ầ", "ẩ", "ẫ", "ậ"},   {"e", "é", "è", "ẻ", "ẽ", "ẹ"},
    {"ê", "ế", "ề", "ể", "ễ", "ệ"},   {"i", "í", "ì", "ỉ", "ĩ", "ị"},
    {"o", "ó", "ò", "ỏ", "õ", "ọ"},   {"ô", "ố", "ồ", "ổ", "ỗ", "ộ"},
    {"ơ", "ớ", "ờ", "ở", "ỡ", "ợ"},   {"u", "ú", "ù", "ủ", "ũ", "ụ"},
    {"ư", "ứ", "ừ", "ử", "ữ", "ự"},   {"y", "ý", "ỳ", "ỷ", "ỹ", "ỵ"},
};

// Modifier decompositions: modified letter = plain letter + combining mark.
struct ModifierRow {
  const char* plain;
  char32_t mark;
  const char* modified;
};

constexpr char32_t kBreve = 0x0306;
constexpr char32_t kCircumflex = 0x0302;
constexpr char32_t kHorn = 0x031B;

constexpr ModifierRow kModifierRows[] = {
    {"a", kBreve, "ă"},      {"a", kCircumflex, "â"}, {"e", kCircumflex, "ê"},
    {"o", kCircumflex, "ô"}, {"o", kHorn, "ơ"},       {"u", kHorn, "ư"},
};

constexpr char32_t kToneMarks[] = {0, 0x0300, 0x0309, 0x0301, 0x0323, 0x0303};
// index by digit: 1 unmarked, 2 huyền U+0300, 3 hỏi U+0309, 4 sắc U+0301,
// 5 nặng U+0323, 6 ngã U+0303 (kToneMarks[d-1]).

char32_t first_cp(const char* s) { return utf8::decode(s)[0]; }

struct LetterMaps {
  // toned letter -> (toneless letter, tone digit)
  std::map<char32_t, std::pair<char32_t, int>> strip_tone;
  // (toneless letter, tone digit) -> toned letter
  std::map<std::pair<char32_t, int>, char32_t> apply_tone;
  // (letter, combining mark) -> composed letter
  std::map<std::pair<char32_t, char32_t>, char32_t> compose;
  std::set<char32_t> vowels;  // all letters of the 12 rows, toned or not
};

LetterMaps build_letter_maps() {
  LetterMaps maps;
  auto tone_digit_of_column = [](int col) {
    static const int digits[] = {4, 2, 3, 6, 5};
    return digits[col];
  };
  for (const auto& row : kLetterRows) {
    char32_t base = first_cp(row.base);
    const char* toned[] = {row.sac, row.huyen, row.hoi, row.nga, row.nang};
    maps.vowels.insert(base);
    for (int col = 0; col < 5; ++col) {
      char32_t t = first_cp(toned[col]);
      int digit = tone_digit_of_column(col);
      maps.strip_tone[t] = {base, digit};
      maps.apply_tone[{base, digit}] = t;
      maps.compose[{base, kToneMarks[digit - 1]}] = t;
      maps.vowels.insert(t);
    }
  }
  for (const auto& row : kModifierRows) {
    char32_t plain = first_cp(row.plain);
    char32_t modified = first_cp(row.modified);
    maps.compose[{plain, row.mark}] = modified;
    // The mark also composes with already-toned plain letters (any input
    // order of tone and modifier marks is accepted).
    for (int digit = 2; digit <= 6; ++digit) {
      auto toned_plain = maps.apply_tone.find({plain, digit});
      auto toned_modified = maps.apply_tone.find({modified, digit});
      if (toned_plain != maps.apply_tone.end() &&
          toned_modified != maps.apply_tone.end()) {
        maps.compose[{toned_plain->second, row.mark}] = toned_modified->second;
      }
    }
  }
  return maps;
}

const LetterMaps& letter_maps() {
  static const LetterMaps maps = build_letter_maps();
  return maps;
}

bool is_combining_mark(char32_t cp) {
  if (cp == kBreve || cp == kCircumflex || cp == kHorn) return true;
  for (int d = 2; d <= 6; ++d) {
    if (cp == kToneMarks[d - 1]) return true;
  }
  return false;
}

char32_t lower_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 uppercase letters with diacritics (À..Þ, excluding ×).
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A: even code points are uppercase (Ă, Ĩ, Ũ, ...).
  if (cp >= 0x0100 && cp <= 0x017F) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x01A0 || cp == 0x01AF) return cp + 1;  // Ơ, Ư
  // Latin Extended Additional (Vietnamese block): even is uppercase.
  if (cp >= 0x1E00 && cp <= 0x1EFF) return (cp % 2 == 0) ? cp + 1 : cp;
  return cp;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == 0xA0;
}

}  // namespace

std::string to_string(const Syllable& s) {
  std::ostringstream out;
  out << "{";
  out << (s.initial ? *s.initial : "-") << " ";
  out << (s.medial ? *s.medial : "-") << " ";
  out << s.nucleus << " ";
  out << (s.ending ? *s.ending : "-") << " ";
  out << s.tone << "}";
  return out.str();
}

std::string normalize(const std::string& text) {
  const LetterMaps& maps = letter_maps();
  std::vector<char32_t> cps = utf8::decode(text);
  for (char32_t& cp : cps) cp = lower_cp(cp);

  std::vector<char32_t> composed;
  composed.reserve(cps.size());
  for (char32_t cp : cps) {
    if (is_combining_mark(cp) && !composed.empty()) {
      auto it = maps.compose.find({composed.back(), cp});
      if (it != maps.compose.end()) {
        composed.back() = it->second;
        continue;
      }
    }
    composed.push_back(cp);
  }

  std::vector<char32_t> collapsed;
  collapsed.reserve(composed.size());
  bool in_space = false;
  for (char32_t cp : composed) {
    if (is_space_cp(cp)) {
      in_space = true;
      continue;
    }
    if (in_space && !collapsed.empty()) collapsed.push_back(U' ');
    in_space = false;
    collapsed.push_back(cp);
  }
  return utf8::encode(collapsed);
}

OrthographyTables OrthographyTables::load(const std::string& data_dir,
                                          const PhonemeVocabulary& vocab) {
  OrthographyTables tables;

  std::string initials_path = data_dir + "/initials.tsv";
  for (const auto& row : tsv::read_file(initials_path)) {
    tsv::expect_fields(row, 4, initials_path);
    InitialRow ir;
    ir.spelling = row.fields[0];
    ir.token = row.fields[1];
    ir.flags = row.fields[2];
    ir.render = row.fields[3];
    tables.initials_.push_back(std::move(ir));
  }
  // Longest spelling first so digraphs win.
  std::stable_sort(tables.initials_.begin(), tables.initials_.end(),
                   [](const InitialRow& a, const InitialRow& b) {
                     return utf8::length(a.spelling) > utf8::length(b.spelling);
                   });

  std::string rhymes_path = data_dir + "/rhymes.tsv";
  auto parse_ctx = [&](const std::string& s, bool& b, bool& o, bool& q, int line) {
    b = o = q = false;
    if (s == "-") return;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part == "b") b = true;
      else if (part == "o") o = true;
      else if (part == "q") q = true;
      else
        throw_error(ErrorKind::Parse, rhymes_path + ":" + std::to_string(line) +
                                          ": unknown context '" + part + "'");
    }
  };
  for (const auto& row : tsv::read_file(rhymes_path)) {
    tsv::expect_fields(row, 7, rhymes_path);
    RhymeRow rr;
    rr.spelling = row.fields[0];
    if (row.fields[1] != "-") rr.medial = row.fields[1];
    rr.nucleus = row.fields[2];
    if (row.fields[3] != "-") rr.ending = row.fields[3];
    parse_ctx(row.fields[4], rr.ctx_bare, rr.ctx_onset, rr.ctx_q, row.line_no);
    parse_ctx(row.fields[5], rr.canon_bare, rr.canon_onset, rr.canon_q, row.line_no);
    rr.tone_pos = std::stoi(row.fields[6]);
    if ((rr.canon_bare && !rr.ctx_bare) || (rr.canon_onset && !rr.ctx_onset) ||
        (rr.canon_q && !rr.ctx_q)) {
      throw_error(ErrorKind::Validate, rhymes_path + ":" + std::to_string(row.line_no) +
                                           ": canon context not in contexts");
    }
    tables.rhymes_.push_back(std::move(rr));
  }

  std::string tones_path = data_dir + "/tones.tsv";
  int tone_rows = 0;
  for (const auto& row : tsv::read_file(tones_path)) {
    tsv::expect_fields(row, 3, tones_path);
    ++tone_rows;
  }
  if (tone_rows != 6) {
    throw_error(ErrorKind::Validate,
                tones_path + ": expected 6 tone rows, got " + std::to_string(tone_rows));
  }

  std::string phono_path = data_dir + "/phonotactics.tsv";
  for (const auto& row : tsv::read_file(phono_path)) {
    tsv::expect_fields(row, 3, phono_path);
    std::vector<int> tones;
    std::istringstream tone_in(row.fields[2]);
    int t;
    while (tone_in >> t) tones.push_back(t);
    if (row.fields[1] == "*") {
      tables.open_tones_ = tones;
    } else {
      std::istringstream coda_in(row.fields[1]);
      std::string coda;
      while (coda_in >> coda) tables.checked_codas_.push_back(coda);
      tables.checked_tones_ = tones;
    }
  }
  if (tables.open_tones_.empty() || tables.checked_tones_.empty()) {
    throw_error(ErrorKind::Validate, phono_path + ": missing coda class rows");
  }

  tables.validate_against(vocab);
  tables.validate_canon_unique();
  return tables;
}

void OrthographyTables::validate_against(const PhonemeVocabulary& vocab) const {
  auto expect_kind = [&](const std::string& surface, TokenKind kind,
                         const std::string& where) {
    const PhonemeToken* token = vocab.find(surface);
    if (!token || token->kind != kind) {
      throw_error(ErrorKind::Validate,
                  where + ": '" + surface + "' is not a vocabulary " + to_string(kind));
    }
  };
  std::set<std::string> initial_spellings;
  for (const auto& row : initials_) {
    expect_kind(row.token, TokenKind::Initial, "initials table");
    if (!initial_spellings.insert(row.spelling).second) {
      throw_error(ErrorKind::Validate,
                  "initials table: duplicate spelling '" + row.spelling + "'");
    }
  }
  std::set<std::string> rhyme_spellings;
  for (const auto& row : rhymes_) {
    expect_kind(row.nucleus, TokenKind::Nucleus, "rhymes table");
    if (row.medial) expect_kind(*row.medial, TokenKind::Medial, "rhymes table");
    if (row.ending) expect_kind(*row.ending, TokenKind::Ending, "rhymes table");
    if (!rhyme_spellings.insert(row.spelling).second) {
      throw_error(ErrorKind::Validate,
                  "rhymes table: duplicate spelling '" + row.spelling + "'");
    }
    size_t len = utf8::length(row.spelling);
    if (row.tone_pos < 0 || static_cast<size_t>(row.tone_pos) >= len) {
      throw_error(ErrorKind::Validate,
                  "rhymes table: tone position out of range for '" + row.spelling + "'");
    }
  }
  for (const auto& coda : checked_codas_) {
    expect_kind(coda, TokenKind::Ending, "phonotactics table");
  }
}

void OrthographyTables::validate_canon_unique() const {
  // For every (structure, context) at most one canonical spelling.
  std::set<std::string> seen;
  for (const auto& row : rhymes_) {
    auto key = [&](const char* ctx) {
      return std::string(ctx) + "|" + (row.medial ? *row.medial : "-") + "|" +
             row.nucleus + "|" + (row.ending ? *row.ending : "-");
    };
    if (row.canon_bare && !seen.insert(key("b")).second) {
      throw_error(ErrorKind::Validate,
                  "rhymes table: duplicate bare canon for '" + row.spelling + "'");
    }
    if (row.canon_onset && !seen.insert(key("o")).second) {
      throw_error(ErrorKind::Validate,
                  "rhymes table: duplicate onset canon for '" + row.spelling + "'");
    }
    if (row.canon_q && !seen.insert(key("q")).second) {
      throw_error(ErrorKind::Validate,
                  "rhymes table: duplicate qu canon for '" + row.spelling + "'");
    }
  }
}

bool OrthographyTables::is_checked_coda(const std::string& ending) const {
  return std::find(checked_codas_.begin(), checked_codas_.end(), ending) !=
         checked_codas_.end();
}

const std::vector<int>& OrthographyTables::allowed_tones(
    const std::optional<std::string>& ending) const {
  if (ending && is_checked_coda(*ending)) return checked_tones_;
  return open_tones_;
}

const OrthographyTables::RhymeRow* OrthographyTables::find_rhyme(
    const std::string& spelling, Context ctx) const {
  for (const auto& row : rhymes_) {
    if (row.spelling != spelling) continue;
    if (ctx == Context::Bare && !row.ctx_bare) continue;
    if (ctx == Context::Onset && !row.ctx_onset) continue;
    if (ctx == Context::Q && !row.ctx_q) continue;
    return &row;
  }
  return nullptr;
}

const OrthographyTables::RhymeRow* OrthographyTables::canon_row(const Syllable& s,
                                                                Context ctx) const {
  for (const auto& row : rhymes_) {
    bool canon = (ctx == Context::Bare && row.canon_bare) ||
                 (ctx == Context::Onset && row.canon_onset) ||
                 (ctx == Context::Q && row.canon_q);
    if (!canon) continue;
    std::optional<std::string> medial = row.medial;
    if (ctx == Context::Q) medial = "w";  // qu supplies the medial
    if (medial == s.medial && row.nucleus == s.nucleus && row.ending == s.ending) {
      return &row;
    }
  }
  return nullptr;
}

namespace {

struct ToneStrip {
  std::string toneless;
  int tone = 1;
};

// Removes at most one tone mark; two marked letters is a parse error.
ToneStrip strip_tone(const std::string& word) {
  const LetterMaps& maps = letter_maps();
  ToneStrip result;
  std::vector<char32_t> cps = utf8::decode(word);
  bool found = false;
  for (char32_t& cp : cps) {
    auto it = maps.strip_tone.find(cp);
    if (it != maps.strip_tone.end()) {
      if (found) {
        throw_error(ErrorKind::Parse, "word '" + word + "' carries two tone marks");
      }
      found = true;
      result.tone = it->second.second;
      cp = it->second.first;
    }
  }
  result.toneless = utf8::encode(cps);
  return result;
}

bool front_letter(char32_t cp) {
  return cp == U'i' || cp == U'y' || cp == U'e' || first_cp("ê") == cp;
}

}  // namespace

Syllable OrthographyTables::parse_syllable(const std::string& raw_word) const {
  std::string word = normalize(raw_word);
  if (word.empty()) {
    throw_error(ErrorKind::Parse, "empty word");
  }
  if (word.find(' ') != std::string::npos) {
    throw_error(ErrorKind::Parse, "expected a single syllable, got '" + word + "'");
  }
  ToneStrip stripped = strip_tone(word);
  const std::string& toneless = stripped.toneless;

  // The letter repertoire check up front gives cleaner errors for foreign
  // graphemes (w, f, j, digits, stray marks).
  {
    const LetterMaps& maps = letter_maps();
    for (char32_t cp : utf8::decode(toneless)) {
      // f, j, w, z are not in the Vietnamese alphabet
      bool ascii_letter = cp >= U'a' && cp <= U'z' && cp != U'f' && cp != U'j' &&
                          cp != U'w' && cp != U'z';
      bool viet_letter = maps.vowels.count(cp) > 0 || first_cp("đ") == cp;
      if (!ascii_letter && !viet_letter) {
        throw_error(ErrorKind::Parse, "word '" + raw_word +
                                          "' contains a non-Vietnamese grapheme '" +
                                          utf8::encode(cp) + "'");
      }
    }
  }

  auto try_rhyme = [&](const std::string& spelling, Context ctx,
                       const InitialRow* onset) -> std::optional<Syllable> {
    const RhymeRow* row = find_rhyme(spelling, ctx);
    if (!row) return std::nullopt;
    Syllable s;
    if (onset) s.initial = onset->token;
    s.medial = row->medial;
    if (ctx == Context::Q) s.medial = "w";
    if (onset && onset->flags != "qu" && s.medial && onset->token == "k") {
      // k with a medial is always spelled qu; block "coa"-style parses.
      return std::nullopt;
    }
    s.nucleus = row->nucleus;
    s.ending = row->ending;
    s.tone = stripped.tone;
    return s;
  };

  std::optional<Syllable> parsed;
  for (const auto& onset : initials_) {
    if (toneless.rfind(onset.spelling, 0) != 0) continue;
    std::string rest = toneless.substr(onset.spelling.size());
    if (onset.flags == "qu") {
      if (auto s = try_rhyme(rest, Context::Q, &onset)) {
        parsed = s;
        break;
      }
      continue;
    }
    if (onset.flags == "gi") {
      // gi before a consonant or nothing supplies its own nucleus i
      // (gì, gìn); otherwise the rhyme follows as usual (gia, giường) with
      // an i-prefixed fallback for the iê spellings (giêng).
      if (auto s = try_rhyme(rest, Context::Onset, &onset)) {
        if (!s->medial) {  // gi never precedes a medial
          parsed = s;
          break;
        }
      }
      if (auto s = try_rhyme("i" + rest, Context::Onset, &onset)) {
        if (!s->medial) {
          parsed = s;
          break;
        }
      }
      continue;
    }
    if (rest.empty()) continue;
    auto s = try_rhyme(rest, Context::Onset, &onset);
    if (!s) continue;
    // c/k, g/gh, ng/ngh alternate on front vowels; reject the wrong variant.
    if (onset.render == "front" || onset.render == "default") {
      bool has_front_variant =
          onset.token == "k" || onset.token == "g" || onset.token == "ng";
      if (has_front_variant) {
        bool front = front_letter(utf8::decode(rest)[0]);
        if (front != (onset.render == "front")) continue;
      }
    }
    parsed = s;
    break;
  }
  if (!parsed) {
    if (auto s = try_rhyme(toneless, Context::Bare, nullptr)) {
      parsed = s;
    }
  }
  if (!parsed) {
    throw_error(ErrorKind::Parse,
                "cannot parse '" + raw_word + "' as a Vietnamese syllable");
  }

  const auto& tones = allowed_tones(parsed->ending);
  if (std::find(tones.begin(), tones.end(), parsed->tone) == tones.end()) {
    throw_error(ErrorKind::Phonotactics,
                "tone " + std::to_string(parsed->tone) + " is not allowed with coda '" +
                    *parsed->ending + "' in '" + raw_word + "'");
  }
  return parsed.value();
}

std::string OrthographyTables::initial_spelling(const std::string& token,
                                                const std::string& rhyme_spelling,
                                                bool has_medial) const {
  if (token == "k" && has_medial) return "qu";
  bool front = front_letter(utf8::decode(rhyme_spelling)[0]);
  const InitialRow* fallback = nullptr;
  for (const auto& row : initials_) {
    if (row.token != token) continue;
    if (row.render == "front" && front) return row.spelling;
    if (row.render == "default") fallback = &row;
  }
  if (!fallback) {
    throw_error(ErrorKind::Validate, "no rendering for initial token '" + token + "'");
  }
  return fallback->spelling;
}

void OrthographyTables::check_legal(const Syllable& s) const {
  Context ctx = s.initial ? Context::Onset : Context::Bare;
  const RhymeRow* row = nullptr;
  if (s.initial == "k" && s.medial) {
    Syllable core = s;
    core.medial = "w";
    row = canon_row(core, Context::Q);
  } else {
    row = canon_row(s, ctx);
  }
  if (!row) {
    throw_error(ErrorKind::Phonotactics,
                "no legal spelling for syllable " + to_string(s));
  }
  const auto& tones = allowed_tones(s.ending);
  if (std::find(tones.begin(), tones.end(), s.tone) == tones.end()) {
    throw_error(ErrorKind::Phonotactics,
                "tone " + std::to_string(s.tone) + " is not allowed in " + to_string(s));
  }
}

std::string OrthographyTables::render_syllable(const Syllable& s) const {
  check_legal(s);
  const RhymeRow* row;
  std::string onset;
  if (s.initial && *s.initial == "k" && s.medial) {
    Syllable core = s;
    core.medial = "w";
    row = canon_row(core, Context::Q);
    onset = "qu";
  } else if (s.initial) {
    row = canon_row(s, Context::Onset);
    onset = initial_spelling(*s.initial, row->spelling, s.medial.has_value());
  } else {
    row = canon_row(s, Context::Bare);
  }

  std::vector<char32_t> rhyme_cps = utf8::decode(row->spelling);
  if (s.tone != 1) {
    const LetterMaps& maps = letter_maps();
    char32_t base = rhyme_cps[row->tone_pos];
    auto it = maps.apply_tone.find({base, s.tone});
    if (it == maps.apply_tone.end()) {
      throw_error(ErrorKind::Validate,
                  "cannot place tone " + std::to_string(s.tone) + " on '" +
                      utf8::encode(base) + "'");
    }
    rhyme_cps[row->tone_pos] = it->second;
  }
  return onset + utf8::encode(rhyme_cps);
}

std::vector<std::string> OrthographyTables::syllable_tokens(const Syllable& s) const {
  std::vector<std::string> tokens;
  if (s.initial) tokens.push_back(*s.initial);
  if (s.medial) tokens.push_back(*s.medial);
  tokens.push_back(s.nucleus);
  if (s.tone != 1) tokens.push_back("-" + std::to_string(s.tone));
  if (s.ending) tokens.push_back(*s.ending);
  return tokens;
}

std::vector<Syllable> OrthographyTables::enumerate_legal() const {
  std::vector<Syllable> result;
  std::vector<std::string> initial_tokens;
  for (const auto& row : initials_) {
    if (std::find(initial_tokens.begin(), initial_tokens.end(), row.token) ==
        initial_tokens.end()) {
      initial_tokens.push_back(row.token);
    }
  }
  auto add = [&](const Syllable& base) {
    for (int tone : allowed_tones(base.ending)) {
      Syllable s = base;
      s.tone = tone;
      result.push_back(s);
    }
  };
  for (const auto& row : rhymes_) {
    Syllable base;
    base.medial = row.medial;
    base.nucleus = row.nucleus;
    base.ending = row.ending;
    if (row.canon_bare) add(base);
    if (row.canon_onset) {
      for (const auto& token : initial_tokens) {
        if (token == "k" && row.medial) continue;  // spelled qu, counted below
        Syllable s = base;
        s.initial = token;
        add(s);
      }
    }
    if (row.canon_q) {
      Syllable s = base;
      s.initial = "k";
      s.medial = "w";
      add(s);
    }
  }
  return result;
}

PhonemeSequence OrthographyTables::text_to_phonemes(
    const std::string& sentence, const PhonemeVocabulary& vocab) const {
  std::string normalized = normalize(sentence);
  std::vector<PhonemeToken> tokens;
  std::istringstream in(normalized);
  std::string word;
  int index = 0;
  while (in >> word) {
    Syllable s;
    try {
      s = parse_syllable(word);
    } catch (const Error& e) {
      throw_error(e.kind(), "word " + std::to_string(index) + ": " + e.what());
    }
    if (index > 0) tokens.push_back(*vocab.find("$"));
    for (const auto& surface : syllable_tokens(s)) {
      const PhonemeToken* token = vocab.find(surface);
      if (!token) {
        throw_error(ErrorKind::Validate,
                    "table token '" + surface + "' missing from vocabulary");
      }
      tokens.push_back(*token);
    }
    ++index;
  }
  return PhonemeSequence(std::move(tokens));
}

}  // namespace vephon
