#include "vephon/phoneme.hpp"

#include <fstream>
#include <sstream>

namespace vephon {

std::string to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Initial: return "initial";
    case TokenKind::Medial: return "medial";
    case TokenKind::Nucleus: return "nucleus";
    case TokenKind::Ending: return "ending";
    case TokenKind::Tone: return "tone";
    case TokenKind::EnglishOnly: return "english_only";
    case TokenKind::Separator: return "separator";
    case TokenKind::Control: return "control";
  }
  return "?";
}

std::string to_string(TokenOrigin origin) {
  switch (origin) {
    case TokenOrigin::Vietnamese: return "vietnamese";
    case TokenOrigin::English: return "english";
    case TokenOrigin::Shared: return "shared";
  }
  return "?";
}

TokenKind token_kind_from_string(const std::string& s) {
  if (s == "initial") return TokenKind::Initial;
  if (s == "medial") return TokenKind::Medial;
  if (s == "nucleus") return TokenKind::Nucleus;
  if (s == "ending") return TokenKind::Ending;
  if (s == "tone") return TokenKind::Tone;
  if (s == "english_only") return TokenKind::EnglishOnly;
  if (s == "separator") return TokenKind::Separator;
  if (s == "control") return TokenKind::Control;
  throw_error(ErrorKind::Parse, "unknown token kind '" + s + "'");
}

TokenOrigin token_origin_from_string(const std::string& s) {
  if (s == "vietnamese") return TokenOrigin::Vietnamese;
  if (s == "english") return TokenOrigin::English;
  if (s == "shared") return TokenOrigin::Shared;
  throw_error(ErrorKind::Parse, "unknown token origin '" + s + "'");
}

bool is_tone_surface(const std::string& surface) {
  return surface.size() == 2 && surface[0] == '-' && surface[1] >= '1' &&
         surface[1] <= '6';
}

void validate_token(const PhonemeToken& token) {
  if (token.surface.empty()) {
    throw_error(ErrorKind::Validate, "token surface is empty");
  }
  for (char c : token.surface) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      throw_error(ErrorKind::Validate,
                  "token surface contains whitespace: '" + token.surface + "'");
    }
  }
  bool tone_surface = is_tone_surface(token.surface);
  if ((token.kind == TokenKind::Tone) != tone_surface) {
    throw_error(ErrorKind::Validate,
                "surface '" + token.surface + "' and kind " + to_string(token.kind) +
                    " disagree (tone surfaces are -1..-6)");
  }
  bool separator_surface = token.surface == "$" || token.surface == "|";
  if ((token.kind == TokenKind::Separator) != separator_surface) {
    throw_error(ErrorKind::Validate,
                "surface '" + token.surface + "' and kind " + to_string(token.kind) +
                    " disagree (separator surfaces are $ and |)");
  }
  bool control_surface = token.surface == "<sot>" || token.surface == "<eot>";
  if ((token.kind == TokenKind::Control) != control_surface) {
    throw_error(ErrorKind::Validate,
                "surface '" + token.surface + "' and kind " + to_string(token.kind) +
                    " disagree (control surfaces are <sot> and <eot>)");
  }
}

PhonemeVocabulary PhonemeVocabulary::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorKind::Io, "cannot open inventory file '" + path + "'");
  }
  std::vector<PhonemeToken> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    size_t hash = stripped.find('#');
    if (hash != std::string::npos) stripped.resize(hash);
    // Drop pure-whitespace lines.
    if (stripped.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = stripped.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(stripped.substr(pos));
        break;
      }
      fields.push_back(stripped.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 3) {
      throw_error(ErrorKind::Parse,
                  path + ":" + std::to_string(line_no) +
                      ": expected 3 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    PhonemeToken token;
    token.surface = fields[0];
    try {
      token.kind = token_kind_from_string(fields[1]);
      token.origin = token_origin_from_string(fields[2]);
      validate_token(token);
    } catch (const Error& e) {
      throw_error(e.kind(), path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    tokens.push_back(std::move(token));
  }
  return from_tokens(std::move(tokens));
}

PhonemeVocabulary PhonemeVocabulary::from_tokens(std::vector<PhonemeToken> tokens) {
  PhonemeVocabulary vocab;
  vocab.entries_ = std::move(tokens);
  vocab.rebuild_index();
  vocab.validate();
  return vocab;
}

void PhonemeVocabulary::rebuild_index() {
  index_.clear();
  for (size_t i = 0; i < entries_.size(); ++i) {
    auto [it, inserted] = index_.emplace(entries_[i].surface, static_cast<int>(i));
    if (!inserted) {
      throw_error(ErrorKind::Validate,
                  "duplicate surface '" + entries_[i].surface + "' (ids " +
                      std::to_string(it->second) + " and " + std::to_string(i) + ")");
    }
  }
}

void PhonemeVocabulary::validate() const {
  for (const auto& token : entries_) validate_token(token);
  size_t vn = vietnamese_category_count();
  if (vn != 53) {
    throw_error(ErrorKind::Validate,
                "inventory has " + std::to_string(vn) +
                    " Vietnamese phoneme categories, expected 53");
  }
}

const PhonemeToken& PhonemeVocabulary::at(size_t id) const {
  if (id >= entries_.size()) {
    throw_error(ErrorKind::Validate,
                "token id " + std::to_string(id) + " out of range (size " +
                    std::to_string(entries_.size()) + ")");
  }
  return entries_[id];
}

std::optional<int> PhonemeVocabulary::id_of(const std::string& surface) const {
  auto it = index_.find(surface);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const PhonemeToken* PhonemeVocabulary::find(const std::string& surface) const {
  auto it = index_.find(surface);
  if (it == index_.end()) return nullptr;
  return &entries_[it->second];
}

size_t PhonemeVocabulary::vietnamese_category_count() const {
  size_t count = 0;
  for (const auto& token : entries_) {
    bool structural = token.kind == TokenKind::Initial ||
                      token.kind == TokenKind::Medial ||
                      token.kind == TokenKind::Nucleus ||
                      token.kind == TokenKind::Ending ||
                      token.kind == TokenKind::Tone;
    bool viet = token.origin == TokenOrigin::Vietnamese ||
                token.origin == TokenOrigin::Shared;
    if (structural && viet) ++count;
  }
  return count;
}

size_t PhonemeVocabulary::count_kind(TokenKind kind) const {
  size_t count = 0;
  for (const auto& token : entries_) {
    if (token.kind == kind) ++count;
  }
  return count;
}

std::string PhonemeVocabulary::to_inventory_text() const {
  std::string out;
  for (const auto& token : entries_) {
    out += token.surface;
    out += '\t';
    out += to_string(token.kind);
    out += '\t';
    out += to_string(token.origin);
    out += '\n';
  }
  return out;
}

namespace {

bool vowel_bearing(const PhonemeToken& token) {
  // Tone tokens attach to the vowel they follow. English-only tokens are
  // accepted so stressed english_only vowels (aɪ, eɪ, ...) can carry stress
  // tones; the mappers never place a tone after a consonant.
  return token.kind == TokenKind::Nucleus || token.kind == TokenKind::EnglishOnly;
}

void validate_sequence(const std::vector<PhonemeToken>& tokens) {
  for (size_t i = 0; i < tokens.size(); ++i) {
    const PhonemeToken& t = tokens[i];
    validate_token(t);
    if (t.kind == TokenKind::Control) {
      throw_error(ErrorKind::Parse,
                  "control token '" + t.surface + "' not allowed in a sequence (position " +
                      std::to_string(i) + ")");
    }
    if (t.kind == TokenKind::Separator) {
      if (i == 0) {
        throw_error(ErrorKind::Parse, "sequence starts with separator '" + t.surface + "'");
      }
      if (i + 1 == tokens.size()) {
        throw_error(ErrorKind::Parse, "sequence ends with separator '" + t.surface + "'");
      }
      if (tokens[i - 1].kind == TokenKind::Separator) {
        throw_error(ErrorKind::Parse,
                    "adjacent separators at position " + std::to_string(i));
      }
    }
    if (t.kind == TokenKind::Tone) {
      if (i == 0 || !vowel_bearing(tokens[i - 1])) {
        throw_error(ErrorKind::Parse,
                    "tone token '" + t.surface + "' at position " + std::to_string(i) +
                        " does not follow a vowel token");
      }
    }
  }
}

}  // namespace

PhonemeSequence::PhonemeSequence(std::vector<PhonemeToken> tokens)
    : tokens_(std::move(tokens)) {
  validate_sequence(tokens_);
}

std::string serialize(const PhonemeSequence& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += seq.tokens()[i].surface;
  }
  return out;
}

PhonemeSequence parse_sequence(const std::string& text, const PhonemeVocabulary& vocab) {
  std::vector<PhonemeToken> tokens;
  std::istringstream in(text);
  std::string word;
  size_t position = 0;
  while (in >> word) {
    const PhonemeToken* token = vocab.find(word);
    if (!token) {
      throw_error(ErrorKind::Parse,
                  "unknown token '" + word + "' at position " + std::to_string(position));
    }
    tokens.push_back(*token);
    ++position;
  }
  return PhonemeSequence(std::move(tokens));
}

std::vector<int> to_ids(const PhonemeSequence& seq, const PhonemeVocabulary& vocab) {
  std::vector<int> ids;
  ids.reserve(seq.size());
  for (const auto& token : seq.tokens()) {
    auto id = vocab.id_of(token.surface);
    if (!id) {
      throw_error(ErrorKind::Validate,
                  "token '" + token.surface + "' not in vocabulary");
    }
    ids.push_back(*id);
  }
  return ids;
}

PhonemeSequence from_ids(const std::vector<int>& ids, const PhonemeVocabulary& vocab) {
  std::vector<PhonemeToken> tokens;
  tokens.reserve(ids.size());
  for (int id : ids) {
    if (id < 0) {
      throw_error(ErrorKind::Validate, "negative token id " + std::to_string(id));
    }
    tokens.push_back(vocab.at(static_cast<size_t>(id)));
  }
  return PhonemeSequence(std::move(tokens));
}

}  // namespace vephon
