#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "vephon/phoneme.hpp"

using namespace vephon;

namespace {

const PhonemeVocabulary& default_vocab() {
  static PhonemeVocabulary vocab =
      PhonemeVocabulary::load(std::string(VEPHON_DATA_DIR) + "/inventory.tsv");
  return vocab;
}

// Structured random generator for valid sequences: groups of
// [initial] [medial] nucleus [tone] [ending] English-style or Vietnamese-style
// tokens joined by separators, which satisfies the sequence invariants by
// construction.
PhonemeSequence random_sequence(std::mt19937& rng) {
  const PhonemeVocabulary& vocab = default_vocab();
  std::vector<const PhonemeToken*> initials, nuclei, endings, tones, english;
  for (const auto& t : vocab.entries()) {
    switch (t.kind) {
      case TokenKind::Initial: initials.push_back(&t); break;
      case TokenKind::Nucleus: nuclei.push_back(&t); break;
      case TokenKind::Ending: endings.push_back(&t); break;
      case TokenKind::Tone: tones.push_back(&t); break;
      case TokenKind::EnglishOnly: english.push_back(&t); break;
      default: break;
    }
  }
  auto pick = [&](const std::vector<const PhonemeToken*>& pool) {
    return *pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  };
  std::uniform_int_distribution<int> coin(0, 1);
  int groups = std::uniform_int_distribution<int>(0, 5)(rng);
  std::vector<PhonemeToken> tokens;
  for (int g = 0; g < groups; ++g) {
    if (g > 0) tokens.push_back(*vocab.find(coin(rng) ? "$" : "|"));
    if (coin(rng)) tokens.push_back(pick(initials));
    if (coin(rng)) tokens.push_back(pick(english));
    tokens.push_back(pick(nuclei));
    if (coin(rng)) tokens.push_back(pick(tones));
    if (coin(rng)) tokens.push_back(pick(endings));
  }
  return PhonemeSequence(std::move(tokens));
}

}  // namespace

TEST_CASE("default inventory loads with 53 Vietnamese categories") {
  const PhonemeVocabulary& vocab = default_vocab();
  CHECK(vocab.vietnamese_category_count() == 53);
  CHECK(vocab.count_kind(TokenKind::Initial) == 22);
  CHECK(vocab.count_kind(TokenKind::Medial) == 1);
  CHECK(vocab.count_kind(TokenKind::Nucleus) == 14);
  CHECK(vocab.count_kind(TokenKind::Ending) == 10);
  CHECK(vocab.count_kind(TokenKind::Tone) == 6);
  CHECK(vocab.count_kind(TokenKind::Separator) == 2);
  CHECK(vocab.count_kind(TokenKind::Control) == 2);
  CHECK(vocab.size() == 53 + vocab.count_kind(TokenKind::EnglishOnly) + 2 + 2);
}

TEST_CASE("inventory ids are stable across loads") {
  std::string path = std::string(VEPHON_DATA_DIR) + "/inventory.tsv";
  PhonemeVocabulary a = PhonemeVocabulary::load(path);
  PhonemeVocabulary b = PhonemeVocabulary::load(path);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a.at(i) == b.at(i));
  }
}

TEST_CASE("inventory validation failures") {
  SUBCASE("empty file is a count error") {
    CHECK_THROWS_WITH_AS(PhonemeVocabulary::from_tokens({}),
                         doctest::Contains("0 Vietnamese phoneme categories"),
                         Error);
  }
  SUBCASE("duplicate surfaces are rejected") {
    std::vector<PhonemeToken> tokens = default_vocab().entries();
    tokens.push_back(tokens.front());
    CHECK_THROWS_WITH_AS(PhonemeVocabulary::from_tokens(std::move(tokens)),
                         doctest::Contains("duplicate surface"), Error);
  }
  SUBCASE("dropping a Vietnamese category breaks the count") {
    std::vector<PhonemeToken> tokens = default_vocab().entries();
    tokens.erase(tokens.begin());  // an initial
    CHECK_THROWS_WITH_AS(PhonemeVocabulary::from_tokens(std::move(tokens)),
                         doctest::Contains("52"), Error);
  }
  SUBCASE("whitespace in a surface is rejected") {
    std::vector<PhonemeToken> tokens = default_vocab().entries();
    tokens.push_back({"a b", TokenKind::EnglishOnly, TokenOrigin::English});
    CHECK_THROWS_AS(PhonemeVocabulary::from_tokens(std::move(tokens)), Error);
  }
}

TEST_CASE("serialize renders the Fig-1 golden strings") {
  const PhonemeVocabulary& vocab = default_vocab();
  auto tok = [&](const std::string& s) { return *vocab.find(s); };

  PhonemeSequence english({tok("m"), tok("e"), tok("-4"), tok("s"), tok("|"),
                           tok("i"), tok("dʒ")});
  CHECK(serialize(english) == "m e -4 s | i dʒ");

  PhonemeSequence vietlish({tok("m"), tok("e"), tok("-4"), tok("tz"), tok("$"),
                            tok("s"), tok("i"), tok("-5"), tok("tz")});
  CHECK(serialize(vietlish) == "m e -4 tz $ s i -5 tz");

  PhonemeSequence single({tok("a")});
  CHECK(serialize(single) == "a");
}

TEST_CASE("parse_sequence inverts serialize and rejects bad structure") {
  const PhonemeVocabulary& vocab = default_vocab();
  PhonemeSequence seq = parse_sequence("m e -4 s | i dʒ", vocab);
  CHECK(seq.size() == 7);
  CHECK(serialize(seq) == "m e -4 s | i dʒ");

  CHECK(parse_sequence("", vocab).empty());

  CHECK_THROWS_WITH_AS(parse_sequence("$ a", vocab),
                       doctest::Contains("starts with separator"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("a $", vocab),
                       doctest::Contains("ends with separator"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("a $ | b", vocab),
                       doctest::Contains("adjacent separators"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("zzz", vocab),
                       doctest::Contains("unknown token 'zzz' at position 0"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("a bad", vocab),
                       doctest::Contains("position 1"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("-4 a", vocab),
                       doctest::Contains("tone token"), Error);
  CHECK_THROWS_WITH_AS(parse_sequence("b -4", vocab),
                       doctest::Contains("tone token"), Error);
  CHECK_THROWS_AS(parse_sequence("<sot> a", vocab), Error);
}

TEST_CASE("id round trips") {
  const PhonemeVocabulary& vocab = default_vocab();
  CHECK(vocab.at(0).surface == "b");
  CHECK(vocab.id_of("b") == 0);

  PhonemeSequence fig1 = parse_sequence("m e -4 s | i dʒ", vocab);
  CHECK(from_ids(to_ids(fig1, vocab), vocab) == fig1);

  CHECK_THROWS_WITH_AS(from_ids({static_cast<int>(vocab.size())}, vocab),
                       doctest::Contains("out of range"), Error);
  CHECK_THROWS_AS(from_ids({-1}, vocab), Error);
}

TEST_CASE("serialize/parse round trip over 10000 random valid sequences") {
  const PhonemeVocabulary& vocab = default_vocab();
  std::mt19937 rng(20240601);
  std::set<std::string> texts;
  std::set<std::vector<std::string>> shapes;
  for (int i = 0; i < 10000; ++i) {
    PhonemeSequence seq = random_sequence(rng);
    std::string text = serialize(seq);
    PhonemeSequence back = parse_sequence(text, vocab);
    REQUIRE(back == seq);
    std::vector<std::string> shape;
    for (const auto& t : seq.tokens()) shape.push_back(t.surface);
    // Injectivity: distinct sequences must serialize to distinct texts.
    bool new_shape = shapes.insert(shape).second;
    bool new_text = texts.insert(text).second;
    REQUIRE(new_shape == new_text);
  }
}
