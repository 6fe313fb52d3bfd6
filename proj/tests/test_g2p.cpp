#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "vephon/g2p.hpp"

using namespace vephon;

namespace {

const PhonemeVocabulary& vocab() {
  static PhonemeVocabulary v =
      PhonemeVocabulary::load(std::string(VEPHON_DATA_DIR) + "/inventory.tsv");
  return v;
}

const IpaPhoneTable& phones() {
  static IpaPhoneTable t =
      IpaPhoneTable::load(std::string(VEPHON_DATA_DIR) + "/ipa_phones.tsv");
  return t;
}

const EnPhonemeMapping& mapping() {
  static EnPhonemeMapping m = EnPhonemeMapping::load(
      std::string(VEPHON_DATA_DIR) + "/en_map.tsv", phones(), vocab());
  return m;
}

std::string g2p(const std::string& ipa) {
  return serialize(mapping().map_standard(parse_ipa(ipa, phones()), vocab()));
}

}  // namespace

TEST_CASE("parse_ipa splits syllables and stress") {
  auto syls = parse_ipa("ˈmes.ɪdʒ", phones());
  REQUIRE(syls.size() == 2);
  CHECK(syls[0] == IpaSyllable{{"m", "e", "s"}, true});
  CHECK(syls[1] == IpaSyllable{{"ɪ", "dʒ"}, false});

  auto one = parse_ipa("iː", phones());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == IpaSyllable{{"iː"}, false});

  CHECK(parse_ipa("", phones()).empty());
  CHECK(parse_ipa("/bi/", phones()).size() == 1);

  // secondary stress is ignored
  auto sec = parse_ipa("ˌʌn.dəˈstænd", phones());
  REQUIRE(sec.size() == 3);
  CHECK_FALSE(sec[0].stressed);
  CHECK(sec[2].stressed);
}

TEST_CASE("parse_ipa reports unknown symbols with their offset") {
  CHECK_THROWS_WITH_AS(parse_ipa("q□", phones()),
                       doctest::Contains("at offset 1"), Error);
  CHECK_THROWS_WITH_AS(parse_ipa("□", phones()), doctest::Contains("at offset 0"),
                       Error);
  // stray dots around stress marks carry no content; stress sticks to the
  // next real syllable
  auto lenient = parse_ipa("ˈ.a", phones());
  REQUIRE(lenient.size() == 1);
  CHECK(lenient[0].stressed);
}

TEST_CASE("map_standard golden strings") {
  CHECK(g2p("ˈmes.ɪdʒ") == "m e -4 s | i dʒ");
  CHECK(g2p("bi") == "b i");
  CHECK(g2p("æ") == "æ");
  // /æ/ maps to the english_only token, never a Vietnamese nucleus
  const auto& token = *vocab().find(mapping().row("æ").target);
  CHECK(token.kind == TokenKind::EnglishOnly);
}

TEST_CASE("coverage errors name the phone") {
  auto syls = parse_ipa("q", phones());
  try {
    mapping().map_standard(syls, vocab());
    FAIL("expected coverage error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Coverage);
    CHECK(std::string(e.what()).find("'q'") != std::string::npos);
  }
}

TEST_CASE("mapping table must be a function") {
  std::string path = "/tmp/vephon_dup_map.tsv";
  {
    std::ofstream out(path);
    out << "<stress>\t-4\tstress\n";
    out << "p\tp\tshared_consonant\n";
    out << "p\tb\tshared_consonant\n";
  }
  CHECK_THROWS_WITH_AS(EnPhonemeMapping::load(path, phones(), vocab()),
                       doctest::Contains("duplicate row"), Error);
}

TEST_CASE("output structure invariants over the shipped lexicon") {
  IpaLexicon lex = IpaLexicon::load(std::string(VEPHON_DATA_DIR) + "/lexicon.tsv",
                                    phones());
  CHECK(lex.entries().size() == 100);
  for (const auto& entry : lex.entries()) {
    CAPTURE(entry.word);
    auto syls = parse_ipa(entry.ipa, phones());
    PhonemeSequence seq = mapping().map_standard(syls, vocab());
    int tones = 0, dollars = 0, bars = 0;
    for (const auto& t : seq.tokens()) {
      if (t.kind == TokenKind::Tone) ++tones;
      if (t.surface == "$") ++dollars;
      if (t.surface == "|") ++bars;
    }
    // at most one tone per word, zero $, | count = syllable count - 1
    CHECK(tones <= 1);
    CHECK(dollars == 0);
    CHECK(bars == static_cast<int>(syls.size()) - 1);
  }
}
