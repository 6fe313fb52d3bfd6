#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vephon/per.hpp"

using namespace vephon;

namespace {

// Independent oracle: plain quadratic DP over surfaces, no tie-breaking, no
// backtrace. Written before the aligner; the aligner must match it.
int oracle_distance(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  size_t n = a.size(), m = b.size();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int best = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      if (d[i - 1][j] + 1 < best) best = d[i - 1][j] + 1;
      if (d[i][j - 1] + 1 < best) best = d[i][j - 1] + 1;
      d[i][j] = best;
    }
  }
  return d[n][m];
}

PhonemeToken tok(const std::string& surface) {
  TokenKind kind = is_tone_surface(surface) ? TokenKind::Tone : TokenKind::Nucleus;
  return PhonemeToken{surface, kind, TokenOrigin::Shared};
}

PhonemeSequence seq(const std::vector<std::string>& surfaces) {
  std::vector<PhonemeToken> tokens;
  for (const auto& s : surfaces) tokens.push_back(tok(s));
  return PhonemeSequence(std::move(tokens));
}

std::vector<std::string> surfaces_of(const PhonemeSequence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens()) out.push_back(t.surface);
  return out;
}

void check_alignment_counts(const PhonemeSequence& ref, const PhonemeSequence& hyp,
                            const AlignmentResult& r) {
  int matches = 0;
  for (const auto& op : r.script) {
    if (op.type == EditType::Match) ++matches;
  }
  CHECK(matches + r.substitutions + r.deletions == static_cast<int>(ref.size()));
  CHECK(matches + r.substitutions + r.insertions == static_cast<int>(hyp.size()));
  CHECK(r.reference_length == static_cast<int>(ref.size()));
}

}  // namespace

TEST_CASE("spec alignment examples") {
  // identity
  AlignmentResult id = align(seq({"m", "e", "-4", "s"}), seq({"m", "e", "-4", "s"}));
  CHECK(id.insertions == 0);
  CHECK(id.deletions == 0);
  CHECK(id.substitutions == 0);
  CHECK(id.reference_length == 4);

  // frozen from the oracle: ref "a b" vs hyp "a b c d" -> 2 insertions
  CHECK(oracle_distance({"a", "b"}, {"a", "b", "c", "d"}) == 2);
  AlignmentResult ins = align(seq({"a", "b"}), seq({"a", "b", "c", "d"}));
  CHECK(ins.insertions == 2);
  CHECK(ins.deletions == 0);
  CHECK(ins.substitutions == 0);
  CHECK(ins.reference_length == 2);

  // frozen from the oracle: one substitution
  CHECK(oracle_distance({"a", "b", "c", "d"}, {"a", "x", "c", "d"}) == 1);
  AlignmentResult sub = align(seq({"a", "b", "c", "d"}), seq({"a", "x", "c", "d"}));
  CHECK(sub.substitutions == 1);
  CHECK(sub.insertions == 0);
  CHECK(sub.deletions == 0);
  CHECK(sub.reference_length == 4);
}

TEST_CASE("empty reference is an error, empty hypothesis is all deletions") {
  CHECK_THROWS_AS(align(seq({}), seq({"a"})), Error);
  CHECK_THROWS_AS(per(seq({}), seq({})), Error);
  AlignmentResult r = align(seq({"a", "b"}), seq({}));
  CHECK(r.deletions == 2);
  CHECK(per(seq({"a", "b"}), seq({})) == doctest::Approx(1.0));
}

TEST_CASE("align matches the oracle exhaustively on length <= 6 over {a,b,c}") {
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::vector<std::vector<std::string>> pool;
  // all strings of length 0..6 over the alphabet
  pool.push_back({});
  size_t start = 0;
  for (int len = 1; len <= 6; ++len) {
    size_t end = pool.size();
    for (size_t i = start; i < end; ++i) {
      for (const auto& c : alphabet) {
        auto next = pool[i];
        next.push_back(c);
        pool.push_back(next);
      }
    }
    start = end;
  }
  long checked = 0;
  for (const auto& ref : pool) {
    if (ref.empty()) continue;
    for (const auto& hyp : pool) {
      AlignmentResult r = align(seq(ref), seq(hyp));
      int expected = oracle_distance(ref, hyp);
      if (r.distance() != expected) {
        CAPTURE(ref.size());
        CAPTURE(hyp.size());
        REQUIRE(r.distance() == expected);
      }
      ++checked;
    }
  }
  MESSAGE("exhaustive pairs checked: ", checked);
  CHECK(checked == 1092l * 1093l);
}

TEST_CASE("align matches the oracle on 1000 random pairs up to length 50") {
  std::mt19937 rng(7781);
  const std::vector<std::string> alphabet = {"a", "b", "c", "d", "e"};
  auto random_seq = [&](size_t min_len) {
    size_t len = std::uniform_int_distribution<size_t>(min_len, 50)(rng);
    std::vector<std::string> out;
    for (size_t i = 0; i < len; ++i) {
      out.push_back(alphabet[std::uniform_int_distribution<size_t>(
          0, alphabet.size() - 1)(rng)]);
    }
    return out;
  };
  for (int i = 0; i < 1000; ++i) {
    auto ref = random_seq(1);
    auto hyp = random_seq(0);
    AlignmentResult r = align(seq(ref), seq(hyp));
    REQUIRE(r.distance() == oracle_distance(ref, hyp));
    check_alignment_counts(seq(ref), seq(hyp), r);
  }
}

TEST_CASE("per values and bounds") {
  CHECK(per(seq({"a", "b"}), seq({"a", "b"})) == 0.0);
  CHECK(per(seq({"a", "b"}), seq({"a", "b", "c", "d"})) == doctest::Approx(1.0));

  // doubling the hypothesis pushes PER to >= 100% (the En-native regime)
  std::vector<std::string> ref = {"a", "b", "c"};
  std::vector<std::string> twice = {"a", "b", "c", "a", "b", "c"};
  CHECK(per(seq(ref), seq(twice)) >= 1.0);

  // per == 0 iff identical
  CHECK(per(seq({"a"}), seq({"b"})) > 0.0);

  // symmetric bound: per <= (|r| + |h|) / |r|
  std::mt19937 rng(99);
  const std::vector<std::string> alphabet = {"a", "b"};
  for (int i = 0; i < 200; ++i) {
    size_t n = std::uniform_int_distribution<size_t>(1, 12)(rng);
    size_t m = std::uniform_int_distribution<size_t>(0, 12)(rng);
    std::vector<std::string> r, h;
    for (size_t k = 0; k < n; ++k)
      r.push_back(alphabet[std::uniform_int_distribution<size_t>(0, 1)(rng)]);
    for (size_t k = 0; k < m; ++k)
      h.push_back(alphabet[std::uniform_int_distribution<size_t>(0, 1)(rng)]);
    CHECK(per(seq(r), seq(h)) <= static_cast<double>(n + m) / n + 1e-12);
  }
}

TEST_CASE("tie-breaking produces deterministic scripts that replay") {
  auto ref = seq({"a", "b", "c", "a"});
  auto hyp = seq({"b", "c", "a", "a"});
  AlignmentResult r1 = align(ref, hyp);
  AlignmentResult r2 = align(ref, hyp);
  CHECK(r1.script == r2.script);
  check_alignment_counts(ref, hyp, r1);

  // replay the script over the reference and recover the hypothesis
  std::vector<std::string> rebuilt;
  auto rs = surfaces_of(ref);
  auto hs = surfaces_of(hyp);
  for (const auto& op : r1.script) {
    switch (op.type) {
      case EditType::Match: rebuilt.push_back(rs[op.ref_pos]); break;
      case EditType::Substitute:
      case EditType::Insert: rebuilt.push_back(hs[op.hyp_pos]); break;
      case EditType::Delete: break;
    }
  }
  CHECK(rebuilt == hs);
}

TEST_CASE("corpus_per pools counts and keeps per-utterance rates") {
  std::vector<PerPair> pairs;
  pairs.push_back({"u1", seq({"a", "b"}), seq({"a", "b"})});
  pairs.push_back({"u2", seq({"a", "b"}), seq({"a", "b"})});
  CorpusPer same = corpus_per(pairs);
  CHECK(same.aggregate == 0.0);
  REQUIRE(same.utterances.size() == 2);

  // rates 0.0 (N=10) and 1.0 (N=10) pool to 0.5
  std::vector<std::string> ten(10, "a");
  std::vector<std::string> other(10, "b");
  std::vector<PerPair> mixed;
  mixed.push_back({"zero", seq(ten), seq(ten)});
  mixed.push_back({"one", seq(ten), seq(other)});
  CorpusPer pooled = corpus_per(mixed);
  CHECK(pooled.aggregate == doctest::Approx(0.5));
  CHECK(pooled.utterances[0].rate == 0.0);
  CHECK(pooled.utterances[1].rate == doctest::Approx(1.0));

  CHECK_THROWS_AS(corpus_per({}), Error);
  std::vector<PerPair> bad;
  bad.push_back({"bad-utt", seq({}), seq({"a"})});
  CHECK_THROWS_WITH_AS(corpus_per(bad), doctest::Contains("bad-utt"), Error);
}

TEST_CASE("micro-average is invariant to order and splitting") {
  std::mt19937 rng(4242);
  const std::vector<std::string> alphabet = {"a", "b", "c"};
  std::vector<PerPair> pairs;
  for (int i = 0; i < 24; ++i) {
    auto rand_seq = [&](size_t lo, size_t hi) {
      size_t len = std::uniform_int_distribution<size_t>(lo, hi)(rng);
      std::vector<std::string> out;
      for (size_t k = 0; k < len; ++k)
        out.push_back(alphabet[std::uniform_int_distribution<size_t>(0, 2)(rng)]);
      return out;
    };
    pairs.push_back({"u" + std::to_string(i), seq(rand_seq(1, 15)), seq(rand_seq(0, 15))});
  }
  CorpusPer base = corpus_per(pairs);

  std::vector<PerPair> shuffled = pairs;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(corpus_per(shuffled).aggregate == doctest::Approx(base.aggregate));

  // splitting into two halves and pooling the counts gives the same rate
  std::vector<PerPair> left(pairs.begin(), pairs.begin() + 12);
  std::vector<PerPair> right(pairs.begin() + 12, pairs.end());
  CorpusPer l = corpus_per(left), r = corpus_per(right);
  double merged = static_cast<double>(l.total_edits + r.total_edits) /
                  static_cast<double>(l.total_reference + r.total_reference);
  CHECK(merged == doctest::Approx(base.aggregate));
}

TEST_CASE("strip_separators") {
  std::vector<PhonemeToken> tokens = {
      tok("a"), {"$", TokenKind::Separator, TokenOrigin::Shared}, tok("b")};
  PhonemeSequence with_sep{tokens};
  PhonemeSequence stripped = strip_separators(with_sep);
  CHECK(stripped.size() == 2);
  CHECK(per(with_sep, stripped) == doctest::Approx(1.0 / 3.0));
}
