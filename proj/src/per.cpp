#include "vephon/per.hpp"

#include <algorithm>

namespace vephon {

AlignmentResult align(const PhonemeSequence& reference,
                      const PhonemeSequence& hypothesis) {
  const auto& ref = reference.tokens();
  const auto& hyp = hypothesis.tokens();
  const size_t n = ref.size(), m = hyp.size();
  if (n == 0) {
    throw_error(ErrorKind::Validate, "PER is undefined for an empty reference");
  }

  std::vector<std::vector<int>> d(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = 0; i <= n; ++i) d[i][0] = static_cast<int>(i);
  for (size_t j = 0; j <= m; ++j) d[0][j] = static_cast<int>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int diag = d[i - 1][j - 1] + (ref[i - 1].surface == hyp[j - 1].surface ? 0 : 1);
      int del = d[i - 1][j] + 1;
      int ins = d[i][j - 1] + 1;
      d[i][j] = std::min({diag, del, ins});
    }
  }

  // Backtrace with the fixed preference match > substitution > deletion >
  // insertion.
  AlignmentResult result;
  result.reference_length = static_cast<int>(n);
  std::vector<EditOp> script;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1].surface == hyp[j - 1].surface &&
        d[i][j] == d[i - 1][j - 1]) {
      script.push_back({EditType::Match, static_cast<int>(i - 1), static_cast<int>(j - 1)});
      --i, --j;
    } else if (i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + 1) {
      script.push_back(
          {EditType::Substitute, static_cast<int>(i - 1), static_cast<int>(j - 1)});
      ++result.substitutions;
      --i, --j;
    } else if (i > 0 && d[i][j] == d[i - 1][j] + 1) {
      script.push_back({EditType::Delete, static_cast<int>(i - 1), -1});
      ++result.deletions;
      --i;
    } else {
      script.push_back({EditType::Insert, -1, static_cast<int>(j - 1)});
      ++result.insertions;
      --j;
    }
  }
  std::reverse(script.begin(), script.end());
  result.script = std::move(script);
  return result;
}

double per(const PhonemeSequence& reference, const PhonemeSequence& hypothesis) {
  AlignmentResult r = align(reference, hypothesis);
  return static_cast<double>(r.distance()) / static_cast<double>(r.reference_length);
}

PhonemeSequence strip_separators(const PhonemeSequence& seq) {
  std::vector<PhonemeToken> kept;
  kept.reserve(seq.size());
  for (const auto& token : seq.tokens()) {
    if (token.kind != TokenKind::Separator) kept.push_back(token);
  }
  return PhonemeSequence(std::move(kept));
}

CorpusPer corpus_per(const std::vector<PerPair>& pairs) {
  if (pairs.empty()) {
    throw_error(ErrorKind::Validate, "no utterance pairs to score");
  }
  CorpusPer result;
  for (const auto& pair : pairs) {
    if (pair.reference.empty()) {
      throw_error(ErrorKind::Validate,
                  "empty reference for utterance '" + pair.id + "'");
    }
    UtterancePer utt;
    utt.id = pair.id;
    utt.alignment = align(pair.reference, pair.hypothesis);
    utt.rate = static_cast<double>(utt.alignment.distance()) /
               static_cast<double>(utt.alignment.reference_length);
    result.total_edits += utt.alignment.distance();
    result.total_reference += utt.alignment.reference_length;
    result.utterances.push_back(std::move(utt));
  }
  result.aggregate = static_cast<double>(result.total_edits) /
                     static_cast<double>(result.total_reference);
  return result;
}

}  // namespace vephon
