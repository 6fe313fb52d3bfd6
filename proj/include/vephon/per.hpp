#pragma once

#include <string>
#include <vector>

#include "vephon/phoneme.hpp"

namespace vephon {

enum class EditType { Match, Substitute, Delete, Insert };

struct EditOp {
  EditType type;
  int ref_pos = -1;  // position in the reference, -1 for insertions
  int hyp_pos = -1;  // position in the hypothesis, -1 for deletions

  bool operator==(const EditOp& other) const = default;
};

struct AlignmentResult {
  int insertions = 0;
  int deletions = 0;
  int substitutions = 0;
  int reference_length = 0;
  std::vector<EditOp> script;

  int distance() const { return insertions + deletions + substitutions; }
};

// Unit-cost edit-distance alignment. Separators and tone tokens count as
// ordinary units. Ties break match > substitution > deletion > insertion,
// so edit scripts are reproducible; the distance itself is tie-free.
// Empty reference is an error (PER is undefined at N = 0).
AlignmentResult align(const PhonemeSequence& reference, const PhonemeSequence& hypothesis);

// (I + D + S) / N. Not clamped; hypotheses longer than the reference can
// push this past 1.
double per(const PhonemeSequence& reference, const PhonemeSequence& hypothesis);

// Drops $ and | tokens (the --ignore-separators view of a sequence).
PhonemeSequence strip_separators(const PhonemeSequence& seq);

struct PerPair {
  std::string id;
  PhonemeSequence reference;
  PhonemeSequence hypothesis;
};

struct UtterancePer {
  std::string id;
  AlignmentResult alignment;
  double rate = 0.0;
};

struct CorpusPer {
  long total_edits = 0;
  long total_reference = 0;
  double aggregate = 0.0;  // pooled (micro-average) rate
  std::vector<UtterancePer> utterances;
};

// Micro-average: pooled edit counts over pooled reference length. Empty
// pair lists and empty references are errors (the utterance id is named).
CorpusPer corpus_per(const std::vector<PerPair>& pairs);

}  // namespace vephon
