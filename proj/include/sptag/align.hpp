#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sptag {

enum class AlignOpKind { Match, Substitute, Delete, Insert };

// One step of a word alignment. Match/Substitute carry both indices,
// Delete only ref_index, Insert only hyp_index (-1 marks absent).
struct AlignOp {
  AlignOpKind kind = AlignOpKind::Match;
  int ref_index = -1;
  int hyp_index = -1;

  bool operator==(const AlignOp& o) const {
    return kind == o.kind && ref_index == o.ref_index && hyp_index == o.hyp_index;
  }
};

// Minimal unit-cost alignment of a hypothesis against a reference.
struct Alignment {
  std::vector<AlignOp> ops;
  int ref_len = 0;
  int hyp_len = 0;

  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int matches = 0;

  int errors() const { return substitutions + deletions + insertions; }
};

// WER with the deletion / insertion / substitution breakdown. Rates are
// percentages of the reference word count; wer == del + ins + sub
// exactly on the unrounded values.
struct WerReport {
  int64_t ref_words = 0;
  int64_t deletions = 0;
  int64_t insertions = 0;
  int64_t substitutions = 0;

  int64_t errors() const { return deletions + insertions + substitutions; }
  double wer() const { return 100.0 * static_cast<double>(errors()) / static_cast<double>(ref_words); }
  double del_rate() const { return 100.0 * static_cast<double>(deletions) / static_cast<double>(ref_words); }
  double ins_rate() const { return 100.0 * static_cast<double>(insertions) / static_cast<double>(ref_words); }
  double sub_rate() const { return 100.0 * static_cast<double>(substitutions) / static_cast<double>(ref_words); }
};

// Minimum-edit-distance word alignment with unit costs. Words are
// compared by their normalized form (case- and punctuation-insensitive)
// but reports keep surface forms. The backtrace is deterministic with
// preference Match > Substitute > Delete > Insert at equal cost, so run
// boundaries are reproducible.
Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp);

// Rates from one alignment. Throws EmptyReferenceError if ref_len == 0.
WerReport wer_report(const Alignment& a);

// Pooled corpus WER: summed counts over records, not a mean of
// per-utterance WERs. Throws EmptyReferenceError if every reference is
// empty.
WerReport corpus_wer(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        records);

// Accumulates counts from one more alignment into a pooled report.
void accumulate(WerReport& pooled, const Alignment& a);

// "39.9 (30.1/1.2/8.6)" with one decimal per field.
std::string format_wer(const WerReport& r);

}  // namespace sptag
