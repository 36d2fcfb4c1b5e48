#include "sptag/longform.hpp"

#include <algorithm>
#include <cmath>

#include "sptag/errors.hpp"

namespace sptag {

std::vector<DeletionRun> deletion_runs(const Alignment& a,
                                       const std::vector<TimedWord>& ref) {
  std::vector<DeletionRun> runs;
  int run_first = -1, run_last = -1;
  auto close = [&]() {
    if (run_first < 0) return;
    DeletionRun run;
    run.first_ref_index = run_first;
    run.last_ref_index = run_last;
    run.length = run_last - run_first + 1;
    run.first_word_start = ref[run_first].start;
    runs.push_back(run);
    run_first = run_last = -1;
  };
  for (const AlignOp& op : a.ops) {
    if (op.kind == AlignOpKind::Delete) {
      if (run_first < 0) run_first = op.ref_index;
      run_last = op.ref_index;
    } else {
      // Any emitted word (insert included) interrupts the stuck state.
      close();
    }
  }
  close();
  return runs;
}

LongformReport longform_count(const UtteranceRecord& record,
                              const LongformOptions& opts) {
  std::vector<std::string> ref_words;
  ref_words.reserve(record.ref.size());
  for (const TimedWord& w : record.ref) ref_words.push_back(w.word);
  const std::vector<std::string> hyp_words =
      split_words(view(record.hyp, opts.view));

  const Alignment a = align(ref_words, hyp_words);

  LongformReport report;
  report.wer = wer_report(a);
  report.runs = deletion_runs(a, record.ref);
  for (const DeletionRun& run : report.runs) {
    if (run.length < opts.threshold) continue;
    if (record.noise && run.first_word_start < record.noise->end) continue;
    ++report.run_count;
  }
  return report;
}

std::optional<double> ep_latency(const UtteranceRecord& record) {
  if (record.ref.empty()) throw MissingTimingsError();
  std::optional<double> close = record.mic_close_time;
  if (!close) close = endpoint_truncate(record.hyp).close_time;
  if (!close) return std::nullopt;
  return *close - record.ref.back().end;
}

EpQuantiles ep_quantiles(std::vector<double> latencies) {
  if (latencies.empty()) throw EmptyInputError();
  std::sort(latencies.begin(), latencies.end());
  const size_t n = latencies.size();
  // ceil(p*n) with integer arithmetic, 1-based rank.
  auto nearest_rank = [&](size_t num, size_t den) {
    size_t rank = (num * n + den - 1) / den;
    return latencies[rank - 1];
  };
  return EpQuantiles{nearest_rank(50, 100), nearest_rank(90, 100)};
}

std::string format_ms(double seconds) {
  return std::to_string(static_cast<long long>(std::llround(seconds * 1000.0)));
}

}  // namespace sptag
