#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sptag/longform.hpp"
#include "sptag/synth.hpp"

namespace sptag {

// Field order in emitted JSON is kept stable so corpora diff cleanly.
using Json = nlohmann::ordered_json;

// One relabeling work unit.
struct RelabelRecord {
  std::string id;
  std::string trans_primary;
  std::string trans_all;
  std::string original_truth;
  bool segmented = false;
};

enum class IoMode {
  Strict,   // malformed line -> ParseError
  Lenient,  // malformed line -> diagnostic + skip
};

struct ReadStats {
  size_t lines = 0;    // total lines consumed (blank lines ignored)
  size_t records = 0;  // records delivered
  size_t skipped = 0;  // malformed lines skipped (lenient mode)
};

// Streaming JSONL readers: one JSON object per line, constant memory in
// the file size. `diag` receives one message per malformed line in
// lenient mode; strict mode throws ParseError with the line number.
using DiagFn = std::function<void(size_t line, const std::string& message)>;

ReadStats read_relabel_records(std::istream& in, IoMode mode,
                               const std::function<void(RelabelRecord)>& fn,
                               const DiagFn& diag = {});
ReadStats read_eval_records(std::istream& in, IoMode mode,
                            const std::function<void(UtteranceRecord)>& fn,
                            const DiagFn& diag = {});
// Generic variant for ad-hoc line schemas (view/score inputs).
ReadStats read_json_lines(std::istream& in, IoMode mode,
                          const std::function<void(size_t line, Json)>& fn,
                          const DiagFn& diag = {});

// Parsers/serializers for the line formats. Times are seconds (floating
// point) in files; reports render milliseconds.
RelabelRecord parse_relabel_record(const Json& j);
UtteranceRecord parse_eval_record(const Json& j);
Json eval_record_to_json(const UtteranceRecord& rec);
Json relabel_record_to_json(const RelabelRecord& rec);
Json truth_to_json(const RecordTruth& truth, int threshold);

Domain parse_domain(const std::string& s);
std::string domain_name(Domain d);

std::string relabel_status_name(RelabelStatus s);

}  // namespace sptag
