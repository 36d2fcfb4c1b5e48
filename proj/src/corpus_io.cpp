#include "sptag/corpus_io.hpp"

#include <algorithm>
#include <istream>

#include "sptag/errors.hpp"

namespace sptag {
namespace {

// Validation helpers produce plain runtime_errors; the line loop wraps
// them with the line number.
void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  require(it != j.end(), std::string("missing field '") + name + "'");
  return *it;
}

template <typename Fn>
ReadStats line_loop(std::istream& in, IoMode mode, const DiagFn& diag, Fn&& fn) {
  ReadStats stats;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++stats.lines;
    try {
      fn(line_no, Json::parse(line));
      ++stats.records;
    } catch (const std::exception& e) {
      if (mode == IoMode::Strict) throw ParseError(line_no, e.what());
      ++stats.skipped;
      if (diag) diag(line_no, e.what());
    }
  }
  return stats;
}

}  // namespace

Domain parse_domain(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "short") return Domain::Short;
  if (lower == "dictation") return Domain::Dictation;
  if (lower == "caption") return Domain::Caption;
  throw std::runtime_error("unknown domain '" + s + "'");
}

std::string domain_name(Domain d) {
  switch (d) {
    case Domain::Short: return "short";
    case Domain::Dictation: return "dictation";
    case Domain::Caption: return "caption";
  }
  return "caption";
}

std::string relabel_status_name(RelabelStatus s) {
  switch (s) {
    case RelabelStatus::Tagged: return "tagged";
    case RelabelStatus::FallbackNoMatch: return "fallback_no_match";
    case RelabelStatus::FallbackAmbiguous: return "fallback_ambiguous";
  }
  return "fallback_no_match";
}

RelabelRecord parse_relabel_record(const Json& j) {
  RelabelRecord rec;
  rec.id = field(j, "id").get<std::string>();
  require(!rec.id.empty(), "id must be non-empty");
  rec.trans_primary = field(j, "trans_primary").get<std::string>();
  rec.trans_all = field(j, "trans_all").get<std::string>();
  rec.original_truth = field(j, "original_truth").get<std::string>();
  if (j.contains("segmented")) rec.segmented = j["segmented"].get<bool>();
  return rec;
}

UtteranceRecord parse_eval_record(const Json& j) {
  UtteranceRecord rec;
  rec.id = field(j, "id").get<std::string>();
  require(!rec.id.empty(), "id must be non-empty");

  double prev_start = 0.0;
  for (const Json& w : field(j, "ref")) {
    TimedWord tw;
    tw.word = field(w, "word").get<std::string>();
    tw.start = field(w, "start").get<double>();
    tw.end = field(w, "end").get<double>();
    require(!tw.word.empty(), "ref word must be non-empty");
    require(tw.start <= tw.end, "ref word start > end");
    require(rec.ref.empty() || tw.start >= prev_start,
            "ref word times must be nondecreasing");
    prev_start = tw.start;
    rec.ref.push_back(std::move(tw));
  }

  for (const Json& h : field(j, "hyp")) {
    const std::string text = field(h, "token").get<std::string>();
    std::optional<double> emit;
    if (h.contains("emit_time")) emit = h["emit_time"].get<double>();
    if (text == kEndPrimary)
      rec.hyp.tokens.push_back(Token::end_primary(emit));
    else if (text == kEndOthers)
      rec.hyp.tokens.push_back(Token::end_others(emit));
    else
      rec.hyp.tokens.push_back(Token::word(text, emit));
  }

  if (j.contains("noise") && !j["noise"].is_null()) {
    NoiseWindow noise;
    noise.start = field(j["noise"], "start").get<double>();
    noise.end = field(j["noise"], "end").get<double>();
    require(noise.start >= 0 && noise.start < noise.end,
            "noise window must satisfy 0 <= start < end");
    rec.noise = noise;
  }
  if (j.contains("mic_close_time") && !j["mic_close_time"].is_null())
    rec.mic_close_time = j["mic_close_time"].get<double>();
  rec.domain = parse_domain(field(j, "domain").get<std::string>());
  return rec;
}

Json eval_record_to_json(const UtteranceRecord& rec) {
  Json j;
  j["id"] = rec.id;
  Json ref = Json::array();
  for (const TimedWord& w : rec.ref)
    ref.push_back({{"word", w.word}, {"start", w.start}, {"end", w.end}});
  j["ref"] = std::move(ref);
  Json hyp = Json::array();
  for (const Token& t : rec.hyp.tokens) {
    Json tok;
    switch (t.kind) {
      case TokenKind::Word: tok["token"] = t.text; break;
      case TokenKind::EndPrimary: tok["token"] = std::string(kEndPrimary); break;
      case TokenKind::EndOthers: tok["token"] = std::string(kEndOthers); break;
    }
    if (t.emit_time) tok["emit_time"] = *t.emit_time;
    hyp.push_back(std::move(tok));
  }
  j["hyp"] = std::move(hyp);
  if (rec.noise)
    j["noise"] = {{"start", rec.noise->start}, {"end", rec.noise->end}};
  if (rec.mic_close_time) j["mic_close_time"] = *rec.mic_close_time;
  j["domain"] = domain_name(rec.domain);
  return j;
}

Json relabel_record_to_json(const RelabelRecord& rec) {
  Json j;
  j["id"] = rec.id;
  j["trans_primary"] = rec.trans_primary;
  j["trans_all"] = rec.trans_all;
  j["original_truth"] = rec.original_truth;
  j["segmented"] = rec.segmented;
  return j;
}

Json truth_to_json(const RecordTruth& truth, int threshold) {
  Json j;
  j["id"] = truth.id;
  j["run_count"] = truth.qualifying(threshold);
  Json runs = Json::array();
  for (const InjectedRun& run : truth.runs)
    runs.push_back({{"ref_index", run.first_ref_index},
                    {"length", run.length},
                    {"start", run.first_word_start}});
  j["runs"] = std::move(runs);
  return j;
}

ReadStats read_relabel_records(std::istream& in, IoMode mode,
                               const std::function<void(RelabelRecord)>& fn,
                               const DiagFn& diag) {
  return line_loop(in, mode, diag,
                   [&](size_t, Json j) { fn(parse_relabel_record(j)); });
}

ReadStats read_eval_records(std::istream& in, IoMode mode,
                            const std::function<void(UtteranceRecord)>& fn,
                            const DiagFn& diag) {
  return line_loop(in, mode, diag,
                   [&](size_t, Json j) { fn(parse_eval_record(j)); });
}

ReadStats read_json_lines(std::istream& in, IoMode mode,
                          const std::function<void(size_t, Json)>& fn,
                          const DiagFn& diag) {
  return line_loop(in, mode, diag, fn);
}

}  // namespace sptag
