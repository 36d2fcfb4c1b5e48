#include "sptag/align.hpp"

#include <algorithm>
#include <cstdio>

#include "sptag/errors.hpp"
#include "sptag/normalize.hpp"

namespace sptag {

Alignment align(const std::vector<std::string>& ref,
                const std::vector<std::string>& hyp) {
  const int m = static_cast<int>(ref.size());
  const int n = static_cast<int>(hyp.size());

  std::vector<std::string> rnorm(m), hnorm(n);
  for (int i = 0; i < m; ++i) rnorm[i] = normalize_word(ref[i]).norm;
  for (int j = 0; j < n; ++j) hnorm[j] = normalize_word(hyp[j]).norm;

  // Full (m+1) x (n+1) cost table; the backtrace needs all of it.
  std::vector<int> d(static_cast<size_t>(m + 1) * (n + 1));
  auto at = [&](int i, int j) -> int& { return d[static_cast<size_t>(i) * (n + 1) + j]; };

  for (int i = 0; i <= m; ++i) at(i, 0) = i;
  for (int j = 0; j <= n; ++j) at(0, j) = j;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int diag = at(i - 1, j - 1) + (rnorm[i - 1] == hnorm[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  Alignment a;
  a.ref_len = m;
  a.hyp_len = n;

  // Backtrace from the end with the fixed tie-break
  // Match > Substitute > Delete > Insert.
  int i = m, j = n;
  std::vector<AlignOp> rev;
  rev.reserve(static_cast<size_t>(std::max(m, n)));
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && rnorm[i - 1] == hnorm[j - 1] &&
        at(i - 1, j - 1) == at(i, j)) {
      rev.push_back({AlignOpKind::Match, i - 1, j - 1});
      --i, --j;
    } else if (i > 0 && j > 0 && rnorm[i - 1] != hnorm[j - 1] &&
               at(i - 1, j - 1) + 1 == at(i, j)) {
      rev.push_back({AlignOpKind::Substitute, i - 1, j - 1});
      --i, --j;
    } else {
      const bool can_del = i > 0 && at(i - 1, j) + 1 == at(i, j);
      const bool can_ins = j > 0 && at(i, j - 1) + 1 == at(i, j);
      // When both directions tie, the words differ (equal words always
      // matched above); comparing them keeps the choice symmetric, so
      // align(x,y) and align(y,x) mirror each other's D and I counts.
      bool take_del = can_del;
      if (can_del && can_ins) take_del = rnorm[i - 1] > hnorm[j - 1];
      if (take_del) {
        rev.push_back({AlignOpKind::Delete, i - 1, -1});
        --i;
      } else {
        rev.push_back({AlignOpKind::Insert, -1, j - 1});
        --j;
      }
    }
  }

  a.ops.assign(rev.rbegin(), rev.rend());
  for (const AlignOp& op : a.ops) {
    switch (op.kind) {
      case AlignOpKind::Match: ++a.matches; break;
      case AlignOpKind::Substitute: ++a.substitutions; break;
      case AlignOpKind::Delete: ++a.deletions; break;
      case AlignOpKind::Insert: ++a.insertions; break;
    }
  }
  return a;
}

WerReport wer_report(const Alignment& a) {
  if (a.ref_len == 0) throw EmptyReferenceError();
  WerReport r;
  r.ref_words = a.ref_len;
  r.deletions = a.deletions;
  r.insertions = a.insertions;
  r.substitutions = a.substitutions;
  return r;
}

void accumulate(WerReport& pooled, const Alignment& a) {
  pooled.ref_words += a.ref_len;
  pooled.deletions += a.deletions;
  pooled.insertions += a.insertions;
  pooled.substitutions += a.substitutions;
}

WerReport corpus_wer(
    const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>&
        records) {
  WerReport pooled;
  for (const auto& [ref, hyp] : records) accumulate(pooled, align(ref, hyp));
  if (pooled.ref_words == 0) throw EmptyReferenceError();
  return pooled;
}

std::string format_wer(const WerReport& r) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.1f (%.1f/%.1f/%.1f)", r.wer(),
                r.del_rate(), r.ins_rate(), r.sub_rate());
  return buf;
}

}  // namespace sptag
