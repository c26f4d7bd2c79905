#include "hangwire/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace hangwire {

CanonicalWord canonical_form(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("the zero word has no canonical form");
  Word cyc = analyze(w).cyclic_reduced;
  const auto& v = cyc.letters();
  const int len = cyc.length();

  std::vector<int> best, cur;
  cur.reserve(static_cast<size_t>(len));
  for (int dir = 0; dir < 2; ++dir) {
    for (int start = 0; start < len; ++start) {
      cur.clear();
      std::array<int, kMaxNail + 1> label{};
      std::array<int, kMaxNail + 1> first_sign{};
      int next_label = 0;
      for (int t = 0; t < len; ++t) {
        int idx = dir == 0 ? (start + t) % len
                           : ((start - t) % len + len) % len;
        int raw = dir == 0 ? v[static_cast<size_t>(idx)]
                           : -v[static_cast<size_t>(idx)];
        int nail = raw > 0 ? raw : -raw;
        int sign = raw > 0 ? 1 : -1;
        if (label[static_cast<size_t>(nail)] == 0) {
          label[static_cast<size_t>(nail)] = ++next_label;
          first_sign[static_cast<size_t>(nail)] = sign;
        }
        int out = label[static_cast<size_t>(nail)];
        cur.push_back(sign == first_sign[static_cast<size_t>(nail)] ? out
                                                                    : -out);
      }
      if (best.empty()) {
        best = cur;
        continue;
      }
      for (int t = 0; t < len; ++t) {
        int d = letter_rank(cur[static_cast<size_t>(t)]) -
                letter_rank(best[static_cast<size_t>(t)]);
        if (d < 0) best = cur;
        if (d != 0) break;
      }
    }
  }
  CanonicalWord out;
  out.word = Word::reduce(best);
  out.nails = analyze(out.word).support.size();
  return out;
}

bool equivalent(const Word& a, const Word& b) {
  return canonical_form(a).word == canonical_form(b).word;
}

namespace {

constexpr int kMaxSearchNails = 8;
constexpr int kMaxSearchLength = 64;
constexpr int kLongRunLength = 14;

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::uint64_t node_budget = ~std::uint64_t{0};
  std::uint64_t progress_stride = 1'000'000'000;
  std::function<void(std::uint64_t)> progress;
  std::atomic<std::uint64_t> next_progress_mark{1'000'000'000};

  // Returns false when the budget is exhausted.
  bool credit(std::uint64_t delta) {
    std::uint64_t total = nodes.fetch_add(delta) + delta;
    if (progress) {
      std::uint64_t mark = next_progress_mark.load();
      while (total >= mark &&
             next_progress_mark.compare_exchange_weak(mark, mark + progress_stride))
        progress(total);
    }
    if (total > node_budget) {
      abort.store(true);
      return false;
    }
    return abort.load() ? false : true;
  }
};

// One depth-first enumerator. Generation enforces, at every step: free
// reduction, the relabeling prefix rule (nail j+1 may appear only after
// nail j), positive first occurrences, a remaining-budget bound (every
// unseen or unbalanced nail still costs letters), and the end-joint rule
// for cyclic reduction. Full rotation/reversal minimality is tested only
// at complete words; prefix-level orbit pruning would be unsound.
struct Enumerator {
  int n = 0;
  int target_len = 0;
  bool net_zero = true;  // k < n: every net exponent must return to zero

  std::array<std::int8_t, kMaxSearchLength> buf{};
  std::array<std::int8_t, kMaxSearchNails + 2> net{};
  int max_seen = 0;
  int deficit = 0;
  std::uint64_t local_nodes = 0;
  bool stopped = false;

  std::vector<std::uint64_t> must_fall, must_hang;
  Shared* shared = nullptr;
  std::vector<Word>* found = nullptr;

  // Prefix collection mode.
  int stop_depth = 0;
  std::vector<std::vector<std::int8_t>>* prefixes = nullptr;

  void reset() {
    net.fill(0);
    max_seen = 0;
    deficit = net_zero ? 2 * n : n;
    local_nodes = 0;
    stopped = false;
  }

  void apply(int pos, std::int8_t x) {
    int nail = x > 0 ? x : -x;
    buf[static_cast<size_t>(pos)] = x;
    if (nail > max_seen) {
      max_seen = nail;
      net[static_cast<size_t>(nail)] = 1;
      deficit -= 1;
    } else {
      int old = net[static_cast<size_t>(nail)];
      int now = old + (x > 0 ? 1 : -1);
      net[static_cast<size_t>(nail)] = static_cast<std::int8_t>(now);
      if (net_zero)
        deficit += std::abs(now) - std::abs(old);
      else
        deficit += (now == 0) - (old == 0);
    }
  }

  void undo(int pos, std::int8_t x, bool was_new) {
    (void)pos;
    int nail = x > 0 ? x : -x;
    if (was_new) {
      max_seen = nail - 1;
      net[static_cast<size_t>(nail)] = 0;
      deficit += 1;
    } else {
      int now = net[static_cast<size_t>(nail)];
      int old = now - (x > 0 ? 1 : -1);
      net[static_cast<size_t>(nail)] = static_cast<std::int8_t>(old);
      if (net_zero)
        deficit -= std::abs(now) - std::abs(old);
      else
        deficit -= (now == 0) - (old == 0);
    }
  }

  void dfs(int pos) {
    if (pos == stop_depth) {
      if (prefixes)
        prefixes->emplace_back(buf.begin(), buf.begin() + pos);
      else
        leaf();
      return;
    }
    const int rem = target_len - pos - 1;
    const std::int8_t prev =
        pos > 0 ? buf[static_cast<size_t>(pos - 1)] : std::int8_t{0};
    const std::int8_t neg_first =
        pos > 0 ? static_cast<std::int8_t>(-buf[0]) : std::int8_t{0};
    const bool last = pos == target_len - 1;
    const int seen = max_seen;
    const int jmax = seen < n ? seen + 1 : n;

    for (int j = 1; j <= jmax; ++j) {
      const bool is_new = j > seen;
      const int sign_count = is_new ? 1 : 2;
      for (int s = 0; s < sign_count; ++s) {
        const std::int8_t x =
            static_cast<std::int8_t>(s == 0 ? j : -j);
        if (x == -prev) continue;
        if (last && x == neg_first && pos > 0) continue;
        int nd;
        if (is_new) {
          nd = deficit - 1;
        } else {
          int old = net[static_cast<size_t>(j)];
          int now = old + (s == 0 ? 1 : -1);
          nd = net_zero ? deficit + std::abs(now) - std::abs(old)
                        : deficit + (now == 0) - (old == 0);
        }
        if (nd > rem) continue;

        apply(pos, x);
        if ((++local_nodes & 0xFFFFF) == 0) {
          if (!shared->credit(0x100000)) stopped = true;
        }
        if (!stopped) dfs(pos + 1);
        undo(pos, x, is_new);
        if (stopped) return;
      }
    }
  }

  void leaf() {
    if (!is_canonical()) return;
    if (!passes_spec()) return;
    std::vector<int> letters(buf.begin(), buf.begin() + target_len);
    found->push_back(Word::reduce(letters));
  }

  // Word-level minimality over all rotations of the word and of its
  // inversion, each relabel/sign-normalized on the fly. Every candidate
  // normalizes its first letter to +1 and the word itself starts +1, so
  // only the tail of each comparison can decide.
  bool is_canonical() const {
    const int len = target_len;
    std::int8_t rank[kMaxSearchLength];
    for (int t = 0; t < len; ++t)
      rank[t] = static_cast<std::int8_t>(letter_rank(buf[static_cast<size_t>(t)]));

    std::uint8_t label[kMaxSearchNails + 2];
    std::int8_t first_sign[kMaxSearchNails + 2];

    for (int start = 1; start < len; ++start) {  // forward rotations
      std::memset(label, 0, sizeof(label));
      int next_label = 0;
      int idx = start;
      for (int t = 0; t < len; ++t) {
        int raw = buf[static_cast<size_t>(idx)];
        ++idx;
        if (idx == len) idx = 0;
        int nail = raw > 0 ? raw : -raw;
        int sign = raw > 0 ? 1 : -1;
        if (label[nail] == 0) {
          label[nail] = static_cast<std::uint8_t>(++next_label);
          first_sign[nail] = static_cast<std::int8_t>(sign);
        }
        int out_rank = sign == first_sign[nail] ? 2 * label[nail] - 2
                                                : 2 * label[nail] - 1;
        int d = out_rank - rank[t];
        if (d < 0) return false;
        if (d > 0) break;
      }
    }
    for (int start = 0; start < len; ++start) {  // rotations of the inverse
      std::memset(label, 0, sizeof(label));
      int next_label = 0;
      int idx = start;
      for (int t = 0; t < len; ++t) {
        int raw = -buf[static_cast<size_t>(idx)];
        --idx;
        if (idx < 0) idx = len - 1;
        int nail = raw > 0 ? raw : -raw;
        int sign = raw > 0 ? 1 : -1;
        if (label[nail] == 0) {
          label[nail] = static_cast<std::uint8_t>(++next_label);
          first_sign[nail] = static_cast<std::int8_t>(sign);
        }
        int out_rank = sign == first_sign[nail] ? 2 * label[nail] - 2
                                                : 2 * label[nail] - 1;
        int d = out_rank - rank[t];
        if (d < 0) return false;
        if (d > 0) break;
      }
    }
    return true;
  }

  bool restricted_vanishes(std::uint64_t removed) const {
    std::int8_t stack[kMaxSearchLength];
    int top = 0;
    for (int t = 0; t < target_len; ++t) {
      std::int8_t x = buf[static_cast<size_t>(t)];
      int nail = x > 0 ? x : -x;
      if ((removed >> (nail - 1)) & 1) continue;
      if (top > 0 && stack[top - 1] == -x)
        --top;
      else
        stack[top++] = x;
    }
    return top == 0;
  }

  bool passes_spec() const {
    for (std::uint64_t mask : must_fall)
      if (!restricted_vanishes(mask)) return false;
    for (std::uint64_t mask : must_hang)
      if (restricted_vanishes(mask)) return false;
    return true;
  }
};

void replay_prefix(Enumerator& e, std::span<const std::int8_t> prefix) {
  e.reset();
  for (size_t i = 0; i < prefix.size(); ++i)
    e.apply(static_cast<int>(i), prefix[i]);
}

}  // namespace

SearchOutcome search_length(const Spec& f, int length,
                            const SearchOptions& options) {
  if (!f.is_threshold())
    throw std::invalid_argument("search requires a threshold puzzle");
  const int n = f.nails();
  const int k = f.demaine_k();
  if (n > 6)
    throw std::invalid_argument("search limited to n <= 6 nails");
  if (length < 1 || length > kMaxSearchLength)
    throw std::invalid_argument("search length out of range");
  if (length >= kLongRunLength && n >= 4 && !options.allow_long)
    throw std::invalid_argument(
        "length " + std::to_string(length) +
        " is a long run; set allow_long (--long) to proceed");
  if (options.shards < 1 || options.shard_id < 0 ||
      options.shard_id >= options.shards)
    throw std::invalid_argument("invalid shard selection");

  auto t0 = std::chrono::steady_clock::now();
  SearchOutcome out;
  out.spec = f.text();
  out.length = length;
  out.shards = options.shards;
  out.shard_id = options.shard_id;

  Shared shared;
  shared.node_budget = options.node_budget;
  shared.progress = options.progress;
  if (options.progress_stride > 0) {
    shared.progress_stride = options.progress_stride;
    shared.next_progress_mark.store(options.progress_stride);
  }

  EssentialRemovals ess = essential_removals(Spec::threshold(k, n));
  std::vector<std::uint64_t> must_fall, must_hang;
  for (NailSet s : ess.must_fall) must_fall.push_back(s.bits());
  for (NailSet s : ess.must_hang) must_hang.push_back(s.bits());

  auto configure = [&](Enumerator& e) {
    e.n = n;
    e.target_len = length;
    e.net_zero = k < n;
    e.must_fall = must_fall;
    e.must_hang = must_hang;
    e.shared = &shared;
  };

  // Collect the prefix partition cells.
  const int depth = std::min(options.prefix_depth, length);
  std::vector<std::vector<std::int8_t>> prefixes;
  {
    Enumerator e;
    configure(e);
    e.stop_depth = depth;
    e.prefixes = &prefixes;
    e.reset();
    e.dfs(0);
    shared.credit(e.local_nodes & 0xFFFFF);
  }

  std::vector<std::size_t> mine;
  for (std::size_t i = 0; i < prefixes.size(); ++i)
    if (static_cast<int>(i % static_cast<std::size_t>(options.shards)) ==
        options.shard_id)
      mine.push_back(i);

  const int threads = std::max(1, options.threads);
  std::vector<std::vector<Word>> results(static_cast<size_t>(threads));
  std::atomic<std::size_t> cursor{0};

  auto worker = [&](int tid) {
    Enumerator e;
    configure(e);
    e.stop_depth = length;
    e.found = &results[static_cast<size_t>(tid)];
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= mine.size() || shared.abort.load()) break;
      if (depth == length) {
        // Prefixes are complete words; process each directly.
        replay_prefix(e, prefixes[mine[i]]);
        e.leaf();
        continue;
      }
      replay_prefix(e, prefixes[mine[i]]);
      e.dfs(depth);
      shared.credit(e.local_nodes & 0xFFFFF);
      e.local_nodes = 0;
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();
  }

  std::vector<Word> merged;
  for (auto& r : results)
    for (auto& w : r) merged.push_back(std::move(w));
  std::sort(merged.begin(), merged.end(), canonical_less);
  for (auto& w : merged) {
    CanonicalWord c;
    c.nails = analyze(w).support.size();
    c.word = std::move(w);
    out.solutions.push_back(std::move(c));
  }

  out.nodes = shared.nodes.load();
  out.aborted = shared.abort.load();
  if (out.aborted) {
    out.abort_reason = "node budget exceeded";
    out.solutions.clear();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
  return out;
}

MinimumOutcome find_minimum(const Spec& f, int max_length,
                            const SearchOptions& options) {
  if (!f.is_threshold())
    throw std::invalid_argument("search requires a threshold puzzle");
  const int n = f.nails();
  const int k = f.demaine_k();
  MinimumOutcome out;
  out.spec = f.text();

  if (k == 0) {
    // Falls everywhere; the empty word is the unique (and only) solution.
    out.found = true;
    out.min_length = 0;
    out.solutions.push_back(CanonicalWord{Word{}, 0});
    return out;
  }

  int start = k < n ? 2 * n : n;
  int step = k < n ? 2 : 1;
  for (int len = start; len <= max_length; len += step) {
    SearchOutcome res = search_length(f, len, options);
    out.nodes += res.nodes;
    out.seconds += res.seconds;
    if (res.aborted) {
      out.aborted = true;
      out.abort_reason = res.abort_reason;
      return out;
    }
    if (!res.solutions.empty()) {
      out.found = true;
      out.min_length = len;
      out.solutions = std::move(res.solutions);
      return out;
    }
    out.searched_up_to = len;
  }
  if (!out.found && out.searched_up_to < max_length)
    out.searched_up_to = max_length;
  return out;
}

}  // namespace hangwire
