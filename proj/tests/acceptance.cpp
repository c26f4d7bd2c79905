// Acceptance suite: every release criterion in one binary, one verdict
// line per criterion. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

#include "hangwire/construct.hpp"
#include "hangwire/search.hpp"

using namespace hangwire;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<bool(std::string&)> run;
};

struct CheckList {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> len_dist(0, 64);
  std::uniform_int_distribution<int> nail_dist(1, 8);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  std::uniform_int_distribution<std::uint64_t> mask_dist(0, 255);
  auto random_word = [&]() {
    std::vector<int> letters(static_cast<size_t>(len_dist(rng)));
    for (auto& x : letters)
      x = nail_dist(rng) * (sign_dist(rng) ? 1 : -1);
    return Word::reduce(letters);
  };

  CheckList c;
  const int rounds = 34000;  // three fresh words per round
  for (int i = 0; i < rounds && c.ok; ++i) {
    Word a = random_word(), b = random_word(), g = random_word();
    NailSet s(mask_dist(rng));
    c.expect(concat(concat(a, b), g) == concat(a, concat(b, g)),
             "associativity");
    c.expect(concat(a, Word{}) == a && concat(Word{}, a) == a, "identity");
    c.expect(concat(a, invert(a)).empty(), "inverse");
    c.expect(invert(concat(a, b)) == concat(invert(b), invert(a)),
             "anti-homomorphism");
    c.expect(Word::reduce(a.letters()) == a, "idempotence");
    c.expect(restrict(concat(a, b), s) ==
                 concat(restrict(a, s), restrict(b, s)),
             "restrict/concat");
    c.expect(restrict(invert(a), s) == invert(restrict(a, s)),
             "restrict/invert");
    c.expect(restrict(commutator(a, b), s) ==
                 commutator(restrict(a, s), restrict(b, s)),
             "restrict/commutator");
    c.expect(commutator(a, b) == invert(commutator(b, a)), "antisymmetry");
    for (std::uint64_t bits : {std::uint64_t{1}, std::uint64_t{5}})
      c.expect(restrict(concat(concat(g, a), invert(g)), NailSet(bits))
                       .empty() == restrict(a, NailSet(bits)).empty(),
               "conjugation");
  }
  double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + "s");
  std::ostringstream os;
  os << 3 * rounds << " random words in " << secs << "s";
  detail = c.ok ? os.str() : c.detail;
  return c.ok;
}

bool criterion2(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CheckList c;
  int cells = 0;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      auto r = demaine_split(k, n, VerifyMode::full);
      ++cells;
      c.expect(r.verdict && r.verdict->ok,
               "cell k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  double secs = seconds_since(t0);
  c.expect(cells == 36, "expected 36 cells");
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + "s");
  detail = c.ok ? "36 cells full-mode ok in " + std::to_string(secs) + "s"
                : c.detail;
  return c.ok;
}

bool criterion3(std::string& detail) {
  CheckList c;
  for (int i = 2; i <= 6; ++i)
    c.expect(demaine_split(2, 1 << i, VerifyMode::none).unreduced ==
                 l2_closed_form(i),
             "construction mismatch at i=" + std::to_string(i));
  c.expect(l2_closed_form(2) == 32, "i=2 value");
  c.expect(l2_closed_form(10) == 157048832, "i=10 value");
  std::int64_t iterate = 32;
  for (int i = 3; i <= 10; ++i) {
    iterate = 6 * iterate + 2 * (std::int64_t{1} << (2 * i));
    c.expect(l2_closed_form(i) == iterate,
             "recurrence mismatch at i=" + std::to_string(i));
  }
  detail = c.ok ? "construction equals closed form for i=2..6; arithmetic to i=10"
                : c.detail;
  return c.ok;
}

bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  CheckList c;
  const std::int64_t expected[] = {0, 24, 96, 288, 768};
  for (int i = 1; i <= 5; ++i) {
    auto r = wastlund_corank2(1 << i, i <= 3 ? VerifyMode::full
                                             : VerifyMode::essential);
    c.expect(r.reduced == r.unreduced,
             "reduction occurred at i=" + std::to_string(i));
    c.expect(r.reduced == expected[i - 1],
             "length mismatch at i=" + std::to_string(i));
    c.expect(r.verdict && r.verdict->ok,
             "solve failed at i=" + std::to_string(i));
  }
  double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + std::to_string(secs) + "s");
  detail = c.ok ? "lengths 0,24,96,288,768 exact; all verdicts ok ("
                + std::to_string(secs) + "s)"
                : c.detail;
  return c.ok;
}

bool criterion5(std::string& detail) {
  CheckList c;
  auto ladder = extension_ladder();
  const int expected[] = {24, 22, 20, 18};
  c.expect(ladder.size() == 4, "ladder size");
  for (size_t i = 0; i < ladder.size() && i < 4; ++i)
    c.expect(ladder[i].length == expected[i],
             ladder[i].orientation + " length " +
                 std::to_string(ladder[i].length));
  Word w18 = ladder.back().word;
  c.expect(format_word(w18) == "1+2+3-1-2-3+4+2+1-2-1+3+1+2-3-2-1-4",
           "length-18 word differs");

  std::vector<int> four = {1, 2, 3, 4};
  Word bal = flatten(balanced_k1(four)).word;
  Word h5 = extend(2, w18, bal, 5);
  std::int64_t unreduced5 = 2 * w18.length() + bal.length() + 2;
  c.expect(unreduced5 == 58,
           "n=5 unreduced is " + std::to_string(unreduced5) + ", not 58");
  c.expect(h5.length() == 54,
           "n=5 reduced is " + std::to_string(h5.length()) + ", not 54");
  c.expect(solves(h5, Spec::threshold(2, 5), CheckMode::full).ok,
           "n=5 word fails 2-of-5");
  detail = c.ok ? "ladder 24/22/20/18, exact length-18 word, n=5 step ok"
                : c.detail;
  return c.ok;
}

bool criterion6(std::string& detail) {
  CheckList c;
  struct Pin {
    const char* name;
    std::int64_t unreduced, reduced;
    bool check_unreduced, check_reduced;
  };
  const Pin pins[] = {
      {"demaine80", 80, 68, true, true},
      {"dropped52", 0, 52, false, true},
      {"atoms44", 0, 44, false, true},
      {"huffman-good32", 32, 0, true, false},
      {"huffman-bad44", 44, 0, true, false},
  };
  for (const auto& p : pins) {
    auto r = catalog_entry(p.name);
    if (p.check_unreduced)
      c.expect(r.unreduced == p.unreduced, std::string(p.name) + " unreduced");
    if (p.check_reduced)
      c.expect(r.reduced == p.reduced, std::string(p.name) + " reduced");
    c.expect(r.verdict && r.verdict->ok, std::string(p.name) + " verdict");
  }

  auto audit =
      node_vanish_audit(catalog_entry("demaine80").expr, Spec::threshold(2, 4));
  bool collapse_34 = false;
  for (const auto& e : audit.harmless_collapses)
    if (e.removal == NailSet::of({3, 4}) && e.path == "lr") collapse_34 = true;
  c.expect(collapse_34, "missing harmless {3,4} collapse");
  bool hang_vanish = false;
  for (const auto& e : audit.violations)
    if (e.removal.size() <= 1) hang_vanish = true;
  c.expect(audit.violations.empty() && !hang_vanish,
           "vanishing node at a hang removal");
  detail = c.ok ? "catalog lengths pinned; audit clean with the {3,4} collapse"
                : c.detail;
  return c.ok;
}

bool criterion7(std::string& detail) {
  CheckList c;
  // Elimination below length 14 is quick even single-threaded.
  auto t0 = std::chrono::steady_clock::now();
  SearchOptions single;
  for (int len = 8; len <= 12; len += 2)
    c.expect(search_length(Spec::threshold(2, 4), len, single)
                 .solutions.empty(),
             "2-of-4 solutions below 14");
  double elim = seconds_since(t0);
  c.expect(elim < 60.0, "elimination took " + std::to_string(elim) + "s");

  SearchOptions opts;
  opts.allow_long = true;
  opts.threads = 2;

  auto m23 = find_minimum(Spec::threshold(2, 3), 10, opts);
  c.expect(m23.found && m23.min_length == 6 && m23.solutions.size() == 1,
           "2-of-3 minimum");
  auto m13 = find_minimum(Spec::threshold(1, 3), 12, opts);
  c.expect(m13.found && m13.min_length == 10 && m13.solutions.size() == 1,
           "1-of-3 minimum");
  auto m14 = find_minimum(Spec::threshold(1, 4), 18, opts);
  c.expect(m14.found && m14.min_length == 16 && m14.solutions.size() == 1,
           "1-of-4 minimum");
  if (m14.found && !m14.solutions.empty()) {
    std::vector<int> four = {1, 2, 3, 4};
    c.expect(equivalent(m14.solutions[0].word,
                        flatten(balanced_k1(four)).word),
             "1-of-4 solution class");
  }

  auto m24 = find_minimum(Spec::threshold(2, 4), 18, opts);
  c.expect(m24.found && m24.min_length == 16, "2-of-4 minimum");
  c.expect(m24.solutions.size() == 2, "2-of-4 class count");
  if (m24.solutions.size() == 2) {
    Word w1 = parse_word("1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4");
    Word w2 = parse_word("1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4");
    bool direct = equivalent(m24.solutions[0].word, w1) &&
                  equivalent(m24.solutions[1].word, w2);
    bool swapped = equivalent(m24.solutions[0].word, w2) &&
                   equivalent(m24.solutions[1].word, w1);
    c.expect(direct || swapped, "2-of-4 classes differ from w1/w2");
  }
  std::ostringstream os;
  os << "minima 6/10/16/16 with class counts 1/1/1/2 ("
     << m24.nodes + m14.nodes << " nodes)";
  detail = c.ok ? os.str() : c.detail;
  return c.ok;
}

bool criterion8(std::string& detail) {
  CheckList c;
  auto t0 = std::chrono::steady_clock::now();
  SearchOptions single;
  single.allow_long = true;
  auto full = search_length(Spec::threshold(2, 4), 14, single);
  double secs = seconds_since(t0);
  c.expect(full.solutions.empty(), "length-14 solutions found");
  c.expect(!full.aborted, "length-14 run aborted");
  c.expect(secs < 1800.0, "runtime " + std::to_string(secs) + "s");

  std::vector<CanonicalWord> merged;
  for (int id = 0; id < 8; ++id) {
    SearchOptions o;
    o.allow_long = true;
    o.shards = 8;
    o.shard_id = id;
    auto part = search_length(Spec::threshold(2, 4), 14, o);
    c.expect(!part.aborted, "shard aborted");
    merged.insert(merged.end(), part.solutions.begin(), part.solutions.end());
  }
  c.expect(merged == full.solutions, "sharded outcome differs");
  std::ostringstream os;
  os << "length 14 empty in " << secs << "s single-threaded; 8-shard merge identical";
  detail = c.ok ? os.str() : c.detail;
  return c.ok;
}

bool criterion9(std::string& detail) {
  CheckList c;
  std::ostringstream gaps;
  for (int k = 2; k <= 4; ++k) {
    auto rows = length_table(k, 13);
    double prev_gap = -1;
    int checked = 0;
    for (const auto& row : rows) {
      if (!row.ratio || row.i > 13) continue;
      double gap = std::abs(*row.ratio - 6.0);
      if (prev_gap >= 0) {
        c.expect(gap < prev_gap, "k=" + std::to_string(k) +
                                     " gap not decreasing at i=" +
                                     std::to_string(row.i));
        ++checked;
      }
      prev_gap = gap;
    }
    c.expect(checked >= 8, "k=" + std::to_string(k) + " too few ratios");
    gaps << (k > 2 ? ", " : "") << "k=" << k << " down to "
         << std::setprecision(3) << prev_gap;
  }
  detail = c.ok ? "|L_k(2n)/L_k(n) - 6| strictly decreasing (" + gaps.str() + ")"
                : c.detail;
  return c.ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "word property suites (1e5 random words, <10s)", criterion1},
      {2, "split validity matrix k<=n<=8, full mode", criterion2},
      {3, "k=2 closed-form agreement", criterion3},
      {4, "co-rank-2 exactness and validity", criterion4},
      {5, "extension ladder and the n=5 step", criterion5},
      {6, "catalog regression and node-vanish audit", criterion6},
      {7, "search minima and class counts", criterion7},
      {8, "length-14 elimination, single and 8-shard", criterion8},
      {9, "length-ratio convergence to 6 for k=2,3,4", criterion9},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    std::cout << "CRITERION " << c.id << " [" << c.title << "]: "
              << (ok ? "PASS" : "FAIL") << " - " << detail << " ("
              << std::fixed << secs << "s)" << std::endl;
    if (!ok) ++failures;
  }
  if (failures)
    std::cout << failures << " criterion(s) failed" << std::endl;
  else
    std::cout << "all criteria passed" << std::endl;
  return failures;
}
