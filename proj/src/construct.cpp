#include "hangwire/construct.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace hangwire {

namespace {

constexpr std::int64_t kMaxMaterializedLength = 8'000'000;

std::vector<int> iota_nails(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

void check_nails(std::span<const int> nails) {
  if (nails.empty()) throw std::invalid_argument("empty nail set");
  for (int j : nails)
    if (j < 1 || j > kMaxNail)
      throw std::invalid_argument("nail index out of range");
}

std::optional<Verdict> run_verify(const Word& w, const Spec& f,
                                  VerifyMode mode) {
  CheckMode m;
  if (mode == VerifyMode::full) {
    m = CheckMode::full;
  } else if (mode == VerifyMode::essential) {
    m = CheckMode::essential;
  } else if (f.nails() <= 10) {
    m = CheckMode::full;
  } else {
    // Essential checking costs (#essential sets) * word length; skip
    // verification rather than stall when that blows up.
    int n = f.nails(), k = f.is_threshold() ? f.demaine_k() : 0;
    double sets = 1;
    for (int j = 0; j < k; ++j) sets *= double(n - j) / (j + 1);
    double cost = sets * (1 + double(k) / std::max(1, n - k + 1)) *
                  double(std::max<std::int64_t>(1, w.length()));
    if (cost > 2e9) return std::nullopt;
    m = CheckMode::essential;
  }
  return solves(w, f, m);
}

ConstructionReport make_report(std::string method, int k, int n, ExprPtr expr,
                               VerifyMode verify) {
  ConstructionReport r;
  r.method = std::move(method);
  r.k = k;
  r.n = n;
  r.expr = std::move(expr);
  Flattened flat = flatten(r.expr);
  r.word = std::move(flat.word);
  r.unreduced = flat.symbol_count;
  r.reduced = r.word.length();
  if (verify != VerifyMode::none)
    r.verdict = run_verify(r.word, Spec::threshold(k, n), verify);
  return r;
}

}  // namespace

Word chain(int n) {
  if (n < 1) throw std::invalid_argument("chain needs n >= 1");
  return flatten(chain_expr(iota_nails(n))).word;
}

Word chain_updown(int n) {
  if (n < 2) throw std::invalid_argument("chain_updown needs n >= 2");
  return flatten(chain_updown_expr(iota_nails(n))).word;
}

ExprPtr chain_expr(std::span<const int> nails) {
  check_nails(nails);
  std::vector<ExprPtr> terms;
  terms.reserve(nails.size());
  for (int j : nails) terms.push_back(expr::leaf(j));
  return expr::sum(std::move(terms));
}

ExprPtr chain_updown_expr(std::span<const int> nails) {
  check_nails(nails);
  std::vector<ExprPtr> terms;
  terms.reserve(2 * nails.size());
  for (int j : nails) terms.push_back(expr::leaf(j));
  for (int j : nails) terms.push_back(expr::leaf(-j));
  return expr::sum(std::move(terms));
}

ExprPtr balanced_k1(std::span<const int> nails) {
  check_nails(nails);
  if (nails.size() == 1) return expr::leaf(nails[0]);
  size_t half = (nails.size() + 1) / 2;
  return expr::comm(balanced_k1(nails.subspan(0, half)),
                    balanced_k1(nails.subspan(half)));
}

ExprPtr huffman_tree(std::vector<std::pair<ExprPtr, std::int64_t>> items) {
  if (items.empty()) throw std::invalid_argument("huffman_tree needs items");
  struct Item {
    ExprPtr expr;
    std::int64_t length;
    std::size_t id;  // insertion order; ties prefer the earlier item
  };
  std::vector<Item> pool;
  pool.reserve(items.size());
  std::size_t next_id = 0;
  for (auto& [e, len] : items) pool.push_back({std::move(e), len, next_id++});

  auto smallest = [&pool]() {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (pool[i].length < pool[best].length ||
          (pool[i].length == pool[best].length && pool[i].id < pool[best].id))
        best = i;
    }
    return best;
  };

  while (pool.size() > 1) {
    std::size_t ai = smallest();
    Item a = std::move(pool[ai]);
    pool.erase(pool.begin() + static_cast<long>(ai));
    std::size_t bi = smallest();
    Item b = std::move(pool[bi]);
    pool.erase(pool.begin() + static_cast<long>(bi));
    pool.push_back({expr::comm(std::move(a.expr), std::move(b.expr)),
                    2 * (a.length + b.length), next_id++});
  }
  return pool.front().expr;
}

namespace {

// Lengths-only mirror of the split construction. Intermediate sums run
// in 128-bit so oversized tables fail loudly instead of wrapping.
std::int64_t split_length_memo(int k, std::int64_t n,
                               std::map<std::pair<int, std::int64_t>,
                                        std::int64_t>& memo) {
  if (k < 1 || k > n) throw std::invalid_argument("split_length: k out of range");
  if (k == n) return n;
  if (k == 1) {
    // Balanced commutator tree length.
    if (n == 1) return 1;
    std::int64_t half = (n + 1) / 2;
    return 2 * (split_length_memo(1, half, memo) +
                split_length_memo(1, n - half, memo));
  }
  if (k == n - 1) return 2 * n;
  auto it = memo.find({k, n});
  if (it != memo.end()) return it->second;

  std::int64_t n1 = (n + 1) / 2, n2 = n - n1;
  int jlo = std::max<std::int64_t>(0, k - n2);
  int jhi = static_cast<int>(std::min<std::int64_t>(k, n1));
  std::vector<unsigned __int128> pool;
  for (int j = jlo; j <= jhi; ++j) {
    if (j == 0)
      pool.push_back(static_cast<unsigned __int128>(
          split_length_memo(k, n2, memo)));
    else if (j == k)
      pool.push_back(static_cast<unsigned __int128>(
          split_length_memo(k, n1, memo)));
    else
      pool.push_back(
          static_cast<unsigned __int128>(split_length_memo(j, n1, memo)) +
          static_cast<unsigned __int128>(split_length_memo(k - j, n2, memo)));
  }
  // Huffman cost over the disjunct lengths: merge the two smallest,
  // doubling both.
  while (pool.size() > 1) {
    std::sort(pool.begin(), pool.end(), std::greater<>());
    unsigned __int128 a = pool.back();
    pool.pop_back();
    unsigned __int128 b = pool.back();
    pool.pop_back();
    pool.push_back(2 * (a + b));
  }
  if (pool.front() >
      static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max()))
    throw std::invalid_argument("split length exceeds 64-bit range");
  std::int64_t result = static_cast<std::int64_t>(pool.front());
  memo[{k, n}] = result;
  return result;
}

ExprPtr split_build(int k, std::span<const int> nails) {
  int n = static_cast<int>(nails.size());
  if (k == n) return chain_expr(nails);
  if (k == 1) return balanced_k1(nails);
  if (k == n - 1) return chain_updown_expr(nails);

  int n1 = (n + 1) / 2, n2 = n - n1;
  auto left = nails.subspan(0, static_cast<size_t>(n1));
  auto right = nails.subspan(static_cast<size_t>(n1));
  int jlo = std::max(0, k - n2);
  int jhi = std::min(k, n1);
  std::vector<std::pair<ExprPtr, std::int64_t>> disjuncts;
  for (int j = jlo; j <= jhi; ++j) {
    ExprPtr e;
    if (j == 0)
      e = split_build(k, right);
    else if (j == k)
      e = split_build(k, left);
    else
      e = expr::sum({split_build(j, left), split_build(k - j, right)});
    std::int64_t len = symbol_count(e);
    disjuncts.emplace_back(std::move(e), len);
  }
  return huffman_tree(std::move(disjuncts));
}

}  // namespace

std::int64_t split_length(int k, std::int64_t n) {
  std::map<std::pair<int, std::int64_t>, std::int64_t> memo;
  return split_length_memo(k, n, memo);
}

ConstructionReport demaine_split(int k, std::span<const int> nails,
                                 VerifyMode verify) {
  check_nails(nails);
  int n = static_cast<int>(nails.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("demaine_split needs 1 <= k <= n");
  if (split_length(k, n) > kMaxMaterializedLength)
    throw std::invalid_argument("construction too large to materialize");
  return make_report("split", k, n, split_build(k, nails), verify);
}

ConstructionReport demaine_split(int k, int n, VerifyMode verify) {
  auto nails = iota_nails(n);
  return demaine_split(k, nails, verify);
}

std::int64_t l2_closed_form(int i) {
  if (i < 2) throw std::invalid_argument("l2_closed_form needs i >= 2");
  if (i > 23) throw std::invalid_argument("l2_closed_form overflows past i = 23");
  // (8/3)*6^i - 4*4^i  ==  16*6^(i-1) - 4^(i+1), exactly.
  std::int64_t p6 = 1;
  for (int t = 0; t < i - 1; ++t) p6 *= 6;
  std::int64_t p4 = 1;
  for (int t = 0; t < i + 1; ++t) p4 *= 4;
  return 16 * p6 - p4;
}

namespace {

// Cross commutators are oriented updown-first; the opposite order makes
// the second cross end in the inverse of the first letter of the right
// recursive half, and the junction would reduce.
ExprPtr corank2_build(std::span<const int> nails) {
  if (nails.size() == 2) return expr::zero();
  size_t half = nails.size() / 2;
  auto left = nails.subspan(0, half);
  auto right = nails.subspan(half);
  return expr::sum({corank2_build(left),
                    expr::comm(chain_updown_expr(right), chain_expr(left)),
                    expr::comm(chain_expr(right), chain_updown_expr(left)),
                    corank2_build(right)});
}

}  // namespace

ConstructionReport wastlund_corank2(std::span<const int> nails,
                                    VerifyMode verify) {
  check_nails(nails);
  size_t n = nails.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("co-rank-2 recursion needs a power-of-two nail count");
  ConstructionReport r;
  r.method = "wastlund";
  r.k = static_cast<int>(n) - 2;
  r.n = static_cast<int>(n);
  r.expr = corank2_build(nails);
  Flattened flat = flatten(r.expr);
  r.word = std::move(flat.word);
  r.unreduced = flat.symbol_count;
  r.reduced = r.word.length();
  if (verify != VerifyMode::none)
    r.verdict = run_verify(r.word, Spec::threshold(r.k, r.n), verify);
  return r;
}

ConstructionReport wastlund_corank2(int n, VerifyMode verify) {
  auto nails = iota_nails(n);
  return wastlund_corank2(nails, verify);
}

Word extend(int k, const Word& A, const Word& B, int new_nail,
            bool verify_inputs) {
  if (new_nail < 1 || new_nail > kMaxNail)
    throw std::invalid_argument("nail index out of range");
  NailSet old = analyze(A).support | analyze(B).support;
  if (old.contains(new_nail))
    throw std::invalid_argument("new nail already used by A or B");
  if (verify_inputs) {
    int n1 = 0;
    for (int j : old.to_vector()) n1 = std::max(n1, j);
    if (!solves(A, Spec::threshold(k, n1), CheckMode::full).ok)
      throw std::invalid_argument("A does not solve the k-of-(n-1) puzzle");
    if (!solves(B, Spec::threshold(k - 1, n1), CheckMode::full).ok)
      throw std::invalid_argument("B does not solve the (k-1)-of-(n-1) puzzle");
  }
  Word nail = Word::reduce({new_nail});
  return concat(concat(concat(concat(A, nail), B), invert(A)), invert(nail));
}

std::vector<LadderEntry> extension_ladder() {
  using namespace expr;
  Word A = chain_updown(3);
  std::vector<std::pair<std::string, ExprPtr>> orientations = {
      {"[1,[2,3]]", comm(leaf(1), comm(leaf(2), leaf(3)))},
      {"[[1,2],3]", comm(comm(leaf(1), leaf(2)), leaf(3))},
      {"[1,[3,2]]", comm(leaf(1), comm(leaf(3), leaf(2)))},
      {"[[2,1],3]", comm(comm(leaf(2), leaf(1)), leaf(3))},
  };
  std::vector<LadderEntry> out;
  for (auto& [label, tree] : orientations) {
    Word w = extend(2, A, flatten(tree).word, 4);
    out.push_back({label, tree, w, w.length()});
  }
  return out;
}

namespace {

// All per-node argument orders of the balanced tree (2^(m-1) candidates
// for m nails), in a fixed enumeration order.
void orientation_candidates(std::span<const int> nails, std::vector<ExprPtr>& out) {
  if (nails.size() == 1) {
    out = {expr::leaf(nails[0])};
    return;
  }
  size_t half = (nails.size() + 1) / 2;
  std::vector<ExprPtr> lefts, rights;
  orientation_candidates(nails.subspan(0, half), lefts);
  orientation_candidates(nails.subspan(half), rights);
  out.clear();
  for (const auto& l : lefts)
    for (const auto& r : rights) {
      out.push_back(expr::comm(l, r));
      out.push_back(expr::comm(r, l));
    }
}

int junction_cancellation(const Word& b, const Word& inv_a) {
  int limit = std::min(b.length(), inv_a.length());
  int pairs = 0;
  while (pairs < limit && b[b.length() - 1 - pairs] == -inv_a[pairs]) ++pairs;
  return pairs;
}

}  // namespace

ExprPtr best_extension_orientation(const Word& A, std::span<const int> nails) {
  check_nails(nails);
  std::vector<ExprPtr> candidates;
  orientation_candidates(nails, candidates);
  Word inv_a = invert(A);
  ExprPtr best;
  int best_score = -1;
  for (const auto& c : candidates) {
    int score = junction_cancellation(flatten(c).word, inv_a);
    if (score > best_score) {
      best_score = score;
      best = c;
    }
  }
  return best;
}

namespace {

Word extension_word(int k, int n) {
  if (k == n) return chain(n);
  if (k == 1) return flatten(balanced_k1(iota_nails(n))).word;
  if (k == n - 1) return chain_updown(n);
  Word A = extension_word(k, n - 1);
  Word B;
  if (k - 1 == 1) {
    B = flatten(best_extension_orientation(A, iota_nails(n - 1))).word;
  } else {
    B = extension_word(k - 1, n - 1);
  }
  return extend(k, A, B, n);
}

}  // namespace

ConstructionReport extension_construct(int k, int n, VerifyMode verify) {
  if (n < 1 || n > 16)
    throw std::invalid_argument("extension tower limited to n <= 16");
  if (k < 1 || k > n)
    throw std::invalid_argument("extension needs 1 <= k <= n");
  ConstructionReport r;
  r.method = "extension";
  r.k = k;
  r.n = n;
  r.word = extension_word(k, n);
  r.expr = expr::from_word(r.word);
  r.unreduced = r.word.length();
  r.reduced = r.word.length();
  if (verify != VerifyMode::none)
    r.verdict = run_verify(r.word, Spec::threshold(k, n), verify);
  return r;
}

namespace {

struct AuditNode {
  std::string path;
  Word word;
  Word lhs_word, rhs_word;
};

void collect_comm_nodes(const ExprPtr& e, const std::string& path,
                        std::vector<AuditNode>& out) {
  const auto& node = e->node();
  if (const auto* c = std::get_if<Expr::Comm>(&node)) {
    out.push_back({path.empty() ? "/" : path, flatten(e).word,
                   flatten(c->lhs).word, flatten(c->rhs).word});
    collect_comm_nodes(c->lhs, path + "l", out);
    collect_comm_nodes(c->rhs, path + "r", out);
    return;
  }
  if (const auto* s = std::get_if<Expr::Sum>(&node)) {
    for (size_t i = 0; i < s->terms.size(); ++i)
      collect_comm_nodes(s->terms[i], path + "s" + std::to_string(i), out);
    return;
  }
  if (const auto* n = std::get_if<Expr::Neg>(&node))
    collect_comm_nodes(n->child, path + "n", out);
}

}  // namespace

NodeVanishAudit node_vanish_audit(const ExprPtr& tree, const Spec& f) {
  if (f.nails() > 12)
    throw std::invalid_argument("node_vanish_audit limited to n <= 12");
  std::vector<AuditNode> nodes;
  collect_comm_nodes(tree, "", nodes);

  NodeVanishAudit audit;
  std::uint64_t full = NailSet::full(f.nails()).bits();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t s = 0; s <= full; ++s) masks.push_back(s);
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });

  for (std::uint64_t s : masks) {
    NailSet S(s);
    bool hang = f.hangs(S);
    for (const auto& node : nodes) {
      if (!restrict(node.word, S).empty()) continue;
      if (hang) {
        audit.violations.push_back({node.path, S});
      } else if (!restrict(node.lhs_word, S).empty() &&
                 !restrict(node.rhs_word, S).empty()) {
        audit.harmless_collapses.push_back({node.path, S});
      }
    }
  }
  return audit;
}

namespace {

ExprPtr pair_sum(int a, int b) {
  return expr::sum({expr::leaf(a), expr::leaf(b)});
}

ExprPtr demaine_tree() {
  using namespace expr;
  return comm(comm(pair_sum(1, 2), comm(pair_sum(1, 3), pair_sum(1, 4))),
              comm(pair_sum(2, 3), comm(pair_sum(2, 4), pair_sum(3, 4))));
}

ConstructionReport catalog_report(const std::string& name, ExprPtr e) {
  ConstructionReport r = make_report("catalog:" + name, 2, 4, std::move(e),
                                     VerifyMode::full);
  return r;
}

ConstructionReport catalog_word(const std::string& name, const Word& w) {
  return catalog_report(name, expr::from_word(w));
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"demaine80",  "reoriented58", "reoriented54", "dropped52",
          "atoms44",    "huffman-good32", "huffman-bad44", "extension24",
          "extension22", "extension20",  "extension18",  "optimal16-w1",
          "optimal16-w2"};
}

ConstructionReport catalog_entry(std::string_view name) {
  using namespace expr;
  std::string key(name);
  if (key == "demaine80") return catalog_report(key, demaine_tree());
  if (key == "reoriented58")
    return catalog_report(
        key, comm(comm(pair_sum(1, 2), comm(pair_sum(3, 1), pair_sum(4, 1))),
                  comm(pair_sum(3, 2), comm(pair_sum(2, 4), pair_sum(3, 4)))));
  if (key == "reoriented54")
    return catalog_report(
        key, comm(comm(comm(pair_sum(2, 1), pair_sum(3, 1)), pair_sum(3, 4)),
                  comm(pair_sum(4, 1), comm(pair_sum(3, 2), pair_sum(4, 2)))));
  if (key == "dropped52")
    return catalog_report(
        key, comm(comm(pair_sum(1, 2), comm(pair_sum(1, 3), pair_sum(1, 4))),
                  comm(pair_sum(2, 3), pair_sum(2, 4))));
  if (key == "atoms44") {
    std::vector<int> n134 = {1, 3, 4}, n234 = {2, 3, 4};
    return catalog_report(
        key, comm(comm(pair_sum(1, 2), chain_updown_expr(n134)),
                  chain_updown_expr(n234)));
  }
  if (key == "huffman-good32" || key == "huffman-bad44") {
    ExprPtr cross = sum({comm(leaf(1), leaf(2)), comm(leaf(3), leaf(4))});
    ExprPtr good = comm(comm(pair_sum(1, 2), pair_sum(3, 4)), cross);
    ExprPtr bad = comm(comm(pair_sum(1, 2), cross), pair_sum(3, 4));
    return catalog_report(key, key == "huffman-good32" ? good : bad);
  }
  if (key.starts_with("extension")) {
    for (const auto& entry : extension_ladder()) {
      if (key == "extension" + std::to_string(entry.length)) {
        ConstructionReport r;
        r.method = "catalog:" + key;
        r.k = 2;
        r.n = 4;
        Word A = chain_updown(3);
        r.expr = sum({from_word(A), leaf(4), entry.hang1, neg(from_word(A)),
                      leaf(-4)});
        r.word = entry.word;
        r.unreduced = symbol_count(r.expr);
        r.reduced = r.word.length();
        r.verdict = solves(r.word, Spec::threshold(2, 4), CheckMode::full);
        return r;
      }
    }
    throw std::invalid_argument("unknown catalog entry '" + key + "'");
  }
  if (key == "optimal16-w1")
    return catalog_word(key, parse_word("1+2-1-2+3+4+2+1-4-3+4+3-2-1-3-4"));
  if (key == "optimal16-w2")
    return catalog_word(key, parse_word("1+2-1+3-2+4+2+1-4-3+4-2+3-1-3-4"));
  throw std::invalid_argument("unknown catalog entry '" + key + "'");
}

std::vector<LengthTableRow> length_table(int k, int i_max) {
  if (k < 1) throw std::invalid_argument("length_table needs k >= 1");
  if (i_max > 20)
    throw std::invalid_argument("length_table limited to i <= 20");
  std::map<std::pair<int, std::int64_t>, std::int64_t> memo;
  std::vector<LengthTableRow> rows;
  for (int i = 0; i <= i_max; ++i) {
    std::int64_t n = std::int64_t{1} << i;
    if (n < k) continue;
    LengthTableRow row;
    row.i = i;
    row.n = n;
    row.length = split_length_memo(k, n, memo);
    if (!rows.empty())
      row.ratio = static_cast<double>(row.length) /
                  static_cast<double>(rows.back().length);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hangwire
