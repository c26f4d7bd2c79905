#include "hangwire/spec.hpp"

#include <algorithm>

namespace hangwire {

namespace {

constexpr int kMaxTableNails = 20;

void check_universe(int n) {
  if (n < 1 || n > kMaxNail)
    throw std::invalid_argument("nail count must be in 1.." +
                                std::to_string(kMaxNail));
}

// All size-s subsets of {1..n} in ascending numeric (mask) order.
void append_subsets_of_size(int n, int s, std::vector<NailSet>& out) {
  if (s < 0 || s > n) return;
  if (s == 0) {
    out.emplace_back(0);
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  std::uint64_t limit = NailSet::full(n).bits();
  while (mask <= limit) {
    out.emplace_back(mask);
    // Gosper's hack: next mask with the same popcount.
    std::uint64_t c = mask & -mask;
    std::uint64_t r = mask + c;
    if (r < mask || r > limit) break;  // r < mask: wrapped past 2^64
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

int translate_k(int k, int n) {
  check_universe(n);
  if (k < 0 || k > n + 1)
    throw std::invalid_argument("threshold k out of range 0.." +
                                std::to_string(n + 1));
  return n - k + 1;
}

Spec Spec::threshold(int k, int n, Convention c) {
  check_universe(n);
  int dk = c == Convention::demaine ? k : translate_k(k, n);
  if (dk < 0 || dk > n)
    throw std::invalid_argument("threshold k out of range");
  return Spec(n, Threshold{k, c});
}

Spec Spec::table(int n, std::vector<bool> fall) {
  check_universe(n);
  if (n > kMaxTableNails)
    throw std::invalid_argument("table specs limited to n <= 20");
  if (fall.size() != (std::size_t{1} << n))
    throw std::invalid_argument("table size must be 2^n");
  std::uint64_t full = NailSet::full(n).bits();
  if (!fall[full])
    throw std::invalid_argument("specification must fall at the full set");
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (!fall[s]) continue;
    for (int j = 0; j < n; ++j) {
      std::uint64_t t = s | (std::uint64_t{1} << j);
      if (!fall[t])
        throw std::invalid_argument("specification is not monotone");
    }
  }
  return Spec(n, Table{std::move(fall)});
}

bool Spec::falls(NailSet removed) const {
  if (const auto* t = std::get_if<Threshold>(&kind_)) {
    if (t->conv == Convention::demaine) return removed.size() >= t->k;
    // Wastlund: hangs iff at least k nails remain.
    return n_ - removed.size() < t->k;
  }
  return std::get<Table>(kind_).fall[removed.bits()];
}

bool Spec::is_threshold() const {
  return std::holds_alternative<Threshold>(kind_);
}

int Spec::threshold_k() const { return std::get<Threshold>(kind_).k; }

Convention Spec::convention() const { return std::get<Threshold>(kind_).conv; }

int Spec::demaine_k() const {
  const auto& t = std::get<Threshold>(kind_);
  return t.conv == Convention::demaine ? t.k : translate_k(t.k, n_);
}

std::string Spec::text() const {
  if (const auto* t = std::get_if<Threshold>(&kind_)) {
    std::string s = std::to_string(t->k) + "-of-" + std::to_string(n_);
    if (t->conv == Convention::wastlund) s += "@wastlund";
    return s;
  }
  return "table-on-" + std::to_string(n_);
}

Spec parse_spec(std::string_view text) {
  Convention conv = Convention::demaine;
  auto at = text.find('@');
  if (at != std::string_view::npos) {
    std::string_view suffix = text.substr(at + 1);
    if (suffix == "demaine")
      conv = Convention::demaine;
    else if (suffix == "wastlund")
      conv = Convention::wastlund;
    else
      throw std::invalid_argument("unknown convention suffix '" +
                                  std::string(suffix) + "'");
    text = text.substr(0, at);
  }
  auto sep = text.find("-of-");
  if (sep == std::string_view::npos)
    throw std::invalid_argument("expected K-of-N puzzle form");
  auto to_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("expected integer in puzzle");
    long v = 0;
    for (char c : s) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("expected integer in puzzle");
      v = v * 10 + (c - '0');
      if (v > 1000000) throw std::invalid_argument("puzzle number too large");
    }
    return static_cast<int>(v);
  };
  int k = to_int(text.substr(0, sep));
  int n = to_int(text.substr(sep + 4));
  return Spec::threshold(k, n, conv);
}

EssentialRemovals essential_removals(const Spec& f) {
  EssentialRemovals r;
  int n = f.nails();
  if (f.is_threshold()) {
    int k = f.demaine_k();
    append_subsets_of_size(n, k, r.must_fall);
    append_subsets_of_size(n, k - 1, r.must_hang);
    return r;
  }
  // Table: minimal fall sets and maximal hang sets.
  std::uint64_t full = NailSet::full(n).bits();
  for (std::uint64_t s = 0; s <= full; ++s) {
    NailSet S(s);
    if (f.falls(S)) {
      bool minimal = true;
      for (int j = 1; j <= n && minimal; ++j)
        if (S.contains(j) && f.falls(S.without(j))) minimal = false;
      if (minimal) r.must_fall.push_back(S);
    } else {
      bool maximal = true;
      for (int j = 1; j <= n && maximal; ++j)
        if (!S.contains(j) && !f.falls(S.with(j))) maximal = false;
      if (maximal) r.must_hang.push_back(S);
    }
  }
  auto by_size_then_value = [](NailSet a, NailSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  };
  std::sort(r.must_fall.begin(), r.must_fall.end(), by_size_then_value);
  std::sort(r.must_hang.begin(), r.must_hang.end(), by_size_then_value);
  return r;
}

namespace {

Verdict check_one(const Word& w, const Spec& f, NailSet S, CheckMode mode) {
  Word rest = restrict(w, S);
  bool vanished = rest.empty();
  bool should_fall = f.falls(S);
  if (vanished == should_fall) return Verdict{true, mode, {}, false, {}};
  return Verdict{false, mode, S, should_fall, std::move(rest)};
}

}  // namespace

Verdict solves(const Word& w, const Spec& f, CheckMode mode) {
  int n = f.nails();
  NailSet universe = NailSet::full(n);
  if (!analyze(w).support.subset_of(universe))
    throw std::invalid_argument("word mentions nails outside the universe");

  if (mode == CheckMode::full) {
    if (n > kMaxTableNails)
      throw std::invalid_argument("full-mode check limited to n <= 20");
    for (int size = 0; size <= n; ++size) {
      std::vector<NailSet> subsets;
      append_subsets_of_size(n, size, subsets);
      for (NailSet S : subsets) {
        Verdict v = check_one(w, f, S, mode);
        if (!v.ok) return v;
      }
    }
    return Verdict{true, mode, {}, false, {}};
  }

  EssentialRemovals ess = essential_removals(f);
  std::vector<NailSet> all;
  all.reserve(ess.must_fall.size() + ess.must_hang.size());
  all.insert(all.end(), ess.must_hang.begin(), ess.must_hang.end());
  all.insert(all.end(), ess.must_fall.begin(), ess.must_fall.end());
  std::sort(all.begin(), all.end(), [](NailSet a, NailSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  for (NailSet S : all) {
    Verdict v = check_one(w, f, S, mode);
    if (!v.ok) return v;
  }
  return Verdict{true, mode, {}, false, {}};
}

Spec combine(const Spec& f1, const Spec& f2, SpecOp op) {
  if (f1.nails() != f2.nails())
    throw std::invalid_argument("combine requires a common universe");
  int n = f1.nails();
  if (n > kMaxTableNails)
    throw std::invalid_argument("combine result limited to n <= 20");
  std::vector<bool> fall(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < fall.size(); ++s) {
    bool a = f1.falls(NailSet(s)), b = f2.falls(NailSet(s));
    fall[s] = op == SpecOp::conjunction ? (a && b) : (a || b);
  }
  return Spec::table(n, std::move(fall));
}

bool separates_above(const Spec& f1, const Spec& f2, NailSet S) {
  if (f1.nails() != f2.nails())
    throw std::invalid_argument("separates_above requires a common universe");
  std::uint64_t rest = NailSet::full(f1.nails()).bits() & ~S.bits();
  std::uint64_t c = rest;
  while (true) {
    NailSet sup(S.bits() | c);
    if (f1.falls(sup) != f2.falls(sup)) return true;
    if (c == 0) break;
    c = (c - 1) & rest;
  }
  return false;
}

}  // namespace hangwire
