#pragma once

// Monotone puzzle specifications: a map from removal subsets to
// {hang, fall} that is monotone (removing more nails never restores the
// picture) and falls at the full set. A word solves a specification when
// it vanishes under exactly the removals at which the specification
// falls.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hangwire/word.hpp"

namespace hangwire {

enum class Convention {
  demaine,   // k-of-n falls iff at least k nails are removed
  wastlund,  // k-of-n hangs iff at least k nails remain
};

// Demaine's k-of-n = Wastlund's (n-k+1)-of-n; involutive.
// Valid inputs: 0 <= k <= n+1 (Demaine 0-of-n falls everywhere and is
// solved by the empty word; Wastlund n+1-of-n is the same puzzle).
int translate_k(int k, int n);

class Spec {
 public:
  static Spec threshold(int k, int n, Convention c = Convention::demaine);
  // `fall` indexed by subset bitmask, size 2^n, n <= 20. Must be
  // monotone and fall at the full set.
  static Spec table(int n, std::vector<bool> fall);

  int nails() const { return n_; }
  bool falls(NailSet removed) const;
  bool hangs(NailSet removed) const { return !falls(removed); }

  bool is_threshold() const;
  // Threshold parameters; demaine_k() is the convention-normalized k.
  int threshold_k() const;
  Convention convention() const;
  int demaine_k() const;

  std::string text() const;  // "2-of-4" / "3-of-4@wastlund" / "table-on-5"

 private:
  struct Threshold {
    int k;
    Convention conv;
  };
  struct Table {
    std::vector<bool> fall;
  };

  Spec(int n, std::variant<Threshold, Table> kind)
      : n_(n), kind_(std::move(kind)) {}

  int n_;
  std::variant<Threshold, Table> kind_;
};

// "K-of-N" with optional "@demaine" (default) or "@wastlund".
Spec parse_spec(std::string_view text);

enum class CheckMode { full, essential };

struct Verdict {
  bool ok = true;
  CheckMode mode = CheckMode::full;
  // Populated for failures: the first offending removal in
  // size-ascending then numeric order.
  NailSet counterexample;
  bool expected_fall = false;
  Word got;
};

// Removals whose verification suffices by monotone closure. For a
// Demaine-threshold k-of-n: all size-k subsets must fall, all size-(k-1)
// subsets must hang. For tables: minimal fall sets and maximal hang
// sets.
struct EssentialRemovals {
  std::vector<NailSet> must_fall;
  std::vector<NailSet> must_hang;
};
EssentialRemovals essential_removals(const Spec& f);

// Checks restrict(w, S) == 0 iff f falls at S; full mode enumerates all
// 2^n subsets (n <= 20), essential mode only the essential removals.
Verdict solves(const Word& w, const Spec& f, CheckMode mode);

enum class SpecOp { conjunction, disjunction };

// Pointwise min/max in the hang < fall order; result is a table spec on
// the common universe.
Spec combine(const Spec& f1, const Spec& f2, SpecOp op);

// True iff some superset S' of S has falls(f1, S') != falls(f2, S').
bool separates_above(const Spec& f1, const Spec& f2, NailSet S);

}  // namespace hangwire
