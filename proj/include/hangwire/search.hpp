#pragma once

// Symmetry-quotiented exhaustive search for minimum-length solutions.
//
// Candidate words are quotiented by four symmetries that map solutions
// of a threshold puzzle to solutions: nail relabeling, per-nail sign
// flip, inversion, and cyclic rotation. The canonical representative of
// a class is the lexicographically least relabel/sign-normalized form
// over all rotations of the word and of its inversion, under the letter
// order +1 < -1 < +2 < -2 < ...

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hangwire/spec.hpp"
#include "hangwire/word.hpp"

namespace hangwire {

struct CanonicalWord {
  Word word;
  int nails = 0;  // distinct nails used
  friend bool operator==(const CanonicalWord&, const CanonicalWord&) = default;
};

// Class representative of a nonzero word (cyclically reduced first).
CanonicalWord canonical_form(const Word& w);

// True iff a and b lie in the same symmetry class.
bool equivalent(const Word& a, const Word& b);

struct SearchOptions {
  int shards = 1;
  int shard_id = 0;
  int threads = 1;
  // Enumeration subtrees are partitioned by generated prefixes of this
  // depth; the partition is exact, so shard outcomes merge without
  // deduplication.
  int prefix_depth = 4;
  std::uint64_t node_budget = ~std::uint64_t{0};
  // Runs at length >= 14 on four or more nails refuse to start without
  // this flag.
  bool allow_long = false;
  // Invoked with the node count roughly every progress_stride nodes.
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_stride = 1'000'000'000;
};

struct SearchOutcome {
  std::string spec;
  int length = 0;
  std::vector<CanonicalWord> solutions;  // lexicographic order
  std::uint64_t nodes = 0;
  double seconds = 0;
  bool aborted = false;
  std::string abort_reason;
  int shards = 1;
  int shard_id = 0;
};

// Enumerates the canonical cyclically reduced words of exactly the given
// length over the puzzle's nails and returns those that solve it.
SearchOutcome search_length(const Spec& f, int length,
                            const SearchOptions& options = {});

struct MinimumOutcome {
  std::string spec;
  bool found = false;
  int min_length = 0;
  int searched_up_to = 0;  // largest length eliminated when !found
  std::vector<CanonicalWord> solutions;
  std::uint64_t nodes = 0;
  double seconds = 0;
  bool aborted = false;
  std::string abort_reason;
};

// Ascends through admissible lengths (even only when k < n, since every
// nail then needs net exponent zero) and stops at the first length with
// solutions.
MinimumOutcome find_minimum(const Spec& f, int max_length,
                            const SearchOptions& options = {});

}  // namespace hangwire
