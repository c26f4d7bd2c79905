#pragma once

// Construction families for k-of-n puzzles with exact length accounting:
// chains for the k=n and k=n-1 cases, balanced commutator trees for k=1,
// binary splitting with Huffman-placed commutator trees for general k,
// the co-rank-2 recursion, one-step extension, and a catalog of concrete
// 2-of-4 exhibits.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hangwire/expr.hpp"
#include "hangwire/spec.hpp"
#include "hangwire/word.hpp"

namespace hangwire {

struct ConstructionReport {
  std::string method;
  int k = 0;
  int n = 0;
  ExprPtr expr;
  Word word;
  std::int64_t unreduced = 0;  // symbol count before free reduction
  std::int64_t reduced = 0;    // length of the flattened word
  std::optional<Verdict> verdict;
};

enum class VerifyMode { none, full, essential, automatic };

// 1 + 2 + ... + n; solves n-of-n.
Word chain(int n);
// 1 + ... + n - 1 - ... - n; solves (n-1)-of-n.
Word chain_updown(int n);

ExprPtr chain_expr(std::span<const int> nails);
ExprPtr chain_updown_expr(std::span<const int> nails);

// Recursive commutator over halves (first ceil(m/2) against the rest);
// solves 1-of-m, with length exactly m^2 when m is a power of two.
ExprPtr balanced_k1(std::span<const int> nails);

// Repeatedly merges the two shortest items into a commutator
// (shorter-first); `lengths` are the items' symbol counts. Ties prefer
// the earlier item, and merged nodes queue behind existing ones.
ExprPtr huffman_tree(std::vector<std::pair<ExprPtr, std::int64_t>> items);

// Unreduced length of the binary-splitting construction, lengths only
// (no words materialized); memoized internally.
std::int64_t split_length(int k, std::int64_t n);

// Binary splitting with Huffman commutator trees over the disjuncts
// "at least j removed in the left half and at least k-j in the right".
ConstructionReport demaine_split(int k, std::span<const int> nails,
                                 VerifyMode verify = VerifyMode::automatic);
ConstructionReport demaine_split(int k, int n,
                                 VerifyMode verify = VerifyMode::automatic);

// (8/3)*6^i - 4*4^i, the closed form of the k=2 split length on 2^i
// nails; exact integer arithmetic, i >= 2.
std::int64_t l2_closed_form(int i);

// Co-rank-2 recursion on a power-of-two nail set: disjoint-support
// structure, so the word reduces to exactly 6*(i-1)*2^i letters; solves
// Demaine (n-2)-of-n.
ConstructionReport wastlund_corank2(std::span<const int> nails,
                                    VerifyMode verify = VerifyMode::automatic);
ConstructionReport wastlund_corank2(int n,
                                    VerifyMode verify = VerifyMode::automatic);

// One-step extension A + n + B - A - n: turns a k-of-(n-1) solution A
// and a (k-1)-of-(n-1) solution B into a k-of-n solution. When
// `verify_inputs` is set, A and B are checked against their puzzles
// first.
Word extend(int k, const Word& A, const Word& B, int new_nail,
            bool verify_inputs = false);

struct LadderEntry {
  std::string orientation;  // the 1-of-3 block, e.g. "[[2,1],3]"
  ExprPtr hang1;
  Word word;  // the extended 2-of-4 solution
  int length = 0;
};

// The four documented 1-of-3 orientations for the 2-of-4 extension,
// lengths 24, 22, 20, 18.
std::vector<LadderEntry> extension_ladder();

// Balanced 1-of-m tree over `nails` with per-node argument order chosen
// to maximize free reduction at the junction with invert(A); greedy
// instrumentation for extension steps beyond the documented n=4 case.
ExprPtr best_extension_orientation(const Word& A, std::span<const int> nails);

// Extension tower bottoming out at chains and balanced trees, using the
// greedy orientation at each step.
ConstructionReport extension_construct(int k, int n,
                                       VerifyMode verify = VerifyMode::automatic);

struct NodeVanishAudit {
  struct Event {
    std::string path;  // root "/", then 'l'/'r' per commutator argument
    NailSet removal;
  };
  // Internal commutator nodes vanishing where the specification hangs:
  // exactly the failures of the tree to realize its disjunction.
  std::vector<Event> violations;
  // Nodes vanishing at a fall set although neither argument vanished; a
  // harmless don't-care.
  std::vector<Event> harmless_collapses;
};

// Evaluates every commutator node of `tree` under every removal subset
// (n <= 12).
NodeVanishAudit node_vanish_audit(const ExprPtr& tree, const Spec& f);

// Named 2-of-4 exhibits: demaine80, reoriented58, reoriented54,
// dropped52, atoms44, huffman-good32, huffman-bad44, extension24,
// extension22, extension20, extension18, optimal16-w1, optimal16-w2.
ConstructionReport catalog_entry(std::string_view name);
std::vector<std::string> catalog_names();

struct LengthTableRow {
  int i = 0;
  std::int64_t n = 0;
  std::int64_t length = 0;
  // length / previous row's length; absent on the first row.
  std::optional<double> ratio;
};

// Unreduced split lengths L_k(2^i) for i up to i_max, with successive
// ratios (they approach 6 for every k >= 2).
std::vector<LengthTableRow> length_table(int k, int i_max);

}  // namespace hangwire
