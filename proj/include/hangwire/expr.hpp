#pragma once

// Ordered expression trees over signed nail letters: leaves, n-ary sums,
// negation, and commutators [a,b] = a + b - a - b. Unlike Word, an Expr
// preserves the pre-reduction symbol count: a commutator doubles both of
// its arguments, so a leaf at depth d in a commutator tree contributes
// 2^d letters before any free reduction.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hangwire/word.hpp"

namespace hangwire {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  struct Zero {};
  struct Leaf {
    int letter;  // signed nail index
  };
  struct Sum {
    std::vector<ExprPtr> terms;  // ordered
  };
  struct Neg {
    ExprPtr child;
  };
  struct Comm {
    ExprPtr lhs, rhs;
  };
  using Node = std::variant<Zero, Leaf, Sum, Neg, Comm>;

  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

 private:
  Node node_;
};

namespace expr {

ExprPtr zero();
ExprPtr leaf(int letter);
ExprPtr sum(std::vector<ExprPtr> terms);  // drops zeros, collapses singleton
ExprPtr neg(ExprPtr child);
ExprPtr comm(ExprPtr lhs, ExprPtr rhs);

// Word as a flat sum of signed leaves.
ExprPtr from_word(const Word& w);

}  // namespace expr

// Letters the expression expands to before free reduction
// (symbol_count([a,b]) = 2*(symbol_count(a) + symbol_count(b))).
std::int64_t symbol_count(const ExprPtr& e);

struct Flattened {
  Word word;                 // reduced expansion
  std::int64_t symbol_count;  // pre-reduction letter count
};

Flattened flatten(const ExprPtr& e);

// "[a,b]" for commutators, "+"/"-" for sums and negation.
std::string format_expr(const ExprPtr& e);

}  // namespace hangwire
