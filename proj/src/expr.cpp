#include "hangwire/expr.hpp"

namespace hangwire {

namespace expr {

ExprPtr zero() {
  static const ExprPtr z = std::make_shared<const Expr>(Expr::Zero{});
  return z;
}

ExprPtr leaf(int letter) {
  if (letter == 0) throw std::invalid_argument("letter 0 is not a nail");
  return std::make_shared<const Expr>(Expr::Leaf{letter});
}

ExprPtr sum(std::vector<ExprPtr> terms) {
  std::vector<ExprPtr> kept;
  kept.reserve(terms.size());
  for (auto& t : terms)
    if (!std::holds_alternative<Expr::Zero>(t->node())) kept.push_back(t);
  if (kept.empty()) return zero();
  if (kept.size() == 1) return kept.front();
  return std::make_shared<const Expr>(Expr::Sum{std::move(kept)});
}

ExprPtr neg(ExprPtr child) {
  return std::make_shared<const Expr>(Expr::Neg{std::move(child)});
}

ExprPtr comm(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr::Comm{std::move(lhs), std::move(rhs)});
}

ExprPtr from_word(const Word& w) {
  std::vector<ExprPtr> terms;
  terms.reserve(static_cast<size_t>(w.length()));
  for (int x : w) terms.push_back(leaf(x));
  return sum(std::move(terms));
}

}  // namespace expr

std::int64_t symbol_count(const ExprPtr& e) {
  struct Visitor {
    std::int64_t operator()(const Expr::Zero&) const { return 0; }
    std::int64_t operator()(const Expr::Leaf&) const { return 1; }
    std::int64_t operator()(const Expr::Sum& s) const {
      std::int64_t total = 0;
      for (const auto& t : s.terms) total += symbol_count(t);
      return total;
    }
    std::int64_t operator()(const Expr::Neg& n) const {
      return symbol_count(n.child);
    }
    std::int64_t operator()(const Expr::Comm& c) const {
      return 2 * (symbol_count(c.lhs) + symbol_count(c.rhs));
    }
  };
  return std::visit(Visitor{}, e->node());
}

namespace {

// Emits the expansion; `negated` distributes through the structure with
// the order reversal -(x + y) = -y - x, and -[a,b] = [b,a].
void emit(const ExprPtr& e, bool negated, std::vector<int>& out) {
  const auto& node = e->node();
  if (std::holds_alternative<Expr::Zero>(node)) return;
  if (const auto* l = std::get_if<Expr::Leaf>(&node)) {
    out.push_back(negated ? -l->letter : l->letter);
    return;
  }
  if (const auto* s = std::get_if<Expr::Sum>(&node)) {
    if (!negated)
      for (const auto& t : s->terms) emit(t, false, out);
    else
      for (auto it = s->terms.rbegin(); it != s->terms.rend(); ++it)
        emit(*it, true, out);
    return;
  }
  if (const auto* n = std::get_if<Expr::Neg>(&node)) {
    emit(n->child, !negated, out);
    return;
  }
  const auto& c = std::get<Expr::Comm>(node);
  const ExprPtr& a = negated ? c.rhs : c.lhs;
  const ExprPtr& b = negated ? c.lhs : c.rhs;
  emit(a, false, out);
  emit(b, false, out);
  emit(a, true, out);
  emit(b, true, out);
}

}  // namespace

Flattened flatten(const ExprPtr& e) {
  std::vector<int> letters;
  std::int64_t count = symbol_count(e);
  letters.reserve(static_cast<size_t>(count));
  emit(e, false, letters);
  return Flattened{Word::reduce(letters), count};
}

namespace {

void format(const ExprPtr& e, std::string& out, bool inside_sum) {
  const auto& node = e->node();
  if (std::holds_alternative<Expr::Zero>(node)) {
    out += '0';
    return;
  }
  if (const auto* l = std::get_if<Expr::Leaf>(&node)) {
    out += std::to_string(l->letter);
    return;
  }
  if (const auto* s = std::get_if<Expr::Sum>(&node)) {
    if (inside_sum) out += '(';
    bool first = true;
    for (const auto& t : s->terms) {
      bool neg_leaf = false;
      if (const auto* tl = std::get_if<Expr::Leaf>(&t->node()))
        neg_leaf = tl->letter < 0;
      if (!first && !neg_leaf) out += '+';
      format(t, out, true);
      first = false;
    }
    if (inside_sum) out += ')';
    return;
  }
  if (const auto* n = std::get_if<Expr::Neg>(&node)) {
    out += '-';
    bool paren = !std::holds_alternative<Expr::Comm>(n->child->node());
    if (paren) out += '(';
    format(n->child, out, false);
    if (paren) out += ')';
    return;
  }
  const auto& c = std::get<Expr::Comm>(node);
  out += '[';
  format(c.lhs, out, false);
  out += ',';
  format(c.rhs, out, false);
  out += ']';
}

}  // namespace

std::string format_expr(const ExprPtr& e) {
  std::string out;
  format(e, out, false);
  return out;
}

}  // namespace hangwire
