#include "hangwire/word.hpp"

#include <cctype>

namespace hangwire {

namespace {

void check_letter(int x) {
  if (x == 0) throw std::invalid_argument("letter 0 is not a nail");
  if (x > kMaxNail || x < -kMaxNail)
    throw std::invalid_argument("nail index exceeds " +
                                std::to_string(kMaxNail));
}

}  // namespace

Word Word::reduce(std::span<const int> letters) {
  std::vector<int> stack;
  stack.reserve(letters.size());
  for (int x : letters) {
    check_letter(x);
    if (!stack.empty() && stack.back() == -x)
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return Word(AlreadyReduced{}, std::move(stack));
}

Word invert(const Word& w) {
  std::vector<int> out;
  out.reserve(w.letters_.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it)
    out.push_back(-*it);
  return Word(Word::AlreadyReduced{}, std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<int> out = a.letters_;
  for (int x : b.letters_) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(Word::AlreadyReduced{}, std::move(out));
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(invert(a), invert(b)));
}

Word restrict(const Word& w, NailSet removed) {
  std::vector<int> out;
  out.reserve(w.letters_.size());
  for (int x : w.letters_) {
    if (removed.contains(x > 0 ? x : -x)) continue;
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(Word::AlreadyReduced{}, std::move(out));
}

WordAnalysis analyze(const Word& w) {
  WordAnalysis r;
  r.net_exponent.fill(0);
  for (int x : w.letters_) {
    int nail = x > 0 ? x : -x;
    r.support = r.support.with(nail);
    r.net_exponent[static_cast<size_t>(nail)] += x > 0 ? 1 : -1;
  }
  // Strip matching conjugating end pairs: w = g + core - g.
  size_t i = 0, j = w.letters_.size();
  while (j - i >= 2 && w.letters_[i] == -w.letters_[j - 1]) {
    ++i;
    --j;
  }
  r.cyclic_reduced =
      Word(Word::AlreadyReduced{},
           std::vector<int>(w.letters_.begin() + static_cast<long>(i),
                            w.letters_.begin() + static_cast<long>(j)));
  return r;
}

bool canonical_less(const Word& a, const Word& b) {
  const auto& x = a.letters();
  const auto& y = b.letters();
  size_t n = std::min(x.size(), y.size());
  for (size_t i = 0; i < n; ++i) {
    int rx = letter_rank(x[i]), ry = letter_rank(y[i]);
    if (rx != ry) return rx < ry;
  }
  return x.size() < y.size();
}

Word parse_word(std::string_view text) {
  std::vector<int> letters;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+') {
      ++i;
    } else if (text[i] == '-') {
      sign = -1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected nail index", i);
    size_t start = i;
    long value = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > kMaxNail)
        throw ParseError("nail index exceeds " + std::to_string(kMaxNail),
                         start);
      ++i;
    }
    if (value == 0) throw ParseError("0 is not a nail", start);
    letters.push_back(sign * static_cast<int>(value));
    skip_ws();
    first = false;
  }
  return Word::reduce(letters);
}

std::string format_word(const Word& w) {
  std::string out;
  bool first = true;
  for (int x : w.letters()) {
    if (x < 0)
      out += '-';
    else if (!first)
      out += '+';
    out += std::to_string(x < 0 ? -x : x);
    first = false;
  }
  return out;
}

}  // namespace hangwire
