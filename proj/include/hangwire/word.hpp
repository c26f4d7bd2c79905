#pragma once

// Exact arithmetic in the free group on nail generators, in additive
// notation: a word is a freely reduced sequence of signed nail indices.
// +j means "around nail j", -j its inverse. The empty word is 0.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hangwire {

inline constexpr int kMaxNail = 64;

// Subset of nails {1..64} as a bitmask. Bit j-1 represents nail j.
class NailSet {
 public:
  constexpr NailSet() = default;
  constexpr explicit NailSet(std::uint64_t bits) : bits_(bits) {}

  static NailSet of(std::initializer_list<int> nails) {
    NailSet s;
    for (int n : nails) s = s.with(n);
    return s;
  }
  // The full universe {1..n}.
  static constexpr NailSet full(int n) {
    return NailSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int nail) const {
    return (bits_ >> (nail - 1)) & 1u;
  }
  constexpr NailSet with(int nail) const {
    return NailSet(bits_ | (std::uint64_t{1} << (nail - 1)));
  }
  constexpr NailSet without(int nail) const {
    return NailSet(bits_ & ~(std::uint64_t{1} << (nail - 1)));
  }
  constexpr int size() const { return __builtin_popcountll(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(NailSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      v.push_back(__builtin_ctzll(b) + 1);
    return v;
  }

  friend constexpr NailSet operator|(NailSet a, NailSet b) {
    return NailSet(a.bits_ | b.bits_);
  }
  friend constexpr NailSet operator&(NailSet a, NailSet b) {
    return NailSet(a.bits_ & b.bits_);
  }
  friend constexpr auto operator<=>(NailSet a, NailSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Letter rank for lexicographic comparisons: +1 < -1 < +2 < -2 < ...
constexpr int letter_rank(int letter) {
  return letter > 0 ? 2 * letter - 2 : -2 * letter - 1;
}

struct WordAnalysis;

// A freely reduced word. Immutable after construction; the only way to
// build one from raw letters is reduce(), which cancels adjacent
// mutually inverse letters in a single stack pass.
class Word {
 public:
  Word() = default;

  static Word reduce(std::span<const int> letters);
  static Word reduce(std::initializer_list<int> letters) {
    return reduce(std::span<const int>(letters.begin(), letters.size()));
  }

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct AlreadyReduced {};
  Word(AlreadyReduced, std::vector<int> letters)
      : letters_(std::move(letters)) {}

  std::vector<int> letters_;

  friend Word invert(const Word&);
  friend Word concat(const Word&, const Word&);
  friend Word restrict(const Word&, NailSet);
  friend WordAnalysis analyze(const Word&);
};

// Reverses the sequence and flips every sign: -(x + y) = -y - x.
Word invert(const Word& w);

// Reduced juxtaposition; associative with identity 0.
Word concat(const Word& a, const Word& b);

// [a,b] = a + b - a - b.
Word commutator(const Word& a, const Word& b);

// Deletes every letter whose nail is in `removed`, then reduces
// ("setting those nails to 0"). A group homomorphism.
Word restrict(const Word& w, NailSet removed);

struct WordAnalysis {
  NailSet support;
  std::array<int, kMaxNail + 1> net_exponent;  // indexed by nail
  Word cyclic_reduced;
};

// Support, per-nail net exponents, and the cyclic reduction (matching
// conjugating prefix/suffix stripped).
WordAnalysis analyze(const Word& w);

// True when a precedes b in the +1 < -1 < +2 < -2 < ... letter order.
bool canonical_less(const Word& a, const Word& b);

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

// Text form: "1+2-1-2". Leading sign optional, whitespace tolerated,
// nail indices in 1..64. parse_word(format_word(w)) == w.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

}  // namespace hangwire
