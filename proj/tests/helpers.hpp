#pragma once

// Shared test utilities: seeded random words and independent oracles
// kept deliberately separate from the library implementations they
// check.

#include <algorithm>
#include <random>
#include <vector>

#include "hangwire/word.hpp"

namespace hangwire::testing {

inline std::vector<int> random_letters(std::mt19937& rng, int max_nail,
                                       int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> nail_dist(1, max_nail);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int len = len_dist(rng);
  std::vector<int> letters;
  letters.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i)
    letters.push_back(nail_dist(rng) * (sign_dist(rng) ? 1 : -1));
  return letters;
}

inline Word random_word(std::mt19937& rng, int max_nail, int max_len) {
  return Word::reduce(random_letters(rng, max_nail, max_len));
}

// Oracle reducer: repeatedly erase one randomly chosen adjacent inverse
// pair until none remain. Confluence says the result matches the
// single-pass stack reduction whatever order the pairs go.
inline std::vector<int> reduce_random_order(std::vector<int> letters,
                                            std::mt19937& rng) {
  while (true) {
    std::vector<size_t> sites;
    for (size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i] == -letters[i + 1]) sites.push_back(i);
    if (sites.empty()) return letters;
    std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
    size_t at = sites[pick(rng)];
    letters.erase(letters.begin() + static_cast<long>(at),
                  letters.begin() + static_cast<long>(at) + 2);
  }
}

// Oracle cyclic reduction: strip equal-and-opposite end pairs.
inline std::vector<int> strip_conjugating_pairs(std::vector<int> letters) {
  while (letters.size() >= 2 && letters.front() == -letters.back()) {
    letters.erase(letters.begin());
    letters.pop_back();
  }
  return letters;
}

}  // namespace hangwire::testing
