#pragma once

// The Weyl group W(C2), dihedral of order 8, with words over {a, b}
// standing for the reflections w_a, w_b.

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sp4bg/sp4.hpp"

namespace sp4bg {

using WeylWord = std::string;

/// Reduced words of the 8 elements, indexed 0..7.
inline constexpr std::array<std::string_view, 8> weyl_reduced_words = {"", "a", "b", "ab", "ba", "aba", "bab", "abab"};

inline const WeylWord longest_word = "abab";

namespace detail {

inline int letter_gen(char c) {
  if (c == 'a') return 0;
  if (c == 'b') return 1;
  fail(errc::parse_error, std::string("Weyl letters are a and b, got '") + c + "'");
}

// The permutation of the 8 roots induced by a word (signs dropped).
inline std::array<Root, 8> weyl_root_perm(std::string_view word) {
  std::array<Root, 8> perm = all_roots;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int g = letter_gen(*it);
    for (auto& r : perm) r = sign_table(g, r).image;
  }
  return perm;
}

}  // namespace detail

/// Index 0..7 of the group element a word represents.
inline int weyl_index(std::string_view word) {
  auto perm = detail::weyl_root_perm(word);
  for (int i = 0; i < 8; ++i)
    if (detail::weyl_root_perm(weyl_reduced_words[i]) == perm) return i;
  fail(errc::invalid_argument, "unreachable Weyl element");
}

inline WeylWord weyl_reduce(std::string_view word) { return WeylWord(weyl_reduced_words[weyl_index(word)]); }

inline int weyl_length(std::string_view word) {
  return static_cast<int>(weyl_reduced_words[weyl_index(word)].size());
}

struct WeylEntry {
  WeylWord word;
  int length;
};

inline std::vector<WeylEntry> weyl_enumerate() {
  std::vector<WeylEntry> out;
  for (auto w : weyl_reduced_words) out.push_back({WeylWord(w), static_cast<int>(w.size())});
  return out;
}

/// Action w(phi) with the sign of w~ e_phi(t) w~^-1 = e_{w(phi)}(sign t), where
/// w~ is the product of the lifts w_a(1), w_b(1) along the given letters.
inline SignEntry weyl_act(std::string_view word, Root phi) {
  SignEntry acc{phi, 1};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    SignEntry e = sign_table(detail::letter_gen(*it), acc.image);
    acc = {e.image, acc.sign * e.sign};
  }
  return acc;
}

/// Product of the lifts w_a(1), w_b(1) along the letters as written.
inline SpMatrix weyl_lift(std::string_view word, const RingId& ring) {
  SpMatrix m = SpMatrix::identity(ring);
  RingElem one = RingElem::one(ring);
  for (char c : word) m *= weyl_elem(detail::letter_gen(c) == 0 ? Root::a : Root::b, one);
  return m;
}

/// Lift of the reduced word of w.
inline SpMatrix weyl_lift_reduced(std::string_view word, const RingId& ring) {
  return weyl_lift(weyl_reduce(word), ring);
}

}  // namespace sp4bg
