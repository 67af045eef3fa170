#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace polydist {

/// Standard letters X_n, Y_{i,n} or the homogenized tilde letters 𝒳_n, 𝒴_{s,n}.
/// Both share one combinatorics; only the morphisms acting on them differ.
enum class Flavor : std::uint8_t { standard, tilde };

std::string_view flavor_name(Flavor flavor);
Flavor parse_flavor(std::string_view text);

/// Level n and flavor of an alphabet {X_n, Y_{0,n}, ..., Y_{n-1,n}}.
struct Alphabet {
  std::uint32_t level = 1;
  Flavor flavor = Flavor::standard;

  std::uint32_t letter_count() const { return level + 1; }
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;
};

/// Letter code: 0 is X, s + 1 is Y_s.
class Letter {
 public:
  static constexpr Letter x() { return Letter(0); }
  static constexpr Letter y(std::uint32_t index) { return Letter(index + 1); }
  static constexpr Letter from_code(std::uint16_t code) { return Letter(code); }

  constexpr bool is_x() const { return code_ == 0; }
  constexpr bool is_y() const { return code_ != 0; }
  constexpr std::uint32_t y_index() const { return code_ - 1U; }
  constexpr std::uint16_t code() const { return code_; }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  constexpr explicit Letter(std::uint32_t code) : code_(static_cast<std::uint16_t>(code)) {}
  std::uint16_t code_;
};

/// Finite word over an alphabet. Ordered length-lexicographically so that
/// series iterate deterministically.
class Word {
 public:
  Word() = default;
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  /// Parses "n=6,std:Y0.X.X.Y2"; the empty word is written "1".
  static Word parse(std::string_view text);
  /// Parses the letters part only ("Y0.X") against a known alphabet; bare "Y" means Y0 at level 1.
  static Word parse_letters(Alphabet alphabet, std::string_view letters);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::size_t y_count() const;

  Word concat(const Word& other) const;
  void push_back(Letter letter);

  /// "Y0.X.X" (or "1" for the empty word).
  std::string letters_string() const;
  /// "n=3,std:Y0.X.X"
  std::string to_string() const;

  friend bool operator==(const Word& a, const Word& b) = default;
  friend bool operator<(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

/// Number of X letters in w.
std::size_t wt_x(const Word& w);

/// w mod r: X_{rn} -> X_r, Y_{j,rn} -> Y_{j mod r, r}. Requires r | level.
Word reduce_mod_r(const Word& w, std::uint32_t r);

/// All words u at level r·n with (u mod r) = w, in canonical order.
std::vector<Word> enumerate_lifts(const Word& w, std::uint32_t n);

/// Every word over the alphabet of length at most max_degree, in canonical order.
std::vector<Word> all_words(Alphabet alphabet, std::size_t max_degree);

}  // namespace polydist
