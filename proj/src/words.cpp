#include "polydist/words.hpp"

#include <algorithm>
#include <charconv>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DomainError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

void check_letter(const Alphabet& alphabet, Letter letter) {
  if (letter.is_y() && letter.y_index() >= alphabet.level) {
    throw AlphabetMismatchError("letter Y" + std::to_string(letter.y_index()) + " out of range at level " +
                                std::to_string(alphabet.level));
  }
}

}  // namespace

std::string_view flavor_name(Flavor flavor) { return flavor == Flavor::standard ? "std" : "tilde"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "std" || text == "standard") return Flavor::standard;
  if (text == "tilde") return Flavor::tilde;
  throw DomainError("unknown flavor '" + std::string(text) + "'");
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters) : alphabet_(alphabet), letters_(std::move(letters)) {
  if (alphabet_.level == 0) throw DomainError("alphabet level must be positive");
  for (const Letter l : letters_) check_letter(alphabet_, l);
}

Word Word::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos || text.substr(0, 2) != "n=") {
    throw DomainError("word must look like 'n=2,std:Y0.X', got '" + std::string(text) + "'");
  }
  const auto head = text.substr(2, colon - 2);
  const auto comma = head.find(',');
  if (comma == std::string_view::npos) throw DomainError("missing flavor in '" + std::string(text) + "'");
  Alphabet alphabet{parse_uint(head.substr(0, comma), "level"), parse_flavor(head.substr(comma + 1))};
  if (alphabet.level == 0) throw DomainError("alphabet level must be positive");
  return parse_letters(alphabet, text.substr(colon + 1));
}

Word Word::parse_letters(Alphabet alphabet, std::string_view letters) {
  Word w(alphabet);
  if (letters == "1" || letters.empty()) return w;
  std::size_t pos = 0;
  while (pos <= letters.size()) {
    const auto dot = letters.find('.', pos);
    const auto token = letters.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (token == "X") {
      w.push_back(Letter::x());
    } else if (token == "Y" && alphabet.level == 1) {
      w.push_back(Letter::y(0));
    } else if (token.size() >= 2 && token[0] == 'Y') {
      w.push_back(Letter::y(parse_uint(token.substr(1), "Y index")));
    } else {
      throw DomainError("bad letter '" + std::string(token) + "'");
    }
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return w;
}

std::size_t Word::y_count() const {
  std::size_t c = 0;
  for (const Letter l : letters_) c += l.is_y() ? 1 : 0;
  return c;
}

Word Word::concat(const Word& other) const {
  if (alphabet_ != other.alphabet_) throw AlphabetMismatchError("concatenating words over different alphabets");
  Word out(*this);
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

void Word::push_back(Letter letter) {
  check_letter(alphabet_, letter);
  letters_.push_back(letter);
}

std::string Word::letters_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) out += '.';
    out += letters_[i].is_x() ? std::string("X") : "Y" + std::to_string(letters_[i].y_index());
  }
  return out;
}

std::string Word::to_string() const {
  return "n=" + std::to_string(alphabet_.level) + "," + std::string(flavor_name(alphabet_.flavor)) + ":" +
         letters_string();
}

bool operator<(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  if (a.letters_ != b.letters_) return a.letters_ < b.letters_;
  return a.alphabet_ < b.alphabet_;
}

std::size_t wt_x(const Word& w) { return w.size() - w.y_count(); }

Word reduce_mod_r(const Word& w, std::uint32_t r) {
  if (r == 0 || w.alphabet().level % r != 0) {
    throw DomainError("level " + std::to_string(w.alphabet().level) + " is not a multiple of " + std::to_string(r));
  }
  Word out(Alphabet{r, w.alphabet().flavor});
  for (const Letter l : w.letters()) out.push_back(l.is_x() ? l : Letter::y(l.y_index() % r));
  return out;
}

std::vector<Word> enumerate_lifts(const Word& w, std::uint32_t n) {
  if (n == 0) throw DomainError("lift factor must be positive");
  const std::uint32_t r = w.alphabet().level;
  const Alphabet target{r * n, w.alphabet().flavor};
  std::vector<Word> out{Word(target)};
  for (const Letter l : w.letters()) {
    std::vector<Word> next;
    next.reserve(out.size() * (l.is_x() ? 1 : n));
    for (const Word& prefix : out) {
      if (l.is_x()) {
        next.push_back(prefix);
        next.back().push_back(l);
        continue;
      }
      for (std::uint32_t k = 0; k < n; ++k) {
        next.push_back(prefix);
        next.back().push_back(Letter::y(l.y_index() + k * r));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> all_words(Alphabet alphabet, std::size_t max_degree) {
  std::vector<Word> out{Word(alphabet)};
  std::size_t layer_begin = 0;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (std::uint16_t code = 0; code < alphabet.letter_count(); ++code) {
        Word w = out[i];
        w.push_back(Letter::from_code(code));
        out.push_back(std::move(w));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace polydist
