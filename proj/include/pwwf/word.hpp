#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwwf {

// Parse failure in textual input; position is a 0-based offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos)),
        position(pos) {}
};

inline bool is_letter(char ch) { return ch == 'a' || ch == 'b' || ch == 'c'; }

// Finite word over the alphabet {a, b, c}.
class Word {
 public:
  Word() = default;
  explicit Word(std::string text) : text_(std::move(text)) {
    for (std::size_t i = 0; i < text_.size(); ++i)
      if (!is_letter(text_[i]))
        throw ParseError(std::string("invalid letter '") + text_[i] + "'", i);
  }

  const std::string& str() const { return text_; }
  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  char operator[](std::size_t i) const { return text_[i]; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

  friend Word operator+(const Word& lhs, const Word& rhs) {
    Word out;
    out.text_ = lhs.text_ + rhs.text_;
    return out;
  }

 private:
  std::string text_;
};

inline std::size_t count_letter(const Word& w, char letter) {
  return static_cast<std::size_t>(
      std::count(w.str().begin(), w.str().end(), letter));
}

inline Word rotate_left(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  return Word(w.str().substr(k) + w.str().substr(0, k));
}

inline Word reverse(const Word& w) {
  return Word(std::string(w.str().rbegin(), w.str().rend()));
}

// Letter projection: every occurrence of `from` becomes `to`.
inline Word project_word(const Word& w, char from, char to) {
  std::string out = w.str();
  std::replace(out.begin(), out.end(), from, to);
  return Word(out);
}

inline std::vector<char> letters_used(const Word& w) {
  std::vector<char> out;
  for (char ch : {'a', 'b', 'c'})
    if (count_letter(w, ch) > 0) out.push_back(ch);
  return out;
}

// Distinct rotations, starting from w itself.  Empty words have no rotations.
inline std::vector<Word> conjugacy_class(const Word& w) {
  if (w.empty()) throw std::domain_error("conjugacy class of the empty word");
  std::vector<Word> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r = rotate_left(w, k);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

inline Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k)
    best = std::min(best, rotate_left(w, k));
  return best;
}

inline bool is_primitive(const Word& w) {
  return !w.empty() && conjugacy_class(w).size() == w.size();
}

// Word with one or two division points; offsets strictly increase and lie
// strictly inside (0, size).  Two divisions render as "ba|ca||bac", one as
// "ca|cacac".
class DividedMode {
 public:
  DividedMode(Word word, std::vector<std::size_t> dividers)
      : word_(std::move(word)), dividers_(std::move(dividers)) {
    if (dividers_.empty() || dividers_.size() > 2)
      throw std::domain_error("expected one or two dividers");
    std::size_t prev = 0;
    for (std::size_t d : dividers_) {
      if (d <= prev || d >= word_.size())
        throw std::domain_error("divider offsets must strictly increase inside the word");
      prev = d;
    }
  }

  static DividedMode parse(const std::string& text) {
    std::string letters;
    std::vector<std::size_t> dividers;
    std::size_t bar_runs = 0;
    for (std::size_t i = 0; i < text.size();) {
      if (text[i] == '|') {
        std::size_t run = 0;
        std::size_t start = i;
        while (i < text.size() && text[i] == '|') { ++run; ++i; }
        ++bar_runs;
        if (run != bar_runs)
          throw ParseError("expected " + std::string(bar_runs, '|') + " divider", start);
        if (bar_runs > 2) throw ParseError("too many dividers", start);
        if (letters.empty() || (!dividers.empty() && dividers.back() == letters.size()))
          throw ParseError("empty segment", start);
        dividers.push_back(letters.size());
      } else if (is_letter(text[i])) {
        letters.push_back(text[i]);
        ++i;
      } else {
        throw ParseError(std::string("invalid character '") + text[i] + "'", i);
      }
    }
    if (dividers.empty()) throw ParseError("missing divider", text.size());
    if (dividers.back() == letters.size())
      throw ParseError("empty segment", text.size());
    return DividedMode(Word(letters), dividers);
  }

  std::string str() const {
    std::string out;
    std::size_t next = 0;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (next < dividers_.size() && dividers_[next] == i) {
        out.append(next + 1, '|');
        ++next;
      }
      out.push_back(word_[i]);
    }
    return out;
  }

  const Word& word() const { return word_; }
  const std::vector<std::size_t>& dividers() const { return dividers_; }
  std::size_t segment_count() const { return dividers_.size() + 1; }

  Word segment(std::size_t i) const {
    std::size_t lo = i == 0 ? 0 : dividers_[i - 1];
    std::size_t hi = i == dividers_.size() ? word_.size() : dividers_[i];
    return Word(word_.str().substr(lo, hi - lo));
  }

  friend bool operator==(const DividedMode&, const DividedMode&) = default;

 private:
  Word word_;
  std::vector<std::size_t> dividers_;
};

// Cyclic left shift of the underlying word; division offsets stay put.
inline DividedMode rotate_once(const DividedMode& mode) {
  return DividedMode(rotate_left(mode.word(), 1), mode.dividers());
}

inline DividedMode rotate(const DividedMode& mode, std::size_t k) {
  return DividedMode(rotate_left(mode.word(), k), mode.dividers());
}

}  // namespace pwwf
