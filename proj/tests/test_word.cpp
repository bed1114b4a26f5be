#include <catch2/catch_amalgamated.hpp>

#include "pwwf/word.hpp"

using namespace pwwf;

TEST_CASE("word validation") {
  CHECK(Word("bacabac").size() == 7);
  CHECK(Word("").empty());
  CHECK_THROWS_AS(Word("abd"), ParseError);
  try {
    Word("abd");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("letter counting and projection") {
  Word w("bacabac");
  CHECK(count_letter(w, 'a') == 3);
  CHECK(count_letter(w, 'b') == 2);
  CHECK(count_letter(w, 'c') == 2);
  CHECK(project_word(Word("acbacab"), 'c', 'a') == Word("aabaaab"));
  CHECK(project_word(w, 'a', 'b') == Word("bbcbbbc"));
  CHECK(project_word(w, 'b', 'c') == Word("cacacac"));
  CHECK(letters_used(Word("caca")) == std::vector<char>{'a', 'c'});
}

TEST_CASE("rotation and reversal") {
  Word w("bacabac");
  CHECK(rotate_left(w, 1) == Word("acabacb"));
  CHECK(rotate_left(w, 7) == w);
  CHECK(reverse(w) == Word("cabacab"));
  CHECK(reverse(Word("")) == Word(""));
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_class(Word("aba")).size() == 3);
  CHECK(conjugacy_class(Word("abab")).size() == 2);
  CHECK(canonical_rotation(Word("bacabac")) == Word("abacbac"));
  CHECK(canonical_rotation(Word("cba")) == Word("acb"));
  CHECK(is_primitive(Word("aab")));
  CHECK_FALSE(is_primitive(Word("abab")));
  CHECK_FALSE(is_primitive(Word("")));
  CHECK_THROWS_AS(conjugacy_class(Word("")), std::domain_error);
}

TEST_CASE("divided mode parsing") {
  DividedMode m = DividedMode::parse("ba|ca||bac");
  CHECK(m.word() == Word("bacabac"));
  CHECK(m.dividers() == std::vector<std::size_t>{2, 4});
  CHECK(m.segment_count() == 3);
  CHECK(m.segment(0) == Word("ba"));
  CHECK(m.segment(1) == Word("ca"));
  CHECK(m.segment(2) == Word("bac"));
  CHECK(m.str() == "ba|ca||bac");

  DividedMode pair = DividedMode::parse("ca|cacac");
  CHECK(pair.dividers() == std::vector<std::size_t>{2});
  CHECK(pair.str() == "ca|cacac");
}

TEST_CASE("divided mode parse errors carry positions") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      DividedMode::parse(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of("|abc") == 0);
  CHECK(position_of("ab|") == 3);
  CHECK(position_of("a||b") == 1);
  CHECK(position_of("a|b||c|d") == 6);
  CHECK(position_of("ab|c!d") == 4);
  CHECK(position_of("abc") == 3);
  CHECK(position_of("a|b|||c") == 3);
}

TEST_CASE("rotation keeps division offsets in place") {
  DividedMode m = DividedMode::parse("a|b||c");
  DividedMode r1 = rotate_once(m);
  CHECK(r1.str() == "b|c||a");
  CHECK(rotate_once(rotate_once(r1)).str() == "a|b||c");
  CHECK(rotate(m, 3) == m);
}

TEST_CASE("rotation commutes with projection on plain words") {
  Word w("bacabac");
  for (std::size_t k = 0; k < w.size(); ++k)
    CHECK(rotate_left(project_word(w, 'b', 'c'), k) == project_word(rotate_left(w, k), 'b', 'c'));
}
