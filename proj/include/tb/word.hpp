#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tb {

// A generator letter with exponent +1 or -1.  Group words use a, b, g, d;
// Thompson words use B, G, D.
struct Letter {
  char symbol = 'a';
  bool inverse = false;

  Letter inverted() const { return {symbol, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Leftmost letter is applied last.
using Word = std::vector<Letter>;

// Whitespace-separated letters from `alphabet`, each optionally followed by '.
Word parse_word(std::string_view text, std::string_view alphabet = "abgd");
std::string format_word(const Word& w);

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
// Free reduction of the concatenation.
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);

}  // namespace tb
