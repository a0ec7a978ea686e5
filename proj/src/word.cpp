#include "tb/word.hpp"

#include <algorithm>
#include <cctype>

#include "tb/error.hpp"

namespace tb {

Word parse_word(std::string_view text, std::string_view alphabet) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(i, end - i);
    bool ok = (token.size() == 1 || (token.size() == 2 && token[1] == '\'')) &&
              alphabet.find(token[0]) != std::string_view::npos;
    if (!ok) throw Error(ErrorCode::Parse, std::string(token), "unknown letter");
    out.push_back({token[0], token.size() == 2});
    i = end;
  }
  return out;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += l.symbol;
    if (l.inverse) out += '\'';
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverted()) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(out);
}

}  // namespace tb
