#include "bpc/text_format.hpp"

#include <charconv>
#include <istream>

#include "bpc/error.hpp"

namespace bpc {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    int value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first || (*first == '-' || *first == '+')) {
      throw Error(ErrorCode::kNotPermutation,
                  "malformed integer list at offset " + std::to_string(pos) + ": '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ' ' && text[pos] != ',') {
      throw Error(ErrorCode::kNotPermutation,
                  "unexpected character at offset " + std::to_string(pos) + ": '" +
                      std::string(text) + "'");
    }
    ++pos;
  }
  return out;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_int_list(text)); }

std::string format_int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string format_permutation(const Permutation& pi) {
  return format_int_list({pi.values().begin(), pi.values().end()});
}

std::vector<Permutation> read_permutations(std::istream& in) {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_permutation(line));
  }
  return out;
}

}  // namespace bpc
