#include "permpat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>

#include "permpat/error.hpp"

namespace permpat {

namespace {

void require_bijection(std::span<const int> word, const char* what) {
  if (word.empty()) throw InvalidInput(std::string(what) + " must have length >= 1");
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InvalidInput(std::string(what) + " entry " + std::to_string(v) + " outside 1.." +
                         std::to_string(n));
    if (seen[v]) throw InvalidInput(std::string(what) + " repeats entry " + std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  require_bijection(word_, "permutation");
}

Permutation::Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidInput("identity: negative length");
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return detail::WordAccess::adopt(std::move(word));
}

Pattern::Pattern(std::vector<int> word) : perm_(std::move(word)) {}

Pattern::Pattern(std::initializer_list<int> word) : perm_(std::vector<int>(word)) {}

Pattern::Pattern(const Permutation& perm) : perm_(perm) {
  if (perm.empty()) throw InvalidInput("pattern must have length >= 1");
}

Pattern standardize(std::span<const int> word) {
  if (word.empty()) throw InvalidInput("standardize: empty word");
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return word[a] < word[b]; });
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && word[order[rank]] == word[order[rank - 1]])
      throw InvalidInput("standardize: repeated entry " + std::to_string(word[order[rank]]));
    out[order[rank]] = static_cast<int>(rank + 1);
  }
  return Pattern(std::move(out));
}

std::vector<int> parse_word(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char ch) { return ch == ',' || std::isspace(static_cast<unsigned char>(ch)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw InvalidInput("empty permutation text");

  std::vector<int> word;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (char ch : tokens[0]) {
      if (ch < '1' || ch > '9')
        throw InvalidInput("compact word '" + std::string(tokens[0]) + "' must use digits 1-9");
      word.push_back(ch - '0');
    }
    return word;
  }
  for (auto tok : tokens) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidInput("bad token '" + std::string(tok) + "'");
    word.push_back(value);
  }
  return word;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

Pattern parse_pattern(std::string_view text) { return Pattern(parse_word(text)); }

std::string to_string(const Permutation& perm) {
  std::string out;
  for (int i = 0; i < perm.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(perm[i]);
  }
  return out;
}

std::string to_string(const Pattern& pattern) { return to_string(pattern.as_permutation()); }

std::string pattern_text(const Pattern& pattern) {
  if (pattern.size() > 9) return to_string(pattern);
  std::string out;
  for (int v : pattern.word()) out += static_cast<char>('0' + v);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& perm) { return os << to_string(perm); }

std::ostream& operator<<(std::ostream& os, const Pattern& pattern) {
  return os << pattern_text(pattern);
}

std::vector<Pattern> all_patterns(int k) {
  if (k < 1) throw InvalidInput("all_patterns: k must be >= 1");
  std::vector<int> word(static_cast<std::size_t>(k));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Pattern> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

}  // namespace permpat
