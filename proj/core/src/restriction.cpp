#include "permpat/restriction.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "permpat/error.hpp"

namespace permpat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      auto piece = trim(s.substr(start, i - start));
      if (!piece.empty()) out.push_back(piece);
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

RestrictionSpec::RestrictionSpec(std::vector<Pattern> avoid, std::vector<ContainRequirement> contain) {
  std::sort(avoid.begin(), avoid.end());
  avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());

  std::map<Pattern, std::uint32_t> folded;
  for (auto& req : contain) {
    if (req.multiplicity == 0) throw InvalidInput("contain multiplicity must be >= 1");
    folded[req.pattern] += req.multiplicity;
  }
  for (auto& [pattern, mult] : folded) {
    if (std::binary_search(avoid.begin(), avoid.end(), pattern))
      throw InvalidInput("pattern " + pattern_text(pattern) + " is both avoided and contained");
    contain_.push_back({pattern, mult});
  }
  avoid_ = std::move(avoid);
}

RestrictionSpec RestrictionSpec::avoid_contain(const Pattern& avoided, const Pattern& contained) {
  return RestrictionSpec({avoided}, {{contained, 1}});
}

RestrictionSpec RestrictionSpec::contain_pair(const Pattern& a, const Pattern& b) {
  return RestrictionSpec({}, {{a, 1}, {b, 1}});
}

RestrictionSpec RestrictionSpec::avoiding(std::vector<Pattern> avoid) {
  return RestrictionSpec(std::move(avoid), {});
}

std::string RestrictionSpec::text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < avoid_.size(); ++i) {
    if (i > 0) out += ',';
    out += pattern_text(avoid_[i]);
  }
  out += ';';
  for (std::size_t i = 0; i < contain_.size(); ++i) {
    if (i > 0) out += ',';
    out += pattern_text(contain_[i].pattern);
    if (contain_[i].multiplicity != 1) out += '^' + std::to_string(contain_[i].multiplicity);
  }
  out += ')';
  return out;
}

ContainRequirement parse_contain_item(std::string_view text) {
  text = trim(text);
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return {parse_pattern(text), 1};
  const auto count_text = trim(text.substr(caret + 1));
  std::uint32_t mult = 0;
  auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), mult);
  if (ec != std::errc{} || ptr != count_text.data() + count_text.size() || mult == 0)
    throw InvalidInput("bad multiplicity in '" + std::string(text) + "'");
  return {parse_pattern(text.substr(0, caret)), mult};
}

RestrictionSpec parse_spec(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw InvalidInput("unbalanced parentheses in spec '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw InvalidInput("spec must have the form (avoid;contain), got '" + std::string(text) + "'");
  std::vector<Pattern> avoid;
  for (auto item : split(text.substr(0, semi), ',')) avoid.push_back(parse_pattern(item));
  std::vector<ContainRequirement> contain;
  for (auto item : split(text.substr(semi + 1), ',')) contain.push_back(parse_contain_item(item));
  return RestrictionSpec(std::move(avoid), std::move(contain));
}

std::vector<RestrictionSpec> ordered_pair_specs() {
  const auto s3 = all_patterns(3);
  std::vector<RestrictionSpec> out;
  for (const auto& a : s3)
    for (const auto& b : s3)
      if (a != b) out.push_back(RestrictionSpec::avoid_contain(a, b));
  return out;
}

std::vector<RestrictionSpec> multiset_pair_specs() {
  const auto s3 = all_patterns(3);
  std::vector<RestrictionSpec> out;
  for (std::size_t i = 0; i < s3.size(); ++i)
    for (std::size_t j = i + 1; j < s3.size(); ++j)
      out.push_back(RestrictionSpec::contain_pair(s3[i], s3[j]));
  return out;
}

}  // namespace permpat
