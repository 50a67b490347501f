#include "permpat/symmetry.hpp"

#include <algorithm>

#include "permpat/error.hpp"

namespace permpat {

using detail::WordAccess;

Permutation reverse(const Permutation& pi) {
  std::vector<int> out(pi.word().rbegin(), pi.word().rend());
  return WordAccess::adopt(std::move(out));
}

Permutation complement(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> out(pi.word().begin(), pi.word().end());
  for (int& v : out) v = n + 1 - v;
  return WordAccess::adopt(std::move(out));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> out(static_cast<std::size_t>(pi.size()));
  for (int j = 0; j < pi.size(); ++j) out[pi[j] - 1] = j + 1;
  return WordAccess::adopt(std::move(out));
}

std::string_view name(SymmetryOp g) {
  switch (g) {
    case SymmetryOp::id: return "id";
    case SymmetryOp::r: return "r";
    case SymmetryOp::c: return "c";
    case SymmetryOp::rc: return "rc";
    case SymmetryOp::i: return "i";
    case SymmetryOp::ri: return "ri";
    case SymmetryOp::ci: return "ci";
    case SymmetryOp::rci: return "rci";
  }
  return "?";
}

SymmetryOp parse_symmetry(std::string_view text) {
  if (text == "identity") return SymmetryOp::id;
  for (auto g : kAllSymmetries)
    if (name(g) == text) return g;
  throw InvalidInput("unknown symmetry '" + std::string(text) +
                     "' (expected id, r, c, rc, i, ri, ci, rci)");
}

Permutation apply(SymmetryOp g, const Permutation& pi) {
  Permutation out = pi;
  if (detail::has_i(g)) out = inverse(out);
  if (detail::has_c(g)) out = complement(out);
  if (detail::has_r(g)) out = reverse(out);
  return out;
}

Pattern apply(SymmetryOp g, const Pattern& alpha) { return Pattern(apply(g, alpha.as_permutation())); }

RestrictionSpec apply_to_spec(SymmetryOp g, const RestrictionSpec& spec) {
  std::vector<Pattern> avoid;
  avoid.reserve(spec.avoid().size());
  for (const auto& p : spec.avoid()) avoid.push_back(apply(g, p));
  std::vector<ContainRequirement> contain;
  contain.reserve(spec.contain().size());
  for (const auto& req : spec.contain()) contain.push_back({apply(g, req.pattern), req.multiplicity});
  return RestrictionSpec(std::move(avoid), std::move(contain));
}

std::vector<RestrictionSpec> orbit(const RestrictionSpec& spec) {
  std::vector<RestrictionSpec> out;
  out.reserve(kAllSymmetries.size());
  for (auto g : kAllSymmetries) out.push_back(apply_to_spec(g, spec));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RestrictionSpec orbit_representative(const RestrictionSpec& spec) { return orbit(spec).front(); }

}  // namespace permpat
