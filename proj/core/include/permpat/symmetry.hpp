#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "permpat/permutation.hpp"
#include "permpat/restriction.hpp"

namespace permpat {

/// reversal: output_j = pi_{n+1-j}
Permutation reverse(const Permutation& pi);
/// complement: output_j = n + 1 - pi_j
Permutation complement(const Permutation& pi);
/// group-theoretic inverse: output_{pi_j} = j
Permutation inverse(const Permutation& pi);

/// An element of the order-8 group generated by reverse (r), complement (c)
/// and inverse (i), in the normal form r^a c^b i^e. The composite acts right
/// to left, so `rci` applies i, then c, then r.
///
/// The enumerator order below is the fixed enumeration order of the group.
enum class SymmetryOp : std::uint8_t { id, r, c, rc, i, ri, ci, rci };

inline constexpr std::array<SymmetryOp, 8> kAllSymmetries = {
    SymmetryOp::id, SymmetryOp::r,  SymmetryOp::c,  SymmetryOp::rc,
    SymmetryOp::i,  SymmetryOp::ri, SymmetryOp::ci, SymmetryOp::rci};

namespace detail {
constexpr bool has_r(SymmetryOp g) { return (static_cast<unsigned>(g) & 1u) != 0; }
constexpr bool has_c(SymmetryOp g) { return (static_cast<unsigned>(g) & 2u) != 0; }
constexpr bool has_i(SymmetryOp g) { return (static_cast<unsigned>(g) & 4u) != 0; }
constexpr SymmetryOp make_op(bool r, bool c, bool i) {
  return static_cast<SymmetryOp>((r ? 1u : 0u) | (c ? 2u : 0u) | (i ? 4u : 0u));
}
// i r = c i and i c = r i, so pushing i rightwards through r^a c^b swaps a and b.
constexpr SymmetryOp compose_slow(SymmetryOp outer, SymmetryOp inner) {
  bool a = has_r(inner), b = has_c(inner);
  if (has_i(outer)) std::swap(a, b);
  return make_op(has_r(outer) != a, has_c(outer) != b, has_i(outer) != has_i(inner));
}
constexpr auto make_table() {
  std::array<std::array<SymmetryOp, 8>, 8> t{};
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y)
      t[x][y] = compose_slow(static_cast<SymmetryOp>(x), static_cast<SymmetryOp>(y));
  return t;
}
inline constexpr auto kComposeTable = make_table();
}  // namespace detail

/// outer ∘ inner (apply inner first).
constexpr SymmetryOp compose(SymmetryOp outer, SymmetryOp inner) {
  return detail::kComposeTable[static_cast<unsigned>(outer)][static_cast<unsigned>(inner)];
}

constexpr SymmetryOp inverse_op(SymmetryOp g) {
  for (auto h : kAllSymmetries)
    if (compose(g, h) == SymmetryOp::id) return h;
  return SymmetryOp::id;  // unreachable for a group
}

/// "id", "r", "c", "rc", "i", "ri", "ci", "rci"
std::string_view name(SymmetryOp g);
/// Accepts the names above (and "identity"). Throws InvalidInput otherwise.
SymmetryOp parse_symmetry(std::string_view text);

Permutation apply(SymmetryOp g, const Permutation& pi);
Pattern apply(SymmetryOp g, const Pattern& alpha);
RestrictionSpec apply_to_spec(SymmetryOp g, const RestrictionSpec& spec);

/// {apply_to_spec(g, spec) : g in the group}, deduplicated and sorted.
std::vector<RestrictionSpec> orbit(const RestrictionSpec& spec);

/// Lexicographically least element of the orbit; equal for specs in one orbit.
RestrictionSpec orbit_representative(const RestrictionSpec& spec);

}  // namespace permpat
