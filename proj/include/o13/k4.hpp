#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace o13 {

/// One element of the Klein four group {1, P, T, PT}. By self-duality the
/// same value doubles as the label of one of the four real irreps (its
/// reflection charge). The two bits record oddness under parity and time
/// reversal; multiplication is bitwise XOR, so every element is its own
/// inverse and the group axioms are bit identities.
struct K4Charge {
  bool p_odd = false;
  bool t_odd = false;

  friend constexpr bool operator==(K4Charge, K4Charge) = default;
};

inline constexpr K4Charge k4_one{false, false};
inline constexpr K4Charge k4_p{true, false};
inline constexpr K4Charge k4_t{false, true};
inline constexpr K4Charge k4_pt{true, true};

/// Canonical order {1, P, T, PT}, used everywhere for display and tables.
inline constexpr std::array<K4Charge, 4> k4_elements{k4_one, k4_p, k4_t,
                                                     k4_pt};

constexpr K4Charge mul(K4Charge a, K4Charge b) {
  return {a.p_odd != b.p_odd, a.t_odd != b.t_odd};
}

constexpr int k4_index(K4Charge c) {
  return (c.p_odd ? 1 : 0) + (c.t_odd ? 2 : 0);
}

constexpr K4Charge k4_from_index(int i) {
  return {(i & 1) != 0, (i & 2) != 0};
}

/// Character pairing chi_rep(g): -1 iff the odd bits of `rep` and `g`
/// overlap in an odd number of positions. Reproduces the 4x4 character
/// table of the four real irreps cell for cell.
constexpr int irrep_sign(K4Charge rep, K4Charge g) {
  return ((rep.p_odd && g.p_odd) != (rep.t_odd && g.t_odd)) ? -1 : 1;
}

constexpr std::string_view charge_name(K4Charge c) {
  switch (k4_index(c)) {
    case 0: return "1";
    case 1: return "P";
    case 2: return "T";
    default: return "PT";
  }
}

std::optional<K4Charge> parse_charge_name(std::string_view name);

/// Componentwise K4 charges of a vector (one entry per component slot).
using ChargeVector = std::vector<K4Charge>;

/// Entry (i, j) = a_i * b_j.
std::vector<ChargeVector> charge_outer(const ChargeVector& a,
                                       const ChargeVector& b);

/// Fold of `mul` over a list of labels; the empty product is the identity.
K4Charge infer_charge(const std::vector<K4Charge>& labels);

}  // namespace o13
