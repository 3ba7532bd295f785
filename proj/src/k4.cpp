#include "o13/k4.hpp"

namespace o13 {

std::optional<K4Charge> parse_charge_name(std::string_view name) {
  if (name == "1") return k4_one;
  if (name == "P") return k4_p;
  if (name == "T") return k4_t;
  if (name == "PT") return k4_pt;
  return std::nullopt;
}

std::vector<ChargeVector> charge_outer(const ChargeVector& a,
                                       const ChargeVector& b) {
  std::vector<ChargeVector> out(a.size(), ChargeVector(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i][j] = mul(a[i], b[j]);
  return out;
}

K4Charge infer_charge(const std::vector<K4Charge>& labels) {
  K4Charge acc = k4_one;
  for (K4Charge c : labels) acc = mul(acc, c);
  return acc;
}

}  // namespace o13
