#pragma once

#include <string>

namespace o13 {

/// Deterministic text rendering of the K4 multiplication table, the
/// character table of its four real irreps, the quartet products of the
/// four vector representations, and the four consistent four-vector charge
/// patterns. Suitable for golden-file comparison.
std::string render_tables();

}  // namespace o13
