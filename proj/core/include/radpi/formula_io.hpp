#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "radpi/fixed.hpp"
#include "radpi/machin.hpp"

namespace radpi {

/// Lehmer measure as reported in documents: empty when some |1/x_j| is not an
/// integer or the measure is singular.
std::optional<FixedReal> document_lehmer(const MachinFormula& f);

/// Formula JSON:
///   {"target": "pi/4", "k": int, "M": int,
///    "terms": [{"coeff": "...", "arg_num": "...", "arg_den": "..."}],
///    "validated": bool, "lehmer": "..." | null}
/// Big integers are written as decimal strings.
std::string formula_to_json(const MachinFormula& f);

/// Parses a Formula JSON document. Syntax errors carry "line L, column C".
MachinFormula formula_from_json(std::string_view text);

}  // namespace radpi
