#pragma once
#include <string_view>

#include "loopbv/element.hpp"

namespace loopbv {

/// Monomial expression grammar, version 1:
///
///   expr   := [rational '*'] factor ('*' factor)*  |  rational
///   factor := name ['^' integer] | '1'
///
/// Names are signature generators (x1, y1, sx2, d1, ...) or manifold table
/// classes. Negative exponents are only meaningful on free group
/// generators; a repeated exterior factor gives the zero element.
Element parse_monomial_expression(const SigPtr& sig, std::string_view text);

}  // namespace loopbv
