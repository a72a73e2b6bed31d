#pragma once

#include <string>

#include "effalg/effect_algebra.hpp"
#include "effalg/implication.hpp"

namespace effalg {

enum class TableFormat { aligned, csv };

/// Grid with a header row of labels; cells rendered like "{g,1}".
/// CSV cells holding a comma are double-quoted.
std::string emit_table(const ImplicationTable& t, TableFormat format);

/// Sum table with "-" for undefined entries.
std::string emit_sum_table(const EffectAlgebra& e, TableFormat format);

/// Less-or-equal matrix as rows of 0/1 under a label header.
std::string emit_order_matrix(const Poset& p);

/// DOT digraph of the covering relation, bottom at the bottom.
std::string emit_dot(const Poset& p, const std::string& name);

}  // namespace effalg
