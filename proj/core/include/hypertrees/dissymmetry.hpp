#pragma once

#include <variant>

#include "hypertrees/hypertree.hpp"
#include "hypertrees/walks.hpp"

namespace hypertrees {

/// Element of H + H^pa: a plain hypertree or an edge-pointed rooted one.
using PlainOrEpr = std::variant<Hypertree, PointedHypertree>;

/// Center-based bijection H + H^pa -> H^p + H^a (the result's kind is Root
/// or EdgePointed). A plain tree gets its center pointed; an edge-pointed
/// rooted tree forgets whichever of the two pointings sits at (or nearest
/// to) the center.
PointedHypertree dissymmetry_phi(const PlainOrEpr& x);

/// Inverse of dissymmetry_phi.
PlainOrEpr dissymmetry_psi(const PointedHypertree& y);

}  // namespace hypertrees
