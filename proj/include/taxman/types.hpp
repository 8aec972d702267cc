#ifndef TAXMAN_TYPES_HPP
#define TAXMAN_TYPES_HPP

#include <cstdint>

namespace taxman {

/// Label of a pot element. Numbers 1..N in the standard game, indices
/// 0..|P|-1 on an explicit poset.
using Element = int;

/// Scores and weights are exact integers throughout.
using Weight = std::int64_t;

}  // namespace taxman

#endif  // TAXMAN_TYPES_HPP
