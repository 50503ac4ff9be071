#pragma once

#include "stanleychar/numeric.hpp"
#include "stanleychar/shapes.hpp"

namespace stanleychar {

/// chi^lambda(mu) by the Murnaghan-Nakayama rule: border strips of length
/// mu_1 (the largest part) are peeled recursively. Results are memoized in
/// a process-wide table that is safe for concurrent use.
/// Throws std::invalid_argument if |lambda| != |mu|.
Integer irreducible_character(const Partition& lambda, const Partition& mu);

/// chi^lambda(1^n), computed by the same recursion.
Integer character_degree(const Partition& lambda);

/// Normalized character Ch_pi(lambda): with k = |pi| and n = |lambda|,
/// n(n-1)...(n-k+1) * chi^lambda(pi 1^(n-k)) / chi^lambda(1^n) when n >= k,
/// and 0 otherwise. Throws std::logic_error if the division is not exact.
Integer normalized_character(const Partition& pi, const Partition& lambda);

/// Drops all memoized character values.
void clear_character_cache();

}  // namespace stanleychar
