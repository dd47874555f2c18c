#pragma once

// Word-level product recursions shared by the Mlv and level-N algebras.
// Memoized on (word, word) pairs; both products are commutative so keys are
// stored with the smaller word first.

#include "mlv/poly.hpp"

namespace mlv::detail {

/// Letterwise shuffle of two words (any alphabet family).
NCPoly shuffle_words(const Word& u, const Word& v);

/// Quasi-shuffle of two A1/U1 words. The diagonal rule depends on the
/// family: z_{k+l,a+b} for Mlv, delta_{a,b} N y_{k+l,a} for LevelN.
NCPoly stuffle_words(const Word& u, const Word& v);

void clear_caches();

} // namespace mlv::detail
