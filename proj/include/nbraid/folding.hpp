#pragma once
// Constructive inversion of a free group automorphism given by generator
// images, by folding the flower graph of the images while carrying edge
// voltages.  The voltage traced along a generator loop of the folded
// graph expresses that generator in terms of the images.

#include <vector>

#include "nbraid/words.hpp"

namespace nbraid {

// gens is a free basis, images[i] the endomorphism image of gens[i] as a
// word over gens.  Returns the generator images of the inverse
// automorphism.  Errc::not_invertible when the images are not a basis;
// the result always satisfies substitute(result[i], images) == gens[i]
// freely.
std::vector<Word> invert_automorphism(
    const std::vector<GeneratorSymbol>& gens,
    const std::vector<Word>& images);

} // namespace nbraid
