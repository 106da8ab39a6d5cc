#pragma once
// Exact word problem in the fundamental group of a closed nonorientable
// surface of genus g >= 2, for words in the generators p[1..g] subject to
// p[1]^2 ... p[g]^2.

#include <utility>

#include "nbraid/words.hpp"

namespace nbraid {

bool pi1_is_trivial(const Word& w, int g);
bool pi1_equal(const Word& u, const Word& v, int g);

// Genus 2 normal form.  Writing a = p1 and b = p1 p2 turns the surface
// relation into a b a^-1 = b^-1, so every element is b^j a^i and the word
// is trivial exactly when both exponents vanish.
std::pair<long, long> klein_pair(const Word& w);

// Same normal form for words over abstract generators a, b with the
// relation a b a^-1 b.
std::pair<long, long> klein_pair_ab(const Word& w);

} // namespace nbraid
