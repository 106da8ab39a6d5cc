#pragma once
// Word problem for the braid groups over closed surfaces.  Projecting a
// word onto its first strand letters lands in the surface group; the
// kernel of that projection is generated by the letters of the higher
// strands and is isomorphic, by shifting every strand index down by one,
// to the braid group over the bordered surface with one boundary curve.
// A word is trivial exactly when its projection dies in the surface group
// and the remaining kernel part dies in the bordered group.

#include "nbraid/combing.hpp"

namespace nbraid {

// B[1,j] written inside the subgroup generated by strands >= 2, using the
// boundary relation of strand j.
Word band_elimination(const GroupSpec& spec, int j);

// Images of the surface group generators under the section used by the
// splitting machinery, indexed 1..g (entry 0 unused).  For genus >= 3 these
// are the named sigma(p_i) words.  For genus 2 that formula does not extend
// to a homomorphism: it sends the surface relator to U^2, a nontrivial
// kernel element.  Genus 2 therefore uses
//   sigma(p_l) = r[n,l] r[n-1,l] ... r[2,l] r[1,l]
// whose relator image is certified trivial when the splitting is built.
std::vector<Word> section_images(const GroupSpec& spec);

// Strand reindexing between ker(lambda) (strands 2..n) and the bordered
// group (strands 1..n-1); Errc::level on letters outside the range.
Word shift_down(const Word& w);
Word shift_up(const Word& w);

// sigma(lambda(w))^-1 * w, freely reduced: the kernel cofactor of w as a
// plain word, no relator rewriting involved.
Word tau(const Word& w, const GroupSpec& spec);

// Word over strands >= 2 with w = sigma(lambda(w)) * kernel_part(w) in the
// group; every step of the rewriting is a defining relation.
Word kernel_part(const Word& w, const GroupSpec& spec);

bool is_trivial_closed(const Word& w, const GroupSpec& spec);
bool equal_closed(const Word& u, const Word& v, const GroupSpec& spec);

// Family dispatch used by the command line driver.
bool is_trivial(const Word& w, const GroupSpec& spec);
bool equal(const Word& u, const Word& v, const GroupSpec& spec);

} // namespace nbraid
