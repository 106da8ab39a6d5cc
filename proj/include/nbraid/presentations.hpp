#pragma once
// Finite presentations of the supported group families:
//   closed:g=G,n=N     pure braid group of the closed nonorientable surface
//                      of genus G on N strands (G >= 2)
//   bordered:g=G,b=B,n=N  pure braid group of the genus-G surface with B
//                      boundary components (G >= 1, B >= 1)
//   surface:g=G        fundamental group of the closed surface (G >= 2)
//   free:rank=R        free group on R abstract generators y1..yR
// plus ad hoc presentations built directly from words.

#include <string>
#include <vector>

#include "nbraid/words.hpp"

namespace nbraid {

enum class Family { ClosedBraid, BorderedBraid, ClosedSurface, FreeGroup, AdHoc };

struct GroupSpec {
  Family family{Family::AdHoc};
  int g{0};
  int b{0};
  int n{0};
  int rank{0};
  std::string label; // ad hoc groups only

  static GroupSpec closed(int g, int n);
  static GroupSpec bordered(int g, int b, int n);
  static GroupSpec surface(int g);
  static GroupSpec free_group(int rank);

  // Parses the CLI mini-language, e.g. "closed:g=2,n=3".
  static GroupSpec parse(const std::string& text);
  std::string str() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend bool operator<(const GroupSpec& a, const GroupSpec& b) {
    return a.str() < b.str();
  }
};

struct Presentation {
  GroupSpec spec;
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators; // each stored as LHS * RHS^-1

  int generator_index(const GeneratorSymbol& s) const; // -1 if absent
  void validate_word(const Word& w) const;             // all letters known
};

// Family builders; throw Errc::unsupported outside the supported range.
Presentation presentation(const GroupSpec& spec);
Presentation closed_braid(int g, int n);
Presentation bordered_braid(int g, int b, int n);
Presentation surface_group(int g);
Presentation free_group(int rank);

// <a, b | a b a^-1 b>, the Klein bottle group; the standing small example
// of a split extension Z x| Z with inverting action.
Presentation klein_bottle();
Presentation ad_hoc(const std::string& label,
                    std::vector<GeneratorSymbol> gens,
                    std::vector<Word> relators);

// Named elements of the closed braid groups.
Word elem_T(const GroupSpec& spec, int i);  // B[1,i]..B[i-1,i] B[i,i+1]..B[i,n]
Word elem_a(const GroupSpec& spec, int k);  // r[k,g-1] r[k,g]
Word elem_U(const GroupSpec& spec);         // a_n ... a_2

// Section of the boundary projection: image of p[i] in the closed braid
// group, and the projection itself (r[1,l] to p[l], everything else dies).
Word sigma_image(const GroupSpec& spec, int i);
Word lambda_image(const Word& w);

// Right-hand side of c z c^-1 for a conjugating generator c strictly below
// the strand level of z; Errc::level otherwise.
Word conjugation_rhs(const GeneratorSymbol& c, const GeneratorSymbol& z);

std::string presentation_json(const Presentation& p);

} // namespace nbraid
