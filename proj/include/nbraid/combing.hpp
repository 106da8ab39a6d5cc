#pragma once
// Normal forms in the bordered braid groups via the strand tower: the
// subgroup of letters at strand level n is free and normal over the group
// on the lower strands, and conjugation by any lower letter rewrites each
// level-n generator inside its level.  Pushing every letter of a word down
// to its own level therefore produces a normal form, empty at every level
// exactly when the element is trivial.

#include <functional>
#include <map>
#include <vector>

#include "nbraid/presentations.hpp"

namespace nbraid {

using ConjRhsFn =
    std::function<Word(const GeneratorSymbol&, const GeneratorSymbol&)>;

class ActionTable {
 public:
  // Images of every generator under conjugation by every generator of a
  // strictly lower strand level, both signs; the negative rows come from
  // inverting each level map as a free group automorphism, which also
  // certifies that the rules preserve the level structure.
  ActionTable(const GroupSpec& spec, const ConjRhsFn& rhs);

  const GroupSpec& spec() const { return spec_; }

  // Image of z under conjugation by c^sign; Errc::level unless
  // level(c) < level(z).
  const Word& image(const GeneratorSymbol& c, int sign,
                    const GeneratorSymbol& z) const;

  // Letterwise image c^s w c^-s of a word living strictly above level(c).
  Word apply(const Letter& c, const Word& w) const;

  // u w u^-1 for a word u every letter of which sits strictly below every
  // letter of w.
  Word conjugate(const Word& u, const Word& w) const;

 private:
  GroupSpec spec_;
  std::map<std::pair<GeneratorSymbol, int>, std::map<GeneratorSymbol, Word>>
      table_;
};

// Shared cached table with the standard conjugation rules.
const ActionTable& action_table(const GroupSpec& spec);
// Fresh table built from substitute rules, for cross-checking rule variants.
ActionTable action_table_custom(const GroupSpec& spec, const ConjRhsFn& rhs);

// Conjugating any generator through a full relator of the group spanned by
// the lower levels must fix it letter for letter; this is exactly the
// condition for the per-letter actions to define an action of the lower
// group, hence for the tower to assemble.
bool action_consistent(const ActionTable& t);

struct CombedForm {
  GroupSpec spec;
  std::vector<Word> levels; // front() is the top strand, back() strand 1

  Word flatten() const; // levels multiplied top strand first
  bool trivial() const; // every level empty
};

// Normal form in a bordered group; Errc::unsupported for other families.
CombedForm comb(const Word& w, const GroupSpec& spec);
CombedForm comb_with(const Word& w, const ActionTable& t);

bool is_trivial_bordered(const Word& w, const GroupSpec& spec);
bool equal_bordered(const Word& u, const Word& v, const GroupSpec& spec);

} // namespace nbraid
