#include "nbraid/combing.hpp"

#include "nbraid/folding.hpp"

namespace nbraid {

ActionTable::ActionTable(const GroupSpec& spec, const ConjRhsFn& rhs)
    : spec_(spec) {
  if (spec.family != Family::BorderedBraid &&
      spec.family != Family::ClosedBraid)
    fail(Errc::unsupported, "conjugation tables exist for braid groups only");
  const Presentation pres = presentation(spec);

  std::vector<std::vector<GeneratorSymbol>> by_level(spec.n + 1);
  for (const auto& s : pres.generators)
    by_level[strand_level(s)].push_back(s);

  for (const auto& c : pres.generators) {
    for (int m = strand_level(c) + 1; m <= spec.n; ++m) {
      const auto& kern = by_level[m];
      std::vector<Word> fwd;
      for (const auto& z : kern) fwd.push_back(rhs(c, z));
      // inverting the level map certifies it permutes a free basis of the
      // level; rules whose images leave the level are rejected here
      std::vector<Word> inv = invert_automorphism(kern, fwd);
      auto& fmap = table_[{c, 1}];
      auto& imap = table_[{c, -1}];
      for (std::size_t i = 0; i < kern.size(); ++i) {
        fmap[kern[i]] = fwd[i];
        imap[kern[i]] = inv[i];
      }
    }
  }
}

const Word& ActionTable::image(const GeneratorSymbol& c, int sign,
                               const GeneratorSymbol& z) const {
  if (strand_level(c) >= strand_level(z))
    fail(Errc::level, "conjugator " + format_symbol(c) +
                          " does not sit below " + format_symbol(z));
  auto row = table_.find({c, sign});
  if (row == table_.end())
    fail(Errc::internal, "no conjugation row for " + format_symbol(c));
  auto cell = row->second.find(z);
  if (cell == row->second.end())
    fail(Errc::internal, "no conjugation entry for " + format_symbol(z));
  return cell->second;
}

Word ActionTable::apply(const Letter& c, const Word& w) const {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    const Word& img = image(c.sym, c.sign, l.sym);
    if (l.sign > 0) {
      for (const auto& m : img.letters()) out.push_back(m);
    } else {
      const auto& ls = img.letters();
      for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        out.push_back(it->inverse());
    }
  }
  return Word(std::move(out));
}

Word ActionTable::conjugate(const Word& u, const Word& w) const {
  Word out = w;
  const auto& ls = u.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out = apply(*it, out);
  return out;
}

const ActionTable& action_table(const GroupSpec& spec) {
  static std::map<GroupSpec, ActionTable> cache;
  auto it = cache.find(spec);
  if (it == cache.end())
    it = cache.emplace(spec, ActionTable(spec, conjugation_rhs)).first;
  return it->second;
}

ActionTable action_table_custom(const GroupSpec& spec, const ConjRhsFn& rhs) {
  return ActionTable(spec, rhs);
}

bool action_consistent(const ActionTable& t) {
  const GroupSpec& s = t.spec();
  if (s.family != Family::BorderedBraid)
    fail(Errc::unsupported, "consistency check applies to bordered groups");
  const Presentation pres = presentation(s);
  for (int m = 2; m <= s.n; ++m) {
    const Presentation lower = bordered_braid(s.g, s.b, m - 1);
    for (const auto& z : pres.generators) {
      if (strand_level(z) != m) continue;
      const Word zw = letter_word(z);
      for (const auto& rel : lower.relators)
        if (t.conjugate(rel, zw) != zw) return false;
    }
  }
  return true;
}

Word CombedForm::flatten() const {
  Word out;
  for (const auto& l : levels) out = out * l;
  return out;
}

bool CombedForm::trivial() const {
  for (const auto& l : levels)
    if (!l.empty()) return false;
  return true;
}

CombedForm comb_with(const Word& w, const ActionTable& t) {
  const GroupSpec& s = t.spec();
  if (s.family != Family::BorderedBraid)
    fail(Errc::unsupported, "combing needs a bordered group");
  presentation(s).validate_word(w);

  CombedForm cf{s, {}};
  Word rest = w;
  for (int m = s.n; m >= 1; --m) {
    // factor rest = kern * low with kern at level m and low strictly
    // below, reading right to left: a lower letter x moves past the kernel
    // part collected so far at the price of conjugating it by x
    Word kern, low;
    const auto& ls = rest.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      if (strand_level(it->sym) == m) {
        kern = letter_word(it->sym, it->sign) * kern;
      } else {
        kern = t.apply(*it, kern);
        low = letter_word(it->sym, it->sign) * low;
      }
    }
    cf.levels.push_back(kern);
    rest = low;
  }
  return cf;
}

CombedForm comb(const Word& w, const GroupSpec& spec) {
  return comb_with(w, action_table(spec));
}

bool is_trivial_bordered(const Word& w, const GroupSpec& spec) {
  return comb(w, spec).trivial();
}

bool equal_bordered(const Word& u, const Word& v, const GroupSpec& spec) {
  return is_trivial_bordered(u * inverse(v), spec);
}

} // namespace nbraid
