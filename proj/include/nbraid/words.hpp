#pragma once
// Free words over the braid generator alphabet: B[i,j], r[k,l], x[u,t],
// p[i], plus named abstract generators for free and ad hoc groups.
// Words are kept freely reduced at all times.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nbraid/error.hpp"

namespace nbraid {

enum class Kind : uint8_t { B, Rho, X, P, Abstract };

struct GeneratorSymbol {
  Kind kind{Kind::Abstract};
  int a{0}; // B: i, rho: k (strand), x: u (strand), p: i
  int b{0}; // B: j, rho: l (band), x: t (boundary)
  std::string name; // abstract generators only

  friend bool operator==(const GeneratorSymbol&,
                         const GeneratorSymbol&) = default;
  friend std::strong_ordering operator<=>(const GeneratorSymbol& l,
                                          const GeneratorSymbol& r) {
    if (l.kind != r.kind) return l.kind <=> r.kind;
    if (auto c = l.a <=> r.a; c != 0) return c;
    if (auto c = l.b <=> r.b; c != 0) return c;
    return l.name <=> r.name;
  }
};

GeneratorSymbol sym_B(int i, int j); // requires 1 <= i < j
GeneratorSymbol sym_rho(int k, int l);
GeneratorSymbol sym_x(int u, int t);
GeneratorSymbol sym_p(int i);
GeneratorSymbol sym_abstract(const std::string& name);

// Strand index the generator is attached to (j for B[i,j], k for r[k,l],
// u for x[u,t]); level errors for p and abstract symbols.
int strand_level(const GeneratorSymbol& s);

struct Letter {
  GeneratorSymbol sym;
  int sign{1}; // +1 or -1

  Letter inverse() const { return {sym, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  explicit Word(const Letter& l) : Word(std::vector<Letter>{l}) {}

  const std::vector<Letter>& letters() const { return ls_; }
  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> ls_;
};

// Free reduction; idempotent.
std::vector<Letter> reduce(std::vector<Letter> letters);

Word operator*(const Word& u, const Word& v);
Word inverse(const Word& w);
Word pow(const Word& w, int e);

// h^-1 k^-1 h k
Word commutator(const Word& h, const Word& k);

// g w g^-1
Word conjugated(const Word& w, const Word& g);

Word letter_word(const GeneratorSymbol& s, int sign = 1);

// Homomorphic substitution. The map returns the image of each symbol, or
// nullopt to signal a missing image (raises Errc::missing_image).
using SymbolMap =
    std::function<std::optional<Word>(const GeneratorSymbol&)>;
Word substitute(const Word& w, const SymbolMap& images);

// Text form.  Grammar:
//   word := term (WS term)*
//   term := atom ("^" SIGNED_INT)?
//   atom := gen | "(" word ")" | "[" word "," word "]"
//   gen  := "B[" INT "," INT "]" | "r[" INT "," INT "]"
//         | "x[" INT "," INT "]" | "p[" INT "]" | NAME
// "[u,v]" denotes u^-1 v^-1 u v; the empty string is the identity.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);
std::string format_symbol(const GeneratorSymbol& s);

} // namespace nbraid
