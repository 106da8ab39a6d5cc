#pragma once
// Split extensions 1 -> A -> B -> C -> 1 with a chosen section of the
// projection.  B is a p-almost direct product of A and C when the
// conjugation action of the section on the kernel is invisible in
// H1(A; F_p); in that case the mod-p filtrations of A, B, C form split
// exact sequences level by level, which this module checks numerically.
// The flagship sequence keeps the first strand of a braid over a closed
// surface; its kernel is the braid group of the punctured surface with
// one strand fewer, and the quotient is the surface group.

#include <functional>

#include "nbraid/pcquotient.hpp"
#include "nbraid/presentations.hpp"

namespace nbraid {

struct SplitSequence {
  Presentation A, B, C;
  SymbolMap embed;         // letters of A into B
  SymbolMap project;       // letters of B onto C, kernel letters erased
  std::vector<Word> sigma; // image in B of each generator of C, in order
  // kernel words of B rewritten over A's generators; each sequence brings
  // its own elimination procedure
  std::function<Word(const Word&)> rewrite_kernel;
  // exact triviality oracles for B and C
  std::function<bool(const Word&)> trivial_b;
  std::function<bool(const Word&)> trivial_c;
};

// first-strand fibration of a closed-surface braid group
SplitSequence braid_sequence(const GroupSpec& spec);
// Z x| Z, the Klein bottle over its cyclic quotient
SplitSequence klein_sequence();

Word embed_word(const SplitSequence& seq, const Word& a);
Word project_word(const SplitSequence& seq, const Word& b);
Word sigma_word(const SplitSequence& seq, const Word& c);

// both section invariants: project(sigma) = identity map on C's
// generators, and sigma kills every relator of C inside B
bool check_section(const SplitSequence& seq);

// conjugation by every sigma image fixes H1(A; F_p) pointwise
bool check_p_almost_direct(const SplitSequence& seq, int p);

struct SplitFiltrationReport {
  int p = 2;
  bool ok = false;
  std::vector<std::string> orders_a, orders_b, orders_c; // per class
  std::vector<bool> multiplicative; // |B_c| = |A_c| |C_c|
  std::vector<bool> layer_onto;     // projected layer spans C's layer
};

SplitFiltrationReport check_split_filtration(const SplitSequence& seq, int p,
                                             int c_max,
                                             unsigned long long limit = 1ull
                                                                        << 20);

// one containment instance of [gamma_m of sigma(C), gamma_n of A] inside
// gamma_{m+n} of A: u is a B-word from the left subgroup, v an A-word, and
// the commutator must die in A's class-(m+n-1) quotient
bool lemma_fr_check(const SplitSequence& seq, int p, int m, int n,
                    const Word& u, const Word& v,
                    unsigned long long limit = 1ull << 20);

// the same containment over deterministic pools of weight-m and weight-n
// expressions, driven by a seeded generator
bool lemma_fr_sample(const SplitSequence& seq, int p, int m, int n,
                     int samples, unsigned seed = 7,
                     unsigned long long limit = 1ull << 20);

struct WitnessReport {
  bool found = false;
  int cls = 0;            // minimal class with nontrivial image
  std::vector<int> image; // normal word in that quotient
  std::string order;      // order of the quotient exhibiting it
};

// minimal filtration class whose quotient separates w from the identity;
// found=false reports exhaustion of c_max, never triviality
WitnessReport witness(const Word& w, const GroupSpec& spec, int p = 2,
                      int c_max = 4, unsigned long long limit = 1ull << 20);

} // namespace nbraid
