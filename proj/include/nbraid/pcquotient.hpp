#pragma once
// Finite p-group quotients along the lower exponent-p central series
// gamma_1 = G, gamma_{k+1} = [G, gamma_k] (gamma_k)^p.  The class c
// quotient G/gamma_{c+1} is held as a weighted power-commutator
// presentation: generators g_1..g_m with exponent p, power words g_i^p and
// commutator words [g_j, g_i] (j > i) written in higher-index generators,
// and the images of the original generators.  Normal forms are exponent
// vectors; multiplication is collection from the left.  Each new class
// attaches a central tail generator to every relation that is not the
// definition of an existing generator, then eliminates tails against the
// consistency equations and the original relators over F_p.

#include <string>
#include <vector>

#include "nbraid/presentations.hpp"

namespace nbraid {

// Projection onto the mod p abelianization, computed directly from the
// relator exponent matrix (no collection involved).
struct H1Map {
  int p = 2;
  int dim = 0;
  std::vector<GeneratorSymbol> gens;
  std::vector<std::vector<int>> columns; // per input generator, length dim

  std::vector<int> project(const Word& w) const;
};

H1Map h1_mod_p(const Presentation& pres, int p);

struct PcQuotient {
  int p = 2;
  int cls = 0; // presents G / gamma_{cls+1}
  Presentation pres;
  std::vector<int> weight;                          // per pc generator
  std::vector<std::vector<int>> power;              // g_i^p as normal form
  std::vector<std::vector<std::vector<int>>> comm;  // comm[j][i], j > i
  std::vector<std::vector<int>> images;             // per input generator
  std::vector<std::vector<int>> invgen;             // g_i^-1 as normal form
  std::vector<std::string> definition;              // provenance per generator

  int ngens() const { return static_cast<int>(weight.size()); }
  std::vector<int> identity() const { return std::vector<int>(ngens(), 0); }
  std::vector<int> multiply(const std::vector<int>& u,
                            const std::vector<int>& v) const;
  std::vector<int> inverse_nf(const std::vector<int>& u) const;
  std::vector<int> image(const Word& w) const;
  bool trivial_image(const Word& w) const;
  std::vector<int> layer_ranks() const; // dim gamma_k/gamma_{k+1}, k = 1..cls
  std::string order_string() const;     // p^ngens in decimal
};

struct FiltrationReport {
  int p = 2;
  std::vector<std::string> orders; // |G/gamma_2|, ..., |G/gamma_{cls+1}|
  std::vector<int> ranks;
};

// decimal digits of p^e
std::string power_string(int p, int e);

// Class c quotient; Errc::resource_limit once the order would pass limit.
PcQuotient p_quotient(const Presentation& pres, int p, int c,
                      unsigned long long limit = 1ull << 20);

FiltrationReport filtration_report(const PcQuotient& q);

} // namespace nbraid
