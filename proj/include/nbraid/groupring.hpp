#pragma once
// F2 group rings of finite 2-group quotients: powers of the augmentation
// ideal, the decomposition of those powers across a semidirect product
// whose action is invisible in the kernel's mod-2 homology, and the
// constructive rewriting of special elements into standard ones that
// proves the decomposition.  Everything is dense GF(2) linear algebra
// over the group elements, so orders are capped at 4096.

#include <functional>

#include "nbraid/gfp.hpp"
#include "nbraid/pcquotient.hpp"

namespace nbraid {

// Mixed-radix element ids for a finite quotient: the normal form read as
// base-p digits.  Id 0 is the identity.
int quotient_order_int(const PcQuotient& q); // Errc::resource_limit over cap
int nf_id(const PcQuotient& q, const std::vector<int>& nf);
std::vector<int> id_nf(const PcQuotient& q, int id);
int id_mul(const PcQuotient& q, int u, int v);
int id_inv(const PcQuotient& q, int u);

// Bases of the augmentation ideal powers I^0 .. I^k_max of F2[Q].  I^0 is
// the whole ring; each step multiplies by the ideal and closes under the
// right action of the group generators.
std::vector<Gf2Basis> aug_power_chain(const PcQuotient& q, int k_max);
Gf2Basis aug_power_basis(const PcQuotient& q, int k);

// generic version over an abstract finite group given by a multiplication
// callback and a generating set of ids
std::vector<Gf2Basis> aug_power_chain(
    int n, const std::function<int(int, int)>& mul,
    const std::vector<int>& gens, int k_max);

// Finite semidirect product of two quotients.  Elements are pairs
// (a, c) with id a * nc + c; multiplication twists the second kernel
// coordinate by the action of the first cokernel coordinate.
struct SemidirectRing {
  PcQuotient qa, qc;
  int na = 1, nc = 1, n = 1;
  int e = 0;
  std::vector<std::vector<int>> act; // per C id, permutation of A ids
  std::vector<std::vector<int>> gen_act_images; // C gen x A gen -> A id

  int pair_id(int ia, int ic) const { return ia * nc + ic; }
  int a_part(int u) const { return u / nc; }
  int c_part(int u) const { return u % nc; }
  int mul(int u, int v) const;
  int inv(int u) const;
  std::vector<int> gens() const;
};

// action_words[ci][ai]: the conjugate of A's generator ai by the lift of
// C's generator ci, written as a word over A's generators
SemidirectRing semidirect(const PcQuotient& qa, const PcQuotient& qc,
                          const std::vector<std::vector<Word>>& action_words);

// true when the action fixes H1 of the kernel quotient mod 2, i.e. every
// generator image keeps its weight-1 coordinates
bool action_trivial_h1(const SemidirectRing& R);

std::vector<Gf2Basis> aug_power_chain(const SemidirectRing& R, int k_max);

// A product of (g - 1) factors, each g from the kernel or the cokernel
// copy inside the pair group; elt is a pair id supported on one side.
struct SpecialFactor {
  bool in_c = false;
  int elt = 0;
};

struct SpecialElement {
  std::vector<SpecialFactor> factors;
};

// one summand of a decomposition: a standard product (kernel factors
// first) followed by a right multiplier from the pair group
struct CertTerm {
  std::vector<SpecialFactor> factors;
  int mult = 0;
};

struct DecompositionCertificate {
  std::vector<CertTerm> terms;
};

// support vector of prod (g_j - 1) * mult in F2[pair group]
BitVec evaluate_product(const SemidirectRing& R,
                        const std::vector<SpecialFactor>& factors, int mult);
bool is_standard(const std::vector<SpecialFactor>& factors);

// per-factor tags, 0 for kernel and 1 for cokernel; products are standard
// exactly when this vector is sorted
std::vector<int> factor_type(const std::vector<SpecialFactor>& factors);
int kernel_degree(const CertTerm& t);
int cokernel_degree(const CertTerm& t);

// rewrite a special element as a sum of standard products with right
// multipliers; each swap of a misordered (cokernel, kernel) pair goes
// through the commutator identity and the factorization of the resulting
// kernel commutator into commutators and squares
DecompositionCertificate special_reduce(const SemidirectRing& R,
                                        const SpecialElement& e);

bool verify_certificate(const SemidirectRing& R, const SpecialElement& e,
                        const DecompositionCertificate& cert);

// ideal-power decomposition, checked as mutual containment of echelon
// bases: I^k of the pair ring equals the sum of I^i(A) x I^h(C) over
// i + h = k, for every k up to k_max
bool check_decomposition(const PcQuotient& qa, const PcQuotient& qc,
                         const std::vector<std::vector<Word>>& action_words,
                         int k_max);

} // namespace nbraid
