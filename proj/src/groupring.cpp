#include "nbraid/groupring.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>
#include <utility>

#include "nbraid/error.hpp"
#include "nbraid/words.hpp"

namespace nbraid {

namespace {

constexpr int kOrderCap = 4096;

std::vector<int> set_bits(const BitVec& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) out.push_back(static_cast<int>(i));
  return out;
}

BitVec shift_right(const BitVec& v, const std::vector<int>& perm) {
  BitVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) out.set(perm[i]);
  return out;
}

} // namespace

int quotient_order_int(const PcQuotient& q) {
  long long n = 1;
  for (int i = 0; i < q.ngens(); ++i) {
    n *= q.p;
    if (n > kOrderCap)
      fail(Errc::resource_limit,
           "quotient order exceeds the dense group ring cap of " +
               std::to_string(kOrderCap));
  }
  return static_cast<int>(n);
}

int nf_id(const PcQuotient& q, const std::vector<int>& nf) {
  int id = 0;
  for (std::size_t i = nf.size(); i-- > 0;) id = id * q.p + nf[i];
  return id;
}

std::vector<int> id_nf(const PcQuotient& q, int id) {
  std::vector<int> nf(q.ngens(), 0);
  for (std::size_t i = 0; i < nf.size(); ++i) {
    nf[i] = id % q.p;
    id /= q.p;
  }
  return nf;
}

int id_mul(const PcQuotient& q, int u, int v) {
  return nf_id(q, q.multiply(id_nf(q, u), id_nf(q, v)));
}

int id_inv(const PcQuotient& q, int u) {
  return nf_id(q, q.inverse_nf(id_nf(q, u)));
}

std::vector<Gf2Basis> aug_power_chain(
    int n, const std::function<int(int, int)>& mul,
    const std::vector<int>& gens, int k_max) {
  if (n <= 0 || k_max < 0) fail(Errc::syntax, "bad augmentation chain shape");
  if (n > kOrderCap)
    fail(Errc::resource_limit,
         "group order exceeds the dense group ring cap of " +
             std::to_string(kOrderCap));
  std::vector<std::vector<int>> perm(gens.size(), std::vector<int>(n));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int x = 0; x < n; ++x) perm[g][x] = mul(x, gens[g]);

  std::vector<Gf2Basis> chain;
  Gf2Basis whole{static_cast<std::size_t>(n)};
  for (int x = 0; x < n; ++x) {
    BitVec v(n);
    v.set(x);
    whole.insert(v);
  }
  chain.push_back(whole);

  for (int k = 1; k <= k_max; ++k) {
    Gf2Basis next{static_cast<std::size_t>(n)};
    // seed with b * (g - 1) for every basis row b of the previous power
    for (const BitVec& b : chain.back().rows()) {
      for (std::size_t g = 0; g < gens.size(); ++g) {
        BitVec v = shift_right(b, perm[g]);
        v ^= b;
        next.insert(v);
      }
    }
    // close under the right action of the generators, making a right ideal
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<BitVec> snap = next.rows();
      for (const BitVec& b : snap)
        for (std::size_t g = 0; g < gens.size(); ++g)
          if (next.insert(shift_right(b, perm[g]))) grew = true;
    }
    chain.push_back(next);
  }
  return chain;
}

std::vector<Gf2Basis> aug_power_chain(const PcQuotient& q, int k_max) {
  int n = quotient_order_int(q);
  std::vector<int> gens;
  for (const auto& img : q.images) {
    int id = nf_id(q, img);
    if (id != 0 && std::find(gens.begin(), gens.end(), id) == gens.end())
      gens.push_back(id);
  }
  auto mul = [&q](int u, int v) { return id_mul(q, u, v); };
  return aug_power_chain(n, mul, gens, k_max);
}

Gf2Basis aug_power_basis(const PcQuotient& q, int k) {
  return aug_power_chain(q, k).back();
}

int SemidirectRing::mul(int u, int v) const {
  int ia = id_mul(qa, a_part(u), act[c_part(u)][a_part(v)]);
  int ic = id_mul(qc, c_part(u), c_part(v));
  return pair_id(ia, ic);
}

int SemidirectRing::inv(int u) const {
  int ici = id_inv(qc, c_part(u));
  return pair_id(act[ici][id_inv(qa, a_part(u))], ici);
}

std::vector<int> SemidirectRing::gens() const {
  std::vector<int> out;
  auto push = [&out](int id) {
    if (id != 0 && std::find(out.begin(), out.end(), id) == out.end())
      out.push_back(id);
  };
  for (const auto& img : qa.images) push(pair_id(nf_id(qa, img), 0));
  for (const auto& img : qc.images) push(pair_id(0, nf_id(qc, img)));
  return out;
}

namespace {

struct CayleyTree {
  std::vector<int> order;   // BFS order, root first
  std::vector<int> parent;  // by element id
  std::vector<int> via;     // generator index used to reach the element
};

CayleyTree bfs_tree(int n, const PcQuotient& q, const std::vector<int>& gens) {
  CayleyTree t;
  t.parent.assign(n, -1);
  t.via.assign(n, -1);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  t.order.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    int x = t.order[head];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int y = id_mul(q, x, gens[g]);
      if (seen[y]) continue;
      seen[y] = 1;
      t.parent[y] = x;
      t.via[y] = static_cast<int>(g);
      t.order.push_back(y);
    }
  }
  if (t.order.size() != static_cast<std::size_t>(n))
    fail(Errc::internal, "generator images do not span the quotient");
  return t;
}

} // namespace

SemidirectRing semidirect(const PcQuotient& qa, const PcQuotient& qc,
                          const std::vector<std::vector<Word>>& action_words) {
  SemidirectRing R;
  R.qa = qa;
  R.qc = qc;
  R.na = quotient_order_int(qa);
  R.nc = quotient_order_int(qc);
  if (static_cast<long long>(R.na) * R.nc > kOrderCap)
    fail(Errc::resource_limit,
         "pair group order exceeds the dense group ring cap of " +
             std::to_string(kOrderCap));
  R.n = R.na * R.nc;
  R.e = 0;

  std::size_t agens = qa.pres.generators.size();
  std::size_t cgens = qc.pres.generators.size();
  if (action_words.size() != cgens)
    fail(Errc::syntax, "need one action row per cokernel generator");
  for (const auto& row : action_words)
    if (row.size() != agens)
      fail(Errc::syntax, "need one action word per kernel generator");

  std::vector<int> a_imgs(agens), c_imgs(cgens);
  for (std::size_t i = 0; i < agens; ++i) a_imgs[i] = nf_id(qa, qa.images[i]);
  for (std::size_t i = 0; i < cgens; ++i) c_imgs[i] = nf_id(qc, qc.images[i]);

  // image of each kernel generator under conjugation by each cokernel
  // generator, pushed down to the kernel quotient
  R.gen_act_images.assign(cgens, std::vector<int>(agens, 0));
  for (std::size_t ci = 0; ci < cgens; ++ci)
    for (std::size_t ai = 0; ai < agens; ++ai)
      R.gen_act_images[ci][ai] = nf_id(qa, qa.image(action_words[ci][ai]));

  // spread each generator automorphism over the whole kernel quotient
  // along a Cayley tree, then check it is a bijection
  CayleyTree atree = bfs_tree(R.na, qa, a_imgs);
  std::vector<std::vector<int>> sigma(cgens, std::vector<int>(R.na, 0));
  for (std::size_t ci = 0; ci < cgens; ++ci) {
    for (std::size_t head = 1; head < atree.order.size(); ++head) {
      int x = atree.order[head];
      sigma[ci][x] = id_mul(qa, sigma[ci][atree.parent[x]],
                            R.gen_act_images[ci][atree.via[x]]);
    }
    std::vector<char> hit(R.na, 0);
    for (int x = 0; x < R.na; ++x) {
      if (hit[sigma[ci][x]])
        fail(Errc::precondition_failed,
             "action words do not define an automorphism of the kernel "
             "quotient");
      hit[sigma[ci][x]] = 1;
    }
  }

  // action of every cokernel element, composed along a Cayley tree of C
  CayleyTree ctree = bfs_tree(R.nc, qc, c_imgs);
  R.act.assign(R.nc, std::vector<int>(R.na, 0));
  for (int x = 0; x < R.na; ++x) R.act[0][x] = x;
  for (std::size_t head = 1; head < ctree.order.size(); ++head) {
    int y = ctree.order[head];
    const std::vector<int>& base = R.act[ctree.parent[y]];
    const std::vector<int>& step = sigma[ctree.via[y]];
    for (int x = 0; x < R.na; ++x) R.act[y][x] = base[step[x]];
  }
  return R;
}

bool action_trivial_h1(const SemidirectRing& R) {
  for (std::size_t ci = 0; ci < R.gen_act_images.size(); ++ci) {
    for (std::size_t ai = 0; ai < R.gen_act_images[ci].size(); ++ai) {
      std::vector<int> moved = id_nf(R.qa, R.gen_act_images[ci][ai]);
      const std::vector<int>& base = R.qa.images[ai];
      for (int t = 0; t < R.qa.ngens(); ++t)
        if (R.qa.weight[t] == 1 && moved[t] != base[t]) return false;
    }
  }
  return true;
}

std::vector<Gf2Basis> aug_power_chain(const SemidirectRing& R, int k_max) {
  auto mul = [&R](int u, int v) { return R.mul(u, v); };
  return aug_power_chain(R.n, mul, R.gens(), k_max);
}

namespace {

void check_factor(const SemidirectRing& R, const SpecialFactor& f) {
  if (f.elt < 0 || f.elt >= R.n) fail(Errc::syntax, "factor id out of range");
  if (f.in_c && R.a_part(f.elt) != 0)
    fail(Errc::syntax, "cokernel factor has a kernel component");
  if (!f.in_c && R.c_part(f.elt) != 0)
    fail(Errc::syntax, "kernel factor has a cokernel component");
}

} // namespace

BitVec evaluate_product(const SemidirectRing& R,
                        const std::vector<SpecialFactor>& factors, int mult) {
  if (mult < 0 || mult >= R.n) fail(Errc::syntax, "multiplier out of range");
  BitVec acc(R.n);
  acc.set(R.e);
  for (const SpecialFactor& f : factors) {
    check_factor(R, f);
    BitVec next(R.n);
    for (int x : set_bits(acc)) {
      next.flip(R.mul(x, f.elt));
      next.flip(x);
    }
    acc = next;
  }
  if (mult != R.e) {
    BitVec next(R.n);
    for (int x : set_bits(acc)) next.set(R.mul(x, mult));
    acc = next;
  }
  return acc;
}

bool is_standard(const std::vector<SpecialFactor>& factors) {
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i].in_c && !factors[i + 1].in_c) return false;
  return true;
}

std::vector<int> factor_type(const std::vector<SpecialFactor>& factors) {
  std::vector<int> t;
  for (const SpecialFactor& f : factors) t.push_back(f.in_c ? 1 : 0);
  return t;
}

int kernel_degree(const CertTerm& t) {
  int d = 0;
  for (const SpecialFactor& f : t.factors)
    if (!f.in_c) ++d;
  return d;
}

int cokernel_degree(const CertTerm& t) {
  int d = 0;
  for (const SpecialFactor& f : t.factors)
    if (f.in_c) ++d;
  return d;
}

namespace {

// one multiplicand in a factorization of a kernel commutator: the value
// is u^2 for a square, u^-1 v^-1 u v otherwise
struct PoolFactor {
  bool square = false;
  int u = 0, v = 0;
};

struct FactorPool {
  std::vector<int> value;
  std::vector<PoolFactor> fac;
};

FactorPool build_pool(const PcQuotient& qa, int na) {
  FactorPool pool;
  std::vector<char> have(na, 0);
  auto push = [&](int val, PoolFactor f) {
    if (val == 0 || have[val]) return;
    have[val] = 1;
    pool.value.push_back(val);
    pool.fac.push_back(f);
  };
  for (int u = 1; u < na; ++u) push(id_mul(qa, u, u), {true, u, 0});
  std::vector<int> inv(na);
  for (int u = 0; u < na; ++u) inv[u] = id_inv(qa, u);
  for (int u = 1; u < na; ++u)
    for (int v = 1; v < na; ++v) {
      int w = id_mul(qa, id_mul(qa, inv[u], inv[v]), id_mul(qa, u, v));
      push(w, {false, u, v});
    }
  return pool;
}

// shortest product of pool values equal to target, found by breadth-first
// search over the kernel quotient, at most four multiplicands
std::vector<PoolFactor> decompose_commutator(const PcQuotient& qa, int na,
                                             const FactorPool& pool,
                                             int target) {
  std::vector<int> depth(na, -1), prev(na, -1), via(na, -1);
  std::deque<int> queue;
  depth[0] = 0;
  queue.push_back(0);
  while (!queue.empty() && depth[target] < 0) {
    int s = queue.front();
    queue.pop_front();
    if (depth[s] == 4) continue;
    for (std::size_t j = 0; j < pool.value.size(); ++j) {
      int t = id_mul(qa, s, pool.value[j]);
      if (depth[t] >= 0) continue;
      depth[t] = depth[s] + 1;
      prev[t] = s;
      via[t] = static_cast<int>(j);
      queue.push_back(t);
    }
  }
  if (depth[target] < 0)
    fail(Errc::search_failure,
         "kernel commutator is not a short product of commutators and "
         "squares");
  std::vector<PoolFactor> out;
  for (int s = target; s != 0; s = prev[s]) out.push_back(pool.fac[via[s]]);
  std::reverse(out.begin(), out.end());
  return out;
}

struct WorkItem {
  std::vector<SpecialFactor> factors;
  int mult = 0;
};

} // namespace

DecompositionCertificate special_reduce(const SemidirectRing& R,
                                        const SpecialElement& e) {
  if (e.factors.empty())
    fail(Errc::syntax, "special element needs at least one factor");
  for (const SpecialFactor& f : e.factors) check_factor(R, f);

  FactorPool pool;
  bool have_pool = false;
  std::map<int, std::vector<PoolFactor>> fcache;

  DecompositionCertificate cert;
  std::deque<WorkItem> work;
  work.push_back({e.factors, R.e});
  long steps = 0;
  while (!work.empty()) {
    if (++steps > (1L << 20))
      fail(Errc::resource_limit, "rewriting exceeded the work cap");
    WorkItem item = std::move(work.front());
    work.pop_front();

    bool zero = false;
    for (const SpecialFactor& f : item.factors)
      if (f.elt == R.e) zero = true;
    if (zero) continue;

    std::size_t q = 0;
    while (q + 1 < item.factors.size() &&
           !(item.factors[q].in_c && !item.factors[q + 1].in_c))
      ++q;
    if (q + 1 >= item.factors.size()) {
      cert.terms.push_back({item.factors, item.mult});
      continue;
    }

    int c = item.factors[q].elt;
    int a = item.factors[q + 1].elt;

    // the two factors in the other order
    WorkItem swapped = item;
    std::swap(swapped.factors[q], swapped.factors[q + 1]);
    work.push_back(std::move(swapped));

    // plus (f - 1) a c tail, with f = c a c^-1 a^-1 in the kernel
    int f = R.mul(R.mul(c, a), R.mul(R.inv(c), R.inv(a)));
    if (f == R.e) continue;
    if (R.c_part(f) != 0)
      fail(Errc::internal, "pair commutator escaped the kernel");
    int fa = R.a_part(f);

    if (!have_pool) {
      pool = build_pool(R.qa, R.na);
      have_pool = true;
    }
    auto it = fcache.find(fa);
    if (it == fcache.end())
      it = fcache.emplace(fa, decompose_commutator(R.qa, R.na, pool, fa))
               .first;
    const std::vector<PoolFactor>& parts = it->second;

    std::vector<SpecialFactor> rest(item.factors.begin() + q + 2,
                                    item.factors.end());
    // push the cokernel factor past the tail by conjugating the tail
    for (SpecialFactor& rf : rest)
      rf.elt = R.mul(R.mul(c, rf.elt), R.inv(c));
    int newmult = R.mul(c, item.mult);
    int aa = R.a_part(a);

    // (x_1 ... x_s - 1) = sum over j of (x_j - 1) x_{j+1} ... x_s
    std::vector<int> tail(parts.size() + 1, 0);
    for (std::size_t j = parts.size(); j-- > 0;) {
      int val = parts[j].square
                    ? id_mul(R.qa, parts[j].u, parts[j].u)
                    : id_mul(R.qa,
                             id_mul(R.qa, id_inv(R.qa, parts[j].u),
                                    id_inv(R.qa, parts[j].v)),
                             id_mul(R.qa, parts[j].u, parts[j].v));
      tail[j] = id_mul(R.qa, val, tail[j + 1]);
    }

    for (std::size_t j = 0; j < parts.size(); ++j) {
      // each multiplicand contributes pairs (y - 1)(y' - 1) beta
      std::vector<std::array<int, 3>> pairs;
      if (parts[j].square) {
        pairs.push_back({parts[j].u, parts[j].u, 0});
      } else {
        int g = id_mul(R.qa, id_inv(R.qa, parts[j].u),
                       id_inv(R.qa, parts[j].v));
        int gi = id_inv(R.qa, g);
        int uc = id_mul(R.qa, id_mul(R.qa, g, parts[j].u), gi);
        int vc = id_mul(R.qa, id_mul(R.qa, g, parts[j].v), gi);
        pairs.push_back({uc, vc, g});
        pairs.push_back({vc, uc, g});
      }
      for (const auto& pr : pairs) {
        // fold the trailing kernel multiplier into the second factor:
        // (y' - 1) m = (y' m - 1) + (m - 1)
        int mu = id_mul(R.qa, id_mul(R.qa, pr[2], tail[j + 1]), aa);
        std::vector<std::pair<int, int>> heads;
        heads.push_back({pr[0], id_mul(R.qa, pr[1], mu)});
        if (mu != 0) heads.push_back({pr[0], mu});
        for (const auto& hd : heads) {
          if (hd.first == 0 || hd.second == 0) continue;
          WorkItem child;
          child.factors.assign(item.factors.begin(),
                               item.factors.begin() + q);
          child.factors.push_back({false, R.pair_id(hd.first, 0)});
          child.factors.push_back({false, R.pair_id(hd.second, 0)});
          child.factors.insert(child.factors.end(), rest.begin(),
                               rest.end());
          child.mult = newmult;
          work.push_back(std::move(child));
        }
      }
    }
  }

  // the certificate must evaluate back to the input element
  BitVec lhs = evaluate_product(R, e.factors, R.e);
  BitVec rhs(R.n);
  for (const CertTerm& t : cert.terms)
    rhs ^= evaluate_product(R, t.factors, t.mult);
  if (!(lhs == rhs)) fail(Errc::internal, "certificate failed its self check");
  return cert;
}

bool verify_certificate(const SemidirectRing& R, const SpecialElement& e,
                        const DecompositionCertificate& cert) {
  BitVec lhs = evaluate_product(R, e.factors, R.e);
  BitVec rhs(R.n);
  for (const CertTerm& t : cert.terms) {
    if (!is_standard(t.factors)) return false;
    rhs ^= evaluate_product(R, t.factors, t.mult);
  }
  return lhs == rhs;
}

bool check_decomposition(const PcQuotient& qa, const PcQuotient& qc,
                         const std::vector<std::vector<Word>>& action_words,
                         int k_max) {
  if (k_max < 0) fail(Errc::syntax, "negative power of the augmentation ideal");
  SemidirectRing R = semidirect(qa, qc, action_words);
  if (!action_trivial_h1(R))
    fail(Errc::precondition_failed,
         "action moves the mod-2 homology of the kernel quotient");

  std::vector<Gf2Basis> chain_q = aug_power_chain(R, k_max);
  std::vector<Gf2Basis> chain_a = aug_power_chain(qa, k_max);
  std::vector<Gf2Basis> chain_c = aug_power_chain(qc, k_max);

  for (int k = 1; k <= k_max; ++k) {
    // candidate: sum over i + h = k of the products I^i(A) I^h(C)
    Gf2Basis rk{static_cast<std::size_t>(R.n)};
    for (int i = 0; i <= k; ++i) {
      int h = k - i;
      for (const BitVec& ra : chain_a[i].rows()) {
        std::vector<int> abits = set_bits(ra);
        for (const BitVec& rc : chain_c[h].rows()) {
          BitVec v(R.n);
          for (int ia : abits)
            for (int ic : set_bits(rc)) v.set(R.pair_id(ia, ic));
          rk.insert(v);
        }
      }
    }
    for (const BitVec& row : rk.rows())
      if (!chain_q[k].contains(row)) return false;
    for (const BitVec& row : chain_q[k].rows())
      if (!rk.contains(row)) return false;
  }
  return true;
}

} // namespace nbraid
