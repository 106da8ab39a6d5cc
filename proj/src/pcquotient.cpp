#include "nbraid/pcquotient.hpp"

#include <algorithm>
#include <deque>

#include "nbraid/gfp.hpp"

namespace nbraid {

namespace {

using NF = std::vector<int>;
using Syl = std::pair<int, int>; // generator index, exponent in [1, p)

std::vector<Syl> syllables(const NF& v) {
  std::vector<Syl> out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (v[i]) out.push_back({i, v[i]});
  return out;
}

// Collection from the left.  Power and commutator words only mention
// higher-index generators, which is what makes the rewriting terminate.
struct Collector {
  int p;
  const std::vector<NF>& power;
  const std::vector<std::vector<NF>>& comm;

  int m() const { return static_cast<int>(power.size()); }

  NF collect(std::deque<Syl> pending) const {
    NF e(m(), 0);
    while (!pending.empty()) {
      auto [g, a] = pending.front();
      pending.pop_front();
      if (a <= 0) continue;
      int s = -1;
      for (int t = m() - 1; t > g; --t)
        if (e[t]) {
          s = t;
          break;
        }
      if (s < 0) {
        e[g] += a;
        if (e[g] >= p) {
          e[g] -= p;
          // g^p expands in place; everything right of position g is clear
          auto ins = syllables(power[g]);
          pending.insert(pending.begin(), ins.begin(), ins.end());
        }
        continue;
      }
      // move g^a past the trailing syllable s^{e_s}:
      //   s^{e_s} g^a = s^{e_s-1} g s [s,g] g^{a-1}
      int es = e[s];
      e[s] = 0;
      std::vector<Syl> ins;
      if (es > 1) ins.push_back({s, es - 1});
      ins.push_back({g, 1});
      ins.push_back({s, 1});
      auto cw = syllables(comm[s][g]);
      ins.insert(ins.end(), cw.begin(), cw.end());
      if (a > 1) ins.push_back({g, a - 1});
      pending.insert(pending.begin(), ins.begin(), ins.end());
    }
    return e;
  }

  void push_back_nf(std::deque<Syl>& d, const NF& v) const {
    for (const auto& s : syllables(v)) d.push_back(s);
  }

  // top-down inverses: g_i^-1 = g_i^{p-1} (g_i^p)^-1
  std::vector<NF> inverses() const {
    std::vector<NF> inv(m());
    for (int i = m() - 1; i >= 0; --i) {
      std::deque<Syl> d;
      d.push_back({i, p - 1});
      for (int t = m() - 1; t > i; --t)
        for (int rep = 0; rep < power[i][t]; ++rep) push_back_nf(d, inv[t]);
      inv[i] = collect(d);
    }
    return inv;
  }

  NF inverse_of(const NF& v, const std::vector<NF>& inv) const {
    std::deque<Syl> d;
    for (int t = m() - 1; t >= 0; --t)
      for (int rep = 0; rep < v[t]; ++rep) push_back_nf(d, inv[t]);
    return collect(d);
  }
};

struct Slot {
  char kind; // 'p' power of a, 'c' commutator (a, b) with a > b, 'x' image of input a
  int a, b;
};

std::string slot_label(const Slot& s) {
  if (s.kind == 'p') return "power " + std::to_string(s.a);
  if (s.kind == 'c')
    return "comm " + std::to_string(s.a) + " " + std::to_string(s.b);
  return "image " + std::to_string(s.a);
}

void check_order(int p, int gens, unsigned long long limit) {
  unsigned long long acc = 1;
  for (int i = 0; i < gens; ++i) {
    if (acc > limit / p)
      fail(Errc::resource_limit, "quotient order passes the configured cap");
    acc *= p;
  }
  if (acc > limit)
    fail(Errc::resource_limit, "quotient order passes the configured cap");
}

// one class extension; false when the filtration has stabilized
bool extend(PcQuotient& q, unsigned long long limit) {
  const int p = q.p, m = q.ngens(), c = q.cls;
  const int nin = static_cast<int>(q.pres.generators.size());

  std::vector<char> def_pow(m, 0), def_img(nin, 0);
  std::vector<std::vector<char>> def_com(m);
  for (int j = 0; j < m; ++j) def_com[j].assign(j, 0);
  for (int t = 0; t < m; ++t) {
    int a = 0, b = 0;
    if (std::sscanf(q.definition[t].c_str(), "power %d", &a) == 1)
      def_pow[a] = 1;
    else if (std::sscanf(q.definition[t].c_str(), "comm %d %d", &a, &b) == 2)
      def_com[a][b] = 1;
    else if (std::sscanf(q.definition[t].c_str(), "image %d", &a) == 1)
      def_img[a] = 1;
  }

  std::vector<Slot> slots;
  for (int i = 0; i < m; ++i)
    if (!def_pow[i]) slots.push_back({'p', i, 0});
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i)
      if (!def_com[j][i] && q.weight[i] + q.weight[j] <= c + 1)
        slots.push_back({'c', j, i});
  for (int k = 0; k < nin; ++k)
    if (!def_img[k]) slots.push_back({'x', k, 0});

  const int T = static_cast<int>(slots.size());
  const int M = m + T;

  auto widen = [&](const NF& v) {
    NF w(M, 0);
    std::copy(v.begin(), v.end(), w.begin());
    return w;
  };
  std::vector<NF> powerE(M), imagesE(nin);
  std::vector<std::vector<NF>> commE(M);
  for (int i = 0; i < m; ++i) powerE[i] = widen(q.power[i]);
  for (int i = m; i < M; ++i) powerE[i] = NF(M, 0);
  for (int j = 0; j < M; ++j) {
    commE[j].assign(j, NF(M, 0));
    for (int i = 0; i < j && j < m; ++i) commE[j][i] = widen(q.comm[j][i]);
  }
  for (int k = 0; k < nin; ++k) imagesE[k] = widen(q.images[k]);
  for (int t = 0; t < T; ++t) {
    const Slot& s = slots[t];
    if (s.kind == 'p')
      powerE[s.a][m + t] = 1;
    else if (s.kind == 'c')
      commE[s.a][s.b][m + t] = 1;
    else
      imagesE[s.a][m + t] = 1;
  }

  Collector col{p, powerE, commE};
  const std::vector<NF> invE = col.inverses();

  FpMatrix rows;
  rows.p = p;
  rows.cols = T;
  auto add_diff = [&](const NF& u, const NF& v) {
    for (int i = 0; i < m; ++i)
      if (u[i] != v[i])
        fail(Errc::internal, "consistency mismatch below the new class");
    std::vector<int> r(T, 0);
    bool nonzero = false;
    for (int t = 0; t < T; ++t) {
      r[t] = mod_p(u[m + t] - v[m + t], p);
      nonzero |= r[t] != 0;
    }
    if (nonzero) rows.add_row(std::move(r));
  };

  // associativity checks over the old generators; tail generators are
  // central of order p, so triples touching them are consistent for free
  for (int k = 2; k < m; ++k)
    for (int j = 1; j < k; ++j)
      for (int i = 0; i < j; ++i) {
        NF ji = col.collect({{j, 1}, {i, 1}});
        std::deque<Syl> du;
        du.push_back({k, 1});
        col.push_back_nf(du, ji);
        NF kj = col.collect({{k, 1}, {j, 1}});
        std::deque<Syl> dv;
        col.push_back_nf(dv, kj);
        dv.push_back({i, 1});
        add_diff(col.collect(du), col.collect(dv));
      }
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) {
      NF ji = col.collect({{j, 1}, {i, 1}});
      // (g_j g_i) g_i^{p-1} versus g_j g_i^p
      std::deque<Syl> du;
      col.push_back_nf(du, ji);
      du.push_back({i, p - 1});
      std::deque<Syl> dv;
      dv.push_back({j, 1});
      col.push_back_nf(dv, powerE[i]);
      add_diff(col.collect(du), col.collect(dv));
      // g_j^{p-1} (g_j g_i) versus g_j^p g_i
      std::deque<Syl> du2;
      du2.push_back({j, p - 1});
      col.push_back_nf(du2, ji);
      std::deque<Syl> dv2;
      col.push_back_nf(dv2, powerE[j]);
      dv2.push_back({i, 1});
      add_diff(col.collect(du2), col.collect(dv2));
    }
  for (int i = 0; i < m; ++i) {
    std::deque<Syl> du;
    du.push_back({i, 1});
    col.push_back_nf(du, powerE[i]);
    std::deque<Syl> dv;
    col.push_back_nf(dv, powerE[i]);
    dv.push_back({i, 1});
    add_diff(col.collect(du), col.collect(dv));
  }

  // the original relators must keep dying
  std::vector<NF> invImg(nin);
  for (int k = 0; k < nin; ++k) invImg[k] = col.inverse_of(imagesE[k], invE);
  for (const auto& rel : q.pres.relators) {
    std::deque<Syl> d;
    for (const auto& l : rel.letters()) {
      int k = q.pres.generator_index(l.sym);
      col.push_back_nf(d, l.sign > 0 ? imagesE[k] : invImg[k]);
    }
    add_diff(col.collect(d), NF(M, 0));
  }

  std::vector<std::size_t> pivots = rref(rows);
  std::vector<int> pivot_row(T, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    pivot_row[pivots[r]] = static_cast<int>(r);

  std::vector<int> survivor_rank(T, -1);
  int S = 0;
  for (int t = 0; t < T; ++t)
    if (pivot_row[t] < 0) survivor_rank[t] = S++;
  if (S == 0) return false;
  check_order(p, m + S, limit);

  const int Mf = m + S;
  auto transform = [&](const NF& v) {
    NF w(Mf, 0);
    std::copy(v.begin(), v.begin() + m, w.begin());
    for (int t = 0; t < T; ++t) {
      int a = v[m + t];
      if (!a) continue;
      if (survivor_rank[t] >= 0) {
        w[m + survivor_rank[t]] = mod_p(w[m + survivor_rank[t]] + a, p);
      } else {
        const auto& row = rows.rows[pivot_row[t]];
        for (int u = 0; u < T; ++u) {
          if (u == t || !row[u]) continue;
          w[m + survivor_rank[u]] =
              mod_p(w[m + survivor_rank[u]] - a * row[u], p);
        }
      }
    }
    return w;
  };

  std::vector<NF> powerF(Mf, NF(Mf, 0));
  std::vector<std::vector<NF>> commF(Mf);
  for (int j = 0; j < Mf; ++j) commF[j].assign(j, NF(Mf, 0));
  for (int i = 0; i < m; ++i) powerF[i] = transform(powerE[i]);
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i) commF[j][i] = transform(commE[j][i]);
  for (int k = 0; k < nin; ++k) q.images[k] = transform(imagesE[k]);

  q.power = std::move(powerF);
  q.comm = std::move(commF);
  for (int t = 0; t < T; ++t)
    if (survivor_rank[t] >= 0) {
      q.weight.push_back(c + 1);
      q.definition.push_back(slot_label(slots[t]));
    }
  Collector colF{p, q.power, q.comm};
  q.invgen = colF.inverses();
  q.cls = c + 1;
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

} // namespace

std::vector<int> H1Map::project(const Word& w) const {
  std::vector<int> v(dim, 0);
  for (const auto& l : w.letters()) {
    int k = -1;
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
      if (gens[i] == l.sym) {
        k = i;
        break;
      }
    if (k < 0) fail(Errc::syntax, "letter outside the presentation");
    for (int i = 0; i < dim; ++i)
      v[i] = mod_p(v[i] + l.sign * columns[k][i], p);
  }
  return v;
}

H1Map h1_mod_p(const Presentation& pres, int p) {
  if (!is_prime(p)) fail(Errc::unsupported, "modulus must be prime");
  const int q = static_cast<int>(pres.generators.size());
  FpMatrix mx;
  mx.p = p;
  mx.cols = q;
  for (const auto& rel : pres.relators) {
    std::vector<int> row(q, 0);
    for (const auto& l : rel.letters()) {
      int k = pres.generator_index(l.sym);
      row[k] = mod_p(row[k] + l.sign, p);
    }
    mx.add_row(std::move(row));
  }
  std::vector<std::size_t> pivots = rref(mx);
  std::vector<int> pivot_row(q, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    pivot_row[pivots[r]] = static_cast<int>(r);

  H1Map h;
  h.p = p;
  h.gens = pres.generators;
  h.dim = q - static_cast<int>(pivots.size());
  std::vector<int> rank(q, -1);
  int d = 0;
  for (int k = 0; k < q; ++k)
    if (pivot_row[k] < 0) rank[k] = d++;
  h.columns.assign(q, std::vector<int>(h.dim, 0));
  for (int k = 0; k < q; ++k) {
    if (pivot_row[k] >= 0) {
      const auto& row = mx.rows[pivot_row[k]];
      for (int j = 0; j < q; ++j)
        if (j != k && row[j]) h.columns[k][rank[j]] = mod_p(-row[j], p);
    } else {
      h.columns[k][rank[k]] = 1;
    }
  }
  return h;
}

std::vector<int> PcQuotient::multiply(const std::vector<int>& u,
                                      const std::vector<int>& v) const {
  Collector col{p, power, comm};
  std::deque<Syl> d;
  col.push_back_nf(d, u);
  col.push_back_nf(d, v);
  return col.collect(d);
}

std::vector<int> PcQuotient::inverse_nf(const std::vector<int>& u) const {
  Collector col{p, power, comm};
  return col.inverse_of(u, invgen);
}

std::vector<int> PcQuotient::image(const Word& w) const {
  Collector col{p, power, comm};
  std::deque<Syl> d;
  for (const auto& l : w.letters()) {
    int k = pres.generator_index(l.sym);
    if (k < 0) fail(Errc::syntax, "letter outside the presentation");
    col.push_back_nf(d, l.sign > 0 ? images[k] : col.inverse_of(images[k],
                                                                invgen));
  }
  return col.collect(d);
}

bool PcQuotient::trivial_image(const Word& w) const {
  return image(w) == identity();
}

std::vector<int> PcQuotient::layer_ranks() const {
  std::vector<int> r(cls, 0);
  for (int w : weight) ++r[w - 1];
  return r;
}

std::string power_string(int p, int e) {
  std::vector<int> digits{1};
  for (int i = 0; i < e; ++i) {
    int carry = 0;
    for (int& d : digits) {
      int v = d * p + carry;
      d = v % 10;
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(carry % 10);
      carry /= 10;
    }
  }
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    s += static_cast<char>('0' + *it);
  return s;
}

std::string PcQuotient::order_string() const {
  return power_string(p, ngens());
}

PcQuotient p_quotient(const Presentation& pres, int p, int c,
                      unsigned long long limit) {
  if (!is_prime(p)) fail(Errc::unsupported, "modulus must be prime");
  if (c < 1) fail(Errc::unsupported, "class must be at least 1");

  PcQuotient q;
  q.p = p;
  q.pres = pres;

  const int nin = static_cast<int>(pres.generators.size());
  H1Map h = h1_mod_p(pres, p);
  const int d = h.dim;
  check_order(p, d, limit);

  q.cls = 1;
  q.weight.assign(d, 1);
  q.power.assign(d, NF(d, 0));
  q.comm.assign(d, {});
  for (int j = 0; j < d; ++j) q.comm[j].assign(j, NF(d, 0));
  q.images.assign(nin, NF(d, 0));
  for (int k = 0; k < nin; ++k)
    for (int i = 0; i < d; ++i) q.images[k][i] = h.columns[k][i];
  // each weight-1 generator is defined by the first input whose image
  // is exactly that generator; the basis construction guarantees one exists
  std::vector<int> def_of(d, -1);
  for (int k = 0; k < nin; ++k) {
    int t = -1;
    bool unit = true;
    for (int i = 0; i < d && unit; ++i) {
      if (h.columns[k][i] == 0) continue;
      if (h.columns[k][i] != 1 || t >= 0)
        unit = false;
      else
        t = i;
    }
    if (unit && t >= 0 && def_of[t] < 0) def_of[t] = k;
  }
  for (int t = 0; t < d; ++t) {
    if (def_of[t] < 0)
      fail(Errc::internal, "abelianization basis bookkeeping failed");
    q.definition.push_back("image " + std::to_string(def_of[t]));
  }
  Collector col{p, q.power, q.comm};
  q.invgen = col.inverses();

  while (q.cls < c) {
    if (!extend(q, limit)) break;
  }
  q.cls = c; // stabilization presents every deeper quotient too
  return q;
}

FiltrationReport filtration_report(const PcQuotient& q) {
  FiltrationReport rep;
  rep.p = q.p;
  rep.ranks = q.layer_ranks();
  int acc = 0;
  for (int k = 0; k < q.cls; ++k) {
    acc += rep.ranks[k];
    rep.orders.push_back(power_string(q.p, acc));
  }
  return rep;
}

} // namespace nbraid
