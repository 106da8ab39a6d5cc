#include "nbraid/pi1.hpp"

#include <algorithm>

namespace nbraid {

namespace {

using Pair = std::pair<long, long>;

// (b^j a^i)(b^j' a^i') = b^(j + (-1)^i j') a^(i + i')
Pair pair_mul(Pair l, Pair r) {
  const long sign = (l.second % 2 == 0) ? 1 : -1;
  return {l.first + sign * r.first, l.second + r.second};
}

Pair klein_eval(const Word& w, const std::function<Pair(const Letter&)>& f) {
  Pair acc{0, 0};
  for (const auto& l : w.letters()) acc = pair_mul(acc, f(l));
  return acc;
}

// Flat letters for the small cancellation machinery: (symbol id, sign).
using ILetter = std::pair<int, int>;

std::vector<ILetter> ireduce(const std::vector<ILetter>& in) {
  std::vector<ILetter> out;
  for (const auto& l : in) {
    if (!out.empty() && out.back().first == l.first &&
        out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<ILetter> iinverse(const std::vector<ILetter>& w) {
  std::vector<ILetter> out(w.rbegin(), w.rend());
  for (auto& l : out) l.second = -l.second;
  return out;
}

// Dehn's algorithm for a single C'(1/6) relator: any nontrivial freely
// reduced element of the normal closure contains more than half of a
// cyclic conjugate of the relator, which gets replaced by the shorter
// complement until nothing is left (trivial) or no replacement applies.
bool dehn_trivial(std::vector<ILetter> w, const std::vector<ILetter>& rel) {
  const std::size_t L = rel.size();
  const std::size_t threshold = L / 2 + 1;

  std::vector<std::vector<ILetter>> rotations;
  for (const auto& base : {rel, iinverse(rel)})
    for (std::size_t s = 0; s < L; ++s) {
      std::vector<ILetter> rot(base.begin() + static_cast<long>(s),
                               base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<long>(s));
      rotations.push_back(std::move(rot));
    }

  w = ireduce(w);
  bool changed = true;
  while (changed && !w.empty()) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const auto& rot : rotations) {
        std::size_t m = 0;
        while (m < L && pos + m < w.size() && w[pos + m] == rot[m]) ++m;
        if (m < threshold) continue;
        std::vector<ILetter> next(w.begin(), w.begin() + static_cast<long>(pos));
        std::vector<ILetter> tail(rot.begin() + static_cast<long>(m), rot.end());
        const auto repl = iinverse(tail);
        next.insert(next.end(), repl.begin(), repl.end());
        next.insert(next.end(), w.begin() + static_cast<long>(pos + m), w.end());
        w = ireduce(next);
        changed = true;
        break;
      }
    }
  }
  return w.empty();
}

int p_index(const Letter& l, int g) {
  if (l.sym.kind != Kind::P || l.sym.a < 1 || l.sym.a > g)
    fail(Errc::syntax,
         "surface group words use p[1].." "p[" + std::to_string(g) + "]");
  return l.sym.a;
}

std::vector<ILetter> relator_squares(int g) {
  std::vector<ILetter> rel;
  for (int i = 1; i <= g; ++i) {
    rel.push_back({i, 1});
    rel.push_back({i, 1});
  }
  return rel;
}

// Genus 3 goes through the orientable double cover.  The subgroup of even
// words is rewritten over the Schreier generators a_i = p_i p_1^-1 and
// b_i = p_1 p_i (a_1 drops out), the two rewritten copies of the surface
// relation are  b1 a2 b2 a3 b3  and  b1 b2 a2 b3 a3,  and eliminating b1
// leaves the single C'(1/6) relator below over a2, a3, b2, b3.
constexpr int A2 = 0, A3 = 1, B2 = 2, B3 = 3;

std::vector<ILetter> genus3_relator() {
  return {{B3, -1}, {A3, -1}, {B2, -1}, {A2, -1},
          {B2, 1},  {A2, 1},  {B3, 1},  {A3, 1}};
}

// Schreier generator emitted when crossing the cover; id < 0 means the
// trivial a_1.
int cover_gen(int coset, int i) {
  if (coset == 0) return i == 1 ? -1 : (i == 2 ? A2 : A3);
  return i == 1 ? 4 : (i == 2 ? B2 : B3); // 4 = b1, substituted below
}

std::vector<ILetter> rewrite_to_cover(const Word& w) {
  std::vector<ILetter> out;
  int coset = 0;
  for (const auto& l : w.letters()) {
    const int i = p_index(l, 3);
    if (l.sign > 0) {
      const int id = cover_gen(coset, i);
      coset ^= 1;
      if (id >= 0) out.push_back({id, 1});
    } else {
      coset ^= 1;
      const int id = cover_gen(coset, i);
      if (id >= 0) out.push_back({id, -1});
    }
  }
  // b1 = (a2 b2 a3 b3)^-1 from the first rewritten relation
  std::vector<ILetter> sub;
  const std::vector<ILetter> b1inv = {{A2, 1}, {B2, 1}, {A3, 1}, {B3, 1}};
  for (const auto& l : out) {
    if (l.first != 4) {
      sub.push_back(l);
    } else if (l.second > 0) {
      auto v = iinverse(b1inv);
      sub.insert(sub.end(), v.begin(), v.end());
    } else {
      sub.insert(sub.end(), b1inv.begin(), b1inv.end());
    }
  }
  return ireduce(sub);
}

} // namespace

std::pair<long, long> klein_pair(const Word& w) {
  return klein_eval(w, [](const Letter& l) -> Pair {
    const int i = p_index(l, 2);
    if (i == 1) return l.sign > 0 ? Pair{0, 1} : Pair{0, -1};
    // p2 = b^-1 a^-1, so its inverse is a b = b^-1 a
    return l.sign > 0 ? Pair{-1, -1} : Pair{-1, 1};
  });
}

std::pair<long, long> klein_pair_ab(const Word& w) {
  return klein_eval(w, [](const Letter& l) -> Pair {
    if (l.sym.kind != Kind::Abstract || (l.sym.name != "a" && l.sym.name != "b"))
      fail(Errc::syntax, "expected a word over a, b");
    if (l.sym.name == "a") return {0, l.sign};
    return {l.sign, 0};
  });
}

bool pi1_is_trivial(const Word& w, int g) {
  if (g < 2)
    fail(Errc::unsupported,
         "surface group word problem is supported for genus >= 2");
  for (const auto& l : w.letters()) p_index(l, g);

  if (g == 2) return klein_pair(w) == Pair{0, 0};

  if (g == 3) {
    long parity = 0;
    for (const auto& l : w.letters()) parity += l.sign;
    if (parity % 2 != 0) return false;
    return dehn_trivial(rewrite_to_cover(w), genus3_relator());
  }

  std::vector<ILetter> flat;
  for (const auto& l : w.letters()) flat.push_back({l.sym.a, l.sign});
  return dehn_trivial(flat, relator_squares(g));
}

bool pi1_equal(const Word& u, const Word& v, int g) {
  return pi1_is_trivial(u * inverse(v), g);
}

} // namespace nbraid
