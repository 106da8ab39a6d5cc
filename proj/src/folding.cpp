#include "nbraid/folding.hpp"

#include <map>
#include <numeric>

namespace nbraid {

namespace {

// letters over basis indices
using IL = std::pair<int, int>;
using IWord = std::vector<IL>;

IWord ireduce(const IWord& in) {
  IWord out;
  for (const auto& l : in) {
    if (!out.empty() && out.back().first == l.first &&
        out.back().second == -l.second)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

IWord iinverse(const IWord& w) {
  IWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.second = -l.second;
  return out;
}

IWord imul(const IWord& a, const IWord& b) {
  IWord c = a;
  c.insert(c.end(), b.begin(), b.end());
  return ireduce(c);
}

struct Edge {
  int src, dst;
  int label;
  IWord voltage; // over petal indices, read along src -> dst
  bool alive = true;
};

struct Graph {
  std::vector<int> parent;
  std::vector<Edge> edges;

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  int vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }

  // gauge all voltages at y by delta, then absorb y into x
  void merge(int x, int y, const IWord& delta) {
    for (auto& e : edges) {
      if (!e.alive) continue;
      IWord v = e.voltage;
      if (find(e.dst) == y) v = imul(v, delta);
      if (find(e.src) == y) v = imul(iinverse(delta), v);
      e.voltage = std::move(v);
    }
    parent[y] = x;
  }
};

} // namespace

std::vector<Word> invert_automorphism(
    const std::vector<GeneratorSymbol>& gens,
    const std::vector<Word>& images) {
  const int rank = static_cast<int>(gens.size());
  if (images.size() != gens.size())
    fail(Errc::not_invertible, "one image per generator required");

  std::map<GeneratorSymbol, int> id;
  for (int i = 0; i < rank; ++i) id[gens[i]] = i;

  Graph g;
  const int base = g.vertex();
  for (int i = 0; i < rank; ++i) {
    const auto& ls = images[i].letters();
    if (ls.empty())
      fail(Errc::not_invertible, "generator image is the empty word");
    int cur = base;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      auto it = id.find(ls[k].sym);
      if (it == id.end())
        fail(Errc::not_invertible,
             "image letter " + format_symbol(ls[k].sym) +
                 " is outside the basis");
      const int next = k + 1 == ls.size() ? base : g.vertex();
      const bool last = k + 1 == ls.size();
      IWord volt;
      if (last) volt.push_back({i, ls[k].sign});
      if (ls[k].sign > 0)
        g.edges.push_back({cur, next, it->second, volt, true});
      else
        g.edges.push_back({next, cur, it->second, volt, true});
      cur = next;
    }
  }

  // fold until deterministic in both directions
  bool again = true;
  while (again) {
    again = false;
    // (vertex, label, out?) -> first edge seen
    std::map<std::tuple<int, int, bool>, std::size_t> seen;
    for (std::size_t ei = 0; ei < g.edges.size() && !again; ++ei) {
      auto& e = g.edges[ei];
      if (!e.alive) continue;
      for (const bool out : {true, false}) {
        const int v = g.find(out ? e.src : e.dst);
        auto key = std::make_tuple(v, e.label, out);
        auto [it, fresh] = seen.emplace(key, ei);
        if (fresh) continue;
        Edge& f = g.edges[it->second];
        // two edges with the same label leave v in the same direction
        int ex = g.find(out ? e.dst : e.src);
        int fx = g.find(out ? f.dst : f.src);
        if (ex == fx) {
          if (e.voltage != f.voltage)
            fail(Errc::not_invertible, "images are not independent");
          e.alive = false;
        } else {
          int keep = ex, drop = fx;
          const IWord &ev = e.voltage, &fv = f.voltage;
          IWord delta = out ? imul(iinverse(fv), ev)   // into drop
                            : imul(fv, iinverse(ev)); // out of drop
          if (drop == base) {
            keep = fx;
            drop = ex;
            delta = out ? imul(iinverse(ev), fv) : imul(ev, iinverse(fv));
          }
          g.merge(keep, drop, delta);
        }
        again = true;
        break;
      }
    }
  }

  // each generator must survive as a voltage-carrying loop at the base
  std::vector<IWord> traced(rank);
  for (int j = 0; j < rank; ++j) {
    bool found = false;
    for (const auto& e : g.edges) {
      if (!e.alive || e.label != j) continue;
      if (g.find(e.src) != base || g.find(e.dst) != base) continue;
      traced[j] = e.voltage;
      found = true;
      break;
    }
    if (!found)
      fail(Errc::not_invertible,
           "images generate a proper subgroup of the free group");
  }

  std::vector<Word> out(rank);
  for (int j = 0; j < rank; ++j) {
    std::vector<Letter> ls;
    for (const auto& l : traced[j])
      ls.push_back({gens[l.first], l.second});
    out[j] = Word(std::move(ls));
  }

  // certify: mapping the result through the forward images returns each
  // generator on the nose
  SymbolMap forward = [&](const GeneratorSymbol& s) -> std::optional<Word> {
    auto it = id.find(s);
    if (it == id.end()) return std::nullopt;
    return images[it->second];
  };
  for (int j = 0; j < rank; ++j) {
    if (substitute(out[j], forward) != letter_word(gens[j]))
      fail(Errc::internal, "folding produced an incorrect inverse");
  }
  return out;
}

} // namespace nbraid
