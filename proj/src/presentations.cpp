#include "nbraid/presentations.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace nbraid {

namespace {

Letter L(const GeneratorSymbol& s, int e) { return Letter{s, e}; }

Word W(std::initializer_list<Letter> ls) {
  return Word(std::vector<Letter>(ls));
}

} // namespace

// Right-hand side of c z c^-1 in the surface braid presentations, for a
// conjugating generator c on a strictly higher-strand generator z.  The
// case split follows the interleaving pattern of the strand indices.
Word conjugation_rhs(const GeneratorSymbol& c, const GeneratorSymbol& z) {
  if (strand_level(c) >= strand_level(z))
    fail(Errc::level, "conjugator " + format_symbol(c) +
                          " is not below the level of " + format_symbol(z));
  const Word zw = letter_word(z);

  if (c.kind == Kind::B && z.kind == Kind::B) {
    const int r = c.a, s = c.b, i = z.a, j = z.b;
    auto B = [&](int u, int v, int e) { return L(sym_B(u, v), e); };
    if (i < r || s < i) return zw; // disjoint or nested band pairs
    if (i == s)
      return W({B(i, j, -1), B(r, j, -1), B(i, j, 1), B(r, j, 1),
                B(i, j, 1)});
    if (i == r) return W({B(s, j, -1), B(i, j, 1), B(s, j, 1)});
    // r < i < s
    return W({B(s, j, -1), B(r, j, -1), B(s, j, 1), B(r, j, 1), B(i, j, 1),
              B(r, j, -1), B(s, j, -1), B(r, j, 1), B(s, j, 1)});
  }

  if (c.kind == Kind::B) return zw; // bands act trivially on higher r, x

  if (c.kind == Kind::Rho && z.kind == Kind::B) {
    const int k = c.a, l = c.b, i = z.a, j = z.b;
    if (k < i) return zw;
    auto B = [&](int u, int v, int e) { return L(sym_B(u, v), e); };
    const Letter rj = L(sym_rho(j, l), 1), rj1 = L(sym_rho(j, l), -1);
    if (k == i) return W({rj1, B(i, j, -1), rj});
    // i < k < j
    return W({rj1, B(k, j, -1), rj, B(k, j, -1), B(i, j, 1), B(k, j, 1),
              rj1, B(k, j, 1), rj});
  }

  if (c.kind == Kind::Rho && z.kind == Kind::Rho) {
    const int i = c.a, k = c.b, j = z.a, l = z.b;
    if (k < l) return zw;
    auto B = [&](int e) { return L(sym_B(i, j), e); };
    const Letter rk = L(sym_rho(j, k), 1), rk1 = L(sym_rho(j, k), -1);
    if (k == l) return W({rk1, B(-1), rk, rk});
    // k > l
    return W({rk1, B(-1), rk, B(-1), L(sym_rho(j, l), 1), B(1), rk1, B(1),
              rk});
  }

  if (c.kind == Kind::Rho) return zw; // r acts trivially on higher x

  if (c.kind == Kind::X && z.kind == Kind::B) {
    const int u = c.a, t = c.b, i = z.a, j = z.b;
    if (u < i) return zw;
    auto B = [&](int v, int w, int e) { return L(sym_B(v, w), e); };
    const Letter xj = L(sym_x(j, t), 1), xj1 = L(sym_x(j, t), -1);
    if (u == i) return W({xj1, B(i, j, 1), xj});
    // i < u < j
    return W({xj1, B(u, j, 1), xj, B(u, j, -1), B(i, j, 1), B(u, j, 1), xj1,
              B(u, j, -1), xj});
  }

  if (c.kind == Kind::X && z.kind == Kind::Rho) {
    const int u = c.a, t = c.b, k = z.a, l = z.b;
    auto B = [&](int e) { return L(sym_B(u, k), e); };
    const Letter xk = L(sym_x(k, t), 1), xk1 = L(sym_x(k, t), -1);
    return W({xk1, B(1), xk, B(-1), L(sym_rho(k, l), 1), B(1), xk1, B(-1),
              xk});
  }

  if (c.kind == Kind::X && z.kind == Kind::X) {
    const int i = c.a, t = c.b, j = z.a, s = z.b;
    if (t < s) return zw;
    auto B = [&](int e) { return L(sym_B(i, j), e); };
    const Letter xt = L(sym_x(j, t), 1), xt1 = L(sym_x(j, t), -1);
    if (t == s) return W({xt1, B(1), xt, B(-1), xt});
    // s < t
    return W({xt1, B(1), xt, B(-1), L(sym_x(j, s), 1), B(1), xt1, B(-1),
              xt});
  }

  fail(Errc::level, "no conjugation rule for " + format_symbol(c) + " on " +
                        format_symbol(z));
}

GroupSpec GroupSpec::closed(int g, int n) {
  return {Family::ClosedBraid, g, 0, n, 0, {}};
}
GroupSpec GroupSpec::bordered(int g, int b, int n) {
  return {Family::BorderedBraid, g, b, n, 0, {}};
}
GroupSpec GroupSpec::surface(int g) {
  return {Family::ClosedSurface, g, 0, 0, 0, {}};
}
GroupSpec GroupSpec::free_group(int rank) {
  return {Family::FreeGroup, 0, 0, 0, rank, {}};
}

GroupSpec GroupSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string fam = text.substr(0, colon);
  std::map<std::string, int> kv;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0)
        fail(Errc::syntax, "group parameter must be key=value: " + item);
      std::string key = item.substr(0, eq);
      std::string val = item.substr(eq + 1);
      if (val.empty() ||
          !std::all_of(val.begin(), val.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        fail(Errc::syntax, "group parameter must be a number: " + item);
      if (kv.count(key)) fail(Errc::syntax, "duplicate parameter: " + key);
      kv[key] = std::stoi(val);
    }
  }
  auto take = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end())
      fail(Errc::syntax, "group " + fam + " needs parameter " + key);
    int v = it->second;
    kv.erase(it);
    return v;
  };
  GroupSpec spec;
  if (fam == "closed") {
    int g = take("g"), n = take("n");
    spec = closed(g, n);
  } else if (fam == "bordered") {
    int g = take("g"), b = take("b"), n = take("n");
    spec = bordered(g, b, n);
  } else if (fam == "surface") {
    spec = surface(take("g"));
  } else if (fam == "free") {
    spec = free_group(take("rank"));
  } else if (fam == "klein") {
    spec = {Family::AdHoc, 0, 0, 0, 0, "klein"};
  } else {
    fail(Errc::syntax, "unknown group family: " + fam);
  }
  if (!kv.empty())
    fail(Errc::syntax, "unexpected group parameter: " + kv.begin()->first);
  return spec;
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (family) {
  case Family::ClosedBraid: os << "closed:g=" << g << ",n=" << n; break;
  case Family::BorderedBraid:
    os << "bordered:g=" << g << ",b=" << b << ",n=" << n;
    break;
  case Family::ClosedSurface: os << "surface:g=" << g; break;
  case Family::FreeGroup: os << "free:rank=" << rank; break;
  case Family::AdHoc:
    os << (label == "klein" ? "" : "adhoc:") << label;
    break;
  }
  return os.str();
}

int Presentation::generator_index(const GeneratorSymbol& s) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == s) return static_cast<int>(i);
  return -1;
}

void Presentation::validate_word(const Word& w) const {
  for (const auto& l : w.letters())
    if (generator_index(l.sym) < 0)
      fail(Errc::syntax, "generator " + format_symbol(l.sym) +
                             " does not belong to " + spec.str());
}

namespace {

void push(std::vector<Letter>& out, const Word& w, int e = 1) {
  const Word v = e < 0 ? inverse(w) : w;
  out.insert(out.end(), v.letters().begin(), v.letters().end());
}

// relator  c z c^-1 (c z c^-1)^-1  with the conjugate given by the table
Word conj_relator(const GeneratorSymbol& c, const GeneratorSymbol& z) {
  std::vector<Letter> ls;
  ls.push_back(L(c, 1));
  ls.push_back(L(z, 1));
  ls.push_back(L(c, -1));
  push(ls, inverse(conjugation_rhs(c, z)));
  return Word(std::move(ls));
}

Word commute_relator(const GeneratorSymbol& c, const GeneratorSymbol& z) {
  return W({L(c, 1), L(z, 1), L(c, -1), L(z, -1)});
}

// Shared (a), (b), (d) band and band-handle relator families.
void braid_relators(int g, int n, std::vector<Word>& rel) {
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int s = 2; s < j; ++s)
        for (int r = 1; r < s; ++r)
          rel.push_back(conj_relator(sym_B(r, s), sym_B(i, j)));

  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int k = 1; k <= g; ++k)
        for (int l = 1; l <= g; ++l)
          rel.push_back(conj_relator(sym_rho(i, k), sym_rho(j, l)));

  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int k = 1; k <= n; ++k) {
        if (k == j) continue;
        for (int l = 1; l <= g; ++l) {
          if (k < j)
            rel.push_back(conj_relator(sym_rho(k, l), sym_B(i, j)));
          else
            rel.push_back(commute_relator(sym_rho(k, l), sym_B(i, j)));
        }
      }
}

} // namespace

Word elem_T(const GroupSpec& spec, int i) {
  if (spec.family != Family::ClosedBraid || i < 1 || i > spec.n)
    fail(Errc::unsupported, "T_i lives in the closed braid groups");
  std::vector<Letter> ls;
  for (int r = 1; r < i; ++r) ls.push_back(L(sym_B(r, i), 1));
  for (int j = i + 1; j <= spec.n; ++j) ls.push_back(L(sym_B(i, j), 1));
  return Word(std::move(ls));
}

Word elem_a(const GroupSpec& spec, int k) {
  if (spec.g < 2 || k < 1 || k > spec.n)
    fail(Errc::unsupported, "a_k needs genus >= 2 and a valid strand");
  return W({L(sym_rho(k, spec.g - 1), 1), L(sym_rho(k, spec.g), 1)});
}

Word elem_U(const GroupSpec& spec) {
  Word u;
  for (int k = spec.n; k >= 2; --k) u = u * elem_a(spec, k);
  return u;
}

Word sigma_image(const GroupSpec& spec, int i) {
  if (spec.family != Family::ClosedBraid)
    fail(Errc::unsupported, "the section is defined on closed braid groups");
  const int g = spec.g;
  if (i < 1 || i > g) fail(Errc::unsupported, "p[i] needs 1 <= i <= g");
  if (i <= g - 3) return letter_word(sym_rho(1, i));
  if (i == g - 2) return letter_word(sym_rho(1, g - 2)) * inverse(elem_U(spec));
  if (i == g - 1) return elem_U(spec) * letter_word(sym_rho(1, g - 1));
  return letter_word(sym_rho(1, g)) * inverse(elem_T(spec, 1));
}

Word lambda_image(const Word& w) {
  return substitute(w, [](const GeneratorSymbol& s) -> std::optional<Word> {
    if (s.kind == Kind::Rho)
      return s.a == 1 ? letter_word(sym_p(s.b)) : Word{};
    if (s.kind == Kind::B) return Word{};
    return std::nullopt;
  });
}

Presentation closed_braid(int g, int n) {
  if (g < 2)
    fail(Errc::unsupported,
         "closed braid groups are supported for genus >= 2");
  if (n < 1) fail(Errc::unsupported, "need at least one strand");
  Presentation p;
  p.spec = GroupSpec::closed(g, n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) p.generators.push_back(sym_B(i, j));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= g; ++l) p.generators.push_back(sym_rho(k, l));

  braid_relators(g, n, p.relators);
  for (int i = 1; i <= n; ++i) {
    std::vector<Letter> ls;
    for (int l = 1; l <= g; ++l) {
      ls.push_back(L(sym_rho(i, l), 1));
      ls.push_back(L(sym_rho(i, l), 1));
    }
    push(ls, inverse(elem_T(p.spec, i)));
    p.relators.push_back(Word(std::move(ls)));
  }
  return p;
}

Presentation bordered_braid(int g, int b, int n) {
  if (g < 1)
    fail(Errc::unsupported,
         "bordered braid groups are supported for genus >= 1");
  if (b < 1) fail(Errc::unsupported, "need at least one boundary component");
  if (n < 1) fail(Errc::unsupported, "need at least one strand");
  Presentation p;
  p.spec = GroupSpec::bordered(g, b, n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) p.generators.push_back(sym_B(i, j));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= g; ++l) p.generators.push_back(sym_rho(k, l));
  for (int u = 1; u <= n; ++u)
    for (int t = 1; t <= b - 1; ++t) p.generators.push_back(sym_x(u, t));

  braid_relators(g, n, p.relators);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int u = 1; u <= n; ++u) {
        if (u == j) continue;
        for (int t = 1; t <= b - 1; ++t) {
          if (u < j)
            p.relators.push_back(conj_relator(sym_x(u, t), sym_B(i, j)));
          else
            p.relators.push_back(commute_relator(sym_x(u, t), sym_B(i, j)));
        }
      }
  for (int k = 1; k <= n; ++k)
    for (int u = 1; u <= n; ++u) {
      if (u == k) continue;
      for (int l = 1; l <= g; ++l)
        for (int t = 1; t <= b - 1; ++t) {
          if (u < k)
            p.relators.push_back(conj_relator(sym_x(u, t), sym_rho(k, l)));
          else
            p.relators.push_back(commute_relator(sym_x(u, t), sym_rho(k, l)));
        }
    }
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      for (int t = 1; t <= b - 1; ++t)
        for (int s = 1; s <= b - 1; ++s)
          p.relators.push_back(conj_relator(sym_x(i, t), sym_x(j, s)));
  return p;
}

Presentation surface_group(int g) {
  if (g < 2)
    fail(Errc::unsupported,
         "closed surface groups are supported for genus >= 2");
  Presentation p;
  p.spec = GroupSpec::surface(g);
  for (int i = 1; i <= g; ++i) p.generators.push_back(sym_p(i));
  std::vector<Letter> ls;
  for (int i = 1; i <= g; ++i) {
    ls.push_back(L(sym_p(i), 1));
    ls.push_back(L(sym_p(i), 1));
  }
  p.relators.push_back(Word(std::move(ls)));
  return p;
}

Presentation free_group(int rank) {
  if (rank < 0) fail(Errc::unsupported, "free group rank must be >= 0");
  Presentation p;
  p.spec = GroupSpec::free_group(rank);
  for (int i = 1; i <= rank; ++i)
    p.generators.push_back(sym_abstract("y" + std::to_string(i)));
  return p;
}

Presentation presentation(const GroupSpec& spec) {
  switch (spec.family) {
  case Family::ClosedBraid: return closed_braid(spec.g, spec.n);
  case Family::BorderedBraid: return bordered_braid(spec.g, spec.b, spec.n);
  case Family::ClosedSurface: return surface_group(spec.g);
  case Family::FreeGroup: return free_group(spec.rank);
  case Family::AdHoc:
    if (spec.label == "klein") return klein_bottle();
    break;
  }
  fail(Errc::unsupported, "ad hoc groups are built explicitly");
}

Presentation klein_bottle() {
  return ad_hoc("klein",
                {sym_abstract("a"), sym_abstract("b")},
                {parse_word("a b a^-1 b")});
}

Presentation ad_hoc(const std::string& label,
                    std::vector<GeneratorSymbol> gens,
                    std::vector<Word> relators) {
  Presentation p;
  p.spec = GroupSpec{Family::AdHoc, 0, 0, 0, 0, label};
  p.generators = std::move(gens);
  p.relators = std::move(relators);
  for (const auto& r : p.relators) p.validate_word(r);
  return p;
}

std::string presentation_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["spec"] = p.spec.str();
  auto& gens = j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : p.generators) gens.push_back(format_symbol(g));
  auto& rels = j["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) rels.push_back(format_word(r));
  return j.dump();
}

} // namespace nbraid
