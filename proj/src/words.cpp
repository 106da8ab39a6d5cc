#include "nbraid/words.hpp"

#include <cctype>
#include <sstream>

namespace nbraid {

GeneratorSymbol sym_B(int i, int j) {
  if (!(1 <= i && i < j))
    fail(Errc::syntax, "B[i,j] needs 1 <= i < j");
  return {Kind::B, i, j, {}};
}

GeneratorSymbol sym_rho(int k, int l) {
  if (k < 1 || l < 1) fail(Errc::syntax, "r[k,l] needs positive indices");
  return {Kind::Rho, k, l, {}};
}

GeneratorSymbol sym_x(int u, int t) {
  if (u < 1 || t < 1) fail(Errc::syntax, "x[u,t] needs positive indices");
  return {Kind::X, u, t, {}};
}

GeneratorSymbol sym_p(int i) {
  if (i < 1) fail(Errc::syntax, "p[i] needs a positive index");
  return {Kind::P, i, 0, {}};
}

GeneratorSymbol sym_abstract(const std::string& name) {
  if (name.empty()) fail(Errc::syntax, "abstract generator needs a name");
  return {Kind::Abstract, 0, 0, name};
}

int strand_level(const GeneratorSymbol& s) {
  switch (s.kind) {
  case Kind::B: return s.b;
  case Kind::Rho: return s.a;
  case Kind::X: return s.a;
  default: fail(Errc::level, "symbol has no strand level");
  }
}

std::vector<Letter> reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.sign == 0) continue;
    if (!out.empty() && out.back().sym == l.sym &&
        out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : ls_(reduce(std::move(letters))) {}

Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(ls));
}

Word inverse(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    ls.push_back(it->inverse());
  return Word(std::move(ls));
}

Word pow(const Word& w, int e) {
  Word base = e < 0 ? inverse(w) : w;
  int n = e < 0 ? -e : e;
  Word out;
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

Word commutator(const Word& h, const Word& k) {
  return inverse(h) * inverse(k) * h * k;
}

Word conjugated(const Word& w, const Word& g) {
  return g * w * inverse(g);
}

Word letter_word(const GeneratorSymbol& s, int sign) {
  return Word(Letter{s, sign});
}

Word substitute(const Word& w, const SymbolMap& images) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) {
    auto img = images(l.sym);
    if (!img)
      fail(Errc::missing_image,
           "no image for generator " + format_symbol(l.sym));
    const Word& v = l.sign > 0 ? *img : inverse(*img);
    out.insert(out.end(), v.letters().begin(), v.letters().end());
  }
  return Word(std::move(out));
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) {
    fail(Errc::syntax, msg + " at offset " + std::to_string(pos), pos);
  }

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  void expect(char c) {
    if (done() || peek() != c)
      err(std::string("expected '") + c + "'");
    ++pos;
  }

  int integer() {
    std::size_t start = pos;
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      err("expected an integer");
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) { pos = start; err("index out of range"); }
      ++pos;
    }
    return static_cast<int>(neg ? -v : v);
  }

  // B[i,j] / r[k,l] / x[u,t] take two indices, p[i] one.
  Word indexed(Kind kind, int arity) {
    expect('[');
    int a = integer();
    int b = 0;
    if (arity == 2) {
      expect(',');
      b = integer();
    }
    expect(']');
    switch (kind) {
    case Kind::B: {
      if (!(1 <= a && a < b)) { --pos; err("B[i,j] needs 1 <= i < j"); }
      return letter_word(sym_B(a, b));
    }
    case Kind::Rho:
      if (a < 1 || b < 1) { --pos; err("indices must be positive"); }
      return letter_word(sym_rho(a, b));
    case Kind::X:
      if (a < 1 || b < 1) { --pos; err("indices must be positive"); }
      return letter_word(sym_x(a, b));
    default:
      if (a < 1) { --pos; err("index must be positive"); }
      return letter_word(sym_p(a));
    }
  }

  Word atom() {
    if (done()) err("expected a generator, '(' or '['");
    char c = peek();
    if (c == '(') {
      ++pos;
      Word w = word();
      skip_ws();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos;
      Word u = word();
      skip_ws();
      expect(',');
      Word v = word();
      skip_ws();
      expect(']');
      return commutator(u, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // A single letter followed by '[' is one of the indexed families.
      if (pos + 1 < s.size() && s[pos + 1] == '[') {
        if (c == 'B') { ++pos; return indexed(Kind::B, 2); }
        if (c == 'r') { ++pos; return indexed(Kind::Rho, 2); }
        if (c == 'x') { ++pos; return indexed(Kind::X, 2); }
        if (c == 'p') { ++pos; return indexed(Kind::P, 1); }
        err("unknown generator family");
      }
      std::size_t start = pos;
      while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                         peek() == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "B" || name == "r" || name == "x" || name == "p") {
        pos = start;
        err("indexed generator needs '['");
      }
      return letter_word(sym_abstract(name));
    }
    err("expected a generator, '(' or '['");
  }

  Word term() {
    Word base = atom();
    if (!done() && peek() == '^') {
      ++pos;
      int e = integer();
      return pow(base, e);
    }
    return base;
  }

  Word word() {
    Word out;
    skip_ws();
    while (!done() && peek() != ')' && peek() != ',' && peek() != ']') {
      out = out * term();
      skip_ws();
    }
    return out;
  }
};

} // namespace

Word parse_word(const std::string& text) {
  Parser p{text};
  Word w = p.word();
  if (!p.done()) p.err("unexpected input");
  return w;
}

std::string format_symbol(const GeneratorSymbol& s) {
  std::ostringstream os;
  switch (s.kind) {
  case Kind::B: os << "B[" << s.a << ',' << s.b << ']'; break;
  case Kind::Rho: os << "r[" << s.a << ',' << s.b << ']'; break;
  case Kind::X: os << "x[" << s.a << ',' << s.b << ']'; break;
  case Kind::P: os << "p[" << s.a << ']'; break;
  case Kind::Abstract: os << s.name; break;
  }
  return os.str();
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    int e = ls[i].sign * static_cast<int>(j - i);
    if (i > 0) os << ' ';
    os << format_symbol(ls[i].sym);
    if (e != 1) os << '^' << e;
    i = j;
  }
  return os.str();
}

} // namespace nbraid
