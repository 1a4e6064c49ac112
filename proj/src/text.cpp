#include "delta/text.hpp"

#include "delta/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace delta {

namespace {

enum class Tok { Name, Number, Slash, Caret, Star, Plus, Minus, LParen, RParen, Equals, Comma, Colon, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string, std::less<>> kDirectives = {"constants", "translations", "indeterminates",
                                                         "ranking",   "system",       "scheme"};
const std::set<std::string, std::less<>> kReserved = {"constants", "translations", "indeterminates", "ranking",
                                                       "system",    "scheme",       "poly"};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int tl = line, tc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Name, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '*': kind = Tok::Star; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equals; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case ';': kind = Tok::Semicolon; break;
      default:
        throw ParseError(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'", tl, tc);
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Name: return "name";
    case Tok::Number: return "number";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Semicolon: return "';'";
    case Tok::End: return "end of input";
  }
  return "token";
}

enum class SymbolKind { None, Constant, Translation, Indeterminate };

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Symbols* symbols) : toks_(std::move(tokens)), symbols_(symbols) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw ParseError(kind, msg, t.line, t.column);
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail(peek(), std::string("expected ") + describe(k) + ", found " + describe(peek().kind));
    return take();
  }

  bool at_directive() const {
    return peek().kind == Tok::Name && kDirectives.count(peek().text) && peek(1).kind == Tok::Colon;
  }
  bool at_poly_statement() const { return peek().kind == Tok::Name && peek().text == "poly"; }
  bool at_statement_start() const { return at_directive() || at_poly_statement() || at(Tok::End); }

  void set_symbols(const Symbols* s) { symbols_ = s; }

  SymbolKind lookup(const std::string& name, std::size_t& index) const {
    auto find = [&](const std::vector<std::string>& v) {
      auto it = std::find(v.begin(), v.end(), name);
      index = static_cast<std::size_t>(it - v.begin());
      return it != v.end();
    };
    if (find(symbols_->constants)) return SymbolKind::Constant;
    if (find(symbols_->translations)) return SymbolKind::Translation;
    if (find(symbols_->indeterminates)) return SymbolKind::Indeterminate;
    return SymbolKind::None;
  }

  std::uint32_t parse_uint() {
    const Token& t = expect(Tok::Number);
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "exponent out of range");
    return v;
  }

  Coord parse_signed() {
    bool negative = false;
    if (at(Tok::Minus)) {
      take();
      negative = true;
    } else if (at(Tok::Plus)) {
      take();
    }
    const Token& t = expect(Tok::Number);
    Coord v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc()) fail(t, "exponent out of range");
    return negative ? -v : v;
  }

  DiffPolynomial zero() const { return DiffPolynomial(symbols_->dim(), symbols_->arity()); }

  DiffPolynomial power(const DiffPolynomial& base, std::uint32_t e) const {
    DiffPolynomial out = DiffPolynomial::constant(symbols_->dim(), symbols_->arity(), 1);
    for (std::uint32_t k = 0; k < e; ++k) out = out * base;
    return out;
  }

  DiffPolynomial maybe_power(DiffPolynomial base) {
    if (!at(Tok::Caret)) return base;
    take();
    return power(base, parse_uint());
  }

  bool at_factor_start() const {
    if (at(Tok::Number) || at(Tok::LParen)) return true;
    return at(Tok::Name) && !at_statement_start();
  }

  DiffPolynomial parse_expr() {
    DiffPolynomial acc = zero();
    bool negate = false;
    if (at(Tok::Minus)) {
      take();
      negate = true;
    } else if (at(Tok::Plus)) {
      take();
    }
    DiffPolynomial first = parse_term();
    acc = negate ? -first : first;
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool minus = take().kind == Tok::Minus;
      DiffPolynomial t = parse_term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  DiffPolynomial parse_term() {
    DiffPolynomial acc = parse_factor();
    for (;;) {
      if (at(Tok::Star)) {
        take();
        acc = acc * parse_factor();
      } else if (at_factor_start()) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }

  DiffPolynomial parse_factor() {
    const std::size_t m = symbols_->dim(), n = symbols_->arity();
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      take();
      Integer num(t.text);
      Integer den = 1;
      if (at(Tok::Slash)) {
        take();
        const Token& d = expect(Tok::Number);
        den = Integer(d.text);
        if (den == 0) fail(d, "zero denominator");
      }
      return maybe_power(DiffPolynomial::constant(m, n, ConstantPoly(Rational(num, den))));
    }
    if (t.kind == Tok::LParen) {
      take();
      DiffPolynomial inner = parse_expr();
      expect(Tok::RParen);
      return maybe_power(std::move(inner));
    }
    if (t.kind != Tok::Name || at_statement_start()) {
      fail(t, std::string("expected a factor, found ") + describe(t.kind));
    }
    std::size_t index = 0;
    switch (lookup(t.text, index)) {
      case SymbolKind::Constant:
        take();
        return maybe_power(DiffPolynomial::constant(m, n, ConstantPoly::symbol(index)));
      case SymbolKind::Indeterminate:
        take();
        return maybe_power(DiffPolynomial::term(m, n, TermKey{index, Gamma::zero(m)}));
      case SymbolKind::Translation:
        return maybe_power(parse_diffterm());
      case SymbolKind::None:
        fail(t, "undeclared symbol '" + t.text + "'", ErrorKind::UndeclaredSymbol);
    }
    fail(t, "unreachable");
  }

  // (TRANSNAME ("^" SIGNEDINT)?)+ INDETNAME, with optional '*' between the parts.
  DiffPolynomial parse_diffterm() {
    const std::size_t m = symbols_->dim(), n = symbols_->arity();
    Gamma g = Gamma::zero(m);
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Name) fail(t, "a translation must be followed by an indeterminate");
      std::size_t index = 0;
      const auto kind = lookup(t.text, index);
      if (kind == SymbolKind::None) fail(t, "undeclared symbol '" + t.text + "'", ErrorKind::UndeclaredSymbol);
      if (kind == SymbolKind::Constant) fail(t, "a translation must be followed by an indeterminate");
      take();
      if (kind == SymbolKind::Indeterminate) return DiffPolynomial::term(m, n, TermKey{index, g});
      Coord e = 1;
      if (at(Tok::Caret)) {
        take();
        e = parse_signed();
      }
      g[index] += e;
      if (at(Tok::Star) && peek(1).kind == Tok::Name) {
        std::size_t dummy = 0;
        const auto next = lookup(peek(1).text, dummy);
        if (next == SymbolKind::Translation || next == SymbolKind::Indeterminate) take();
      }
    }
  }

  std::vector<Token> parse_namelist() {
    std::vector<Token> names;
    if (at(Tok::Name) && !at_statement_start()) {
      names.push_back(take());
      while (at(Tok::Comma)) {
        take();
        const Token& n = expect(Tok::Name);
        names.push_back(n);
      }
    }
    return names;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Symbols* symbols_;
};

std::string term_body(const TermKey& t, const Symbols& s) {
  std::string out;
  for (std::size_t k = 0; k < t.gamma.dim(); ++k) {
    if (t.gamma[k] == 0) continue;
    out += k < s.translations.size() ? s.translations[k] : "s" + std::to_string(k + 1);
    if (t.gamma[k] != 1) out += "^" + std::to_string(t.gamma[k]);
    out += " ";
  }
  out += t.idx < s.indeterminates.size() ? s.indeterminates[t.idx] : "y" + std::to_string(t.idx + 1);
  return out;
}

// Factors sorted by decreasing ranking.
std::vector<Monomial::Factor> ranked_factors(const Monomial& mono, const Ranking& rk) {
  std::vector<Monomial::Factor> f = mono.factors();
  std::sort(f.begin(), f.end(), [&](const auto& a, const auto& b) { return rk.compare(a.first, b.first) > 0; });
  return f;
}

std::string monomial_body(const Monomial& mono, const Symbols& s, const Ranking& rk) {
  std::string out;
  for (const auto& [t, e] : ranked_factors(mono, rk)) {
    if (!out.empty()) out += "*";
    const bool bare = t.gamma.is_zero();
    if (e == 1) {
      out += term_body(t, s);
    } else if (bare) {
      out += term_body(t, s) + "^" + std::to_string(e);
    } else {
      out += "(" + term_body(t, s) + ")^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace

Ranking SystemFile::ranking() const {
  std::vector<std::size_t> priority;
  if (ranking_priority) {
    priority = *ranking_priority;
  } else {
    for (std::size_t i = 0; i < symbols.dim(); ++i) priority.push_back(i);
  }
  std::vector<std::size_t> indets(symbols.arity());
  for (std::size_t i = 0; i < indets.size(); ++i) indets[i] = i;
  return Ranking(std::move(priority), std::move(indets));
}

const DiffPolynomial& SystemFile::poly(std::string_view name) const {
  for (const auto& [n, p] : polys) {
    if (n == name) return p;
  }
  throw Error(ErrorKind::UndeclaredSymbol, "no polynomial named '" + std::string(name) + "'");
}

std::vector<DiffPolynomial> SystemFile::generators(std::string_view exclude) const {
  std::vector<DiffPolynomial> out;
  if (!system.empty()) {
    for (const auto& n : system) {
      if (n != exclude) out.push_back(poly(n));
    }
    return out;
  }
  for (const auto& [n, p] : polys) {
    if (n != exclude) out.push_back(p);
  }
  return out;
}

SystemFile parse_system(std::string_view text) {
  SystemFile file;
  Parser parser(tokenize(text), &file.symbols);
  std::set<std::string> declared;
  bool seen_poly = false;
  std::vector<Token> pending_ranking;
  std::vector<Token> pending_system;

  auto declare = [&](std::vector<std::string>& into, const std::vector<Token>& names) {
    for (const auto& t : names) {
      if (kReserved.count(t.text)) parser.fail(t, "'" + t.text + "' is a reserved word");
      if (!declared.insert(t.text).second) parser.fail(t, "symbol '" + t.text + "' declared twice");
      into.push_back(t.text);
    }
  };

  while (!parser.at(Tok::End)) {
    const Token head = parser.peek();
    if (parser.at_directive()) {
      parser.take();
      parser.take();  // ':'
      if (head.text == "scheme") {
        // Scheme names may contain hyphens: crank-nicolson.
        std::string name = parser.expect(Tok::Name).text;
        while (parser.at(Tok::Minus) && parser.peek(1).kind == Tok::Name) {
          parser.take();
          name += "-" + parser.take().text;
        }
        file.scheme = name;
        continue;
      }
      const auto names = parser.parse_namelist();
      if (head.text == "constants" || head.text == "translations" || head.text == "indeterminates") {
        if (seen_poly) parser.fail(head, "declarations must precede poly statements");
        auto& into = head.text == "constants"      ? file.symbols.constants
                     : head.text == "translations" ? file.symbols.translations
                                                   : file.symbols.indeterminates;
        declare(into, names);
      } else if (head.text == "ranking") {
        pending_ranking.insert(pending_ranking.end(), names.begin(), names.end());
      } else {
        pending_system.insert(pending_system.end(), names.begin(), names.end());
      }
      continue;
    }
    if (parser.at_poly_statement()) {
      parser.take();
      if (file.symbols.translations.empty()) {
        parser.fail(head, "no translations declared", ErrorKind::ArityError);
      }
      if (file.symbols.indeterminates.empty()) {
        parser.fail(head, "no indeterminates declared", ErrorKind::ArityError);
      }
      seen_poly = true;
      const Token name = parser.expect(Tok::Name);
      if (kReserved.count(name.text)) parser.fail(name, "'" + name.text + "' is a reserved word");
      if (declared.count(name.text)) parser.fail(name, "'" + name.text + "' is already a declared symbol");
      for (const auto& [n, p] : file.polys) {
        if (n == name.text) parser.fail(name, "polynomial '" + name.text + "' defined twice");
      }
      parser.expect(Tok::Equals);
      DiffPolynomial p = parser.parse_expr();
      if (!parser.at_statement_start()) {
        parser.fail(parser.peek(), std::string("unexpected ") + describe(parser.peek().kind) + " after expression");
      }
      file.polys.emplace_back(name.text, std::move(p));
      continue;
    }
    parser.fail(head, std::string("expected a declaration or poly statement, found ") + describe(head.kind));
  }

  if (!pending_ranking.empty()) {
    std::vector<std::size_t> priority;
    for (const auto& t : pending_ranking) {
      auto it = std::find(file.symbols.translations.begin(), file.symbols.translations.end(), t.text);
      if (it == file.symbols.translations.end()) {
        parser.fail(t, "'" + t.text + "' is not a declared translation", ErrorKind::UndeclaredSymbol);
      }
      const auto idx = static_cast<std::size_t>(it - file.symbols.translations.begin());
      if (std::find(priority.begin(), priority.end(), idx) != priority.end()) {
        parser.fail(t, "translation '" + t.text + "' listed twice in ranking");
      }
      priority.push_back(idx);
    }
    for (std::size_t i = 0; i < file.symbols.dim(); ++i) {
      if (std::find(priority.begin(), priority.end(), i) == priority.end()) priority.push_back(i);
    }
    file.ranking_priority = std::move(priority);
  }
  for (const auto& t : pending_system) {
    const bool known = std::any_of(file.polys.begin(), file.polys.end(),
                                   [&](const auto& np) { return np.first == t.text; });
    if (!known) parser.fail(t, "system names unknown polynomial '" + t.text + "'", ErrorKind::UndeclaredSymbol);
    file.system.push_back(t.text);
  }
  return file;
}

DiffPolynomial parse_poly(std::string_view expr, const Symbols& symbols) {
  if (symbols.translations.empty()) throw Error(ErrorKind::ArityError, "no translations declared");
  if (symbols.indeterminates.empty()) throw Error(ErrorKind::ArityError, "no indeterminates declared");
  Parser parser(tokenize(expr), &symbols);
  DiffPolynomial p = parser.parse_expr();
  if (!parser.at(Tok::End)) {
    parser.fail(parser.peek(), std::string("unexpected ") + describe(parser.peek().kind) + " after expression");
  }
  return p;
}

std::vector<std::size_t> parse_ranking(std::string_view list, const Symbols& symbols) {
  std::vector<std::size_t> priority;
  Parser parser(tokenize(list), &symbols);
  while (!parser.at(Tok::End)) {
    const Token& t = parser.expect(Tok::Name);
    auto it = std::find(symbols.translations.begin(), symbols.translations.end(), t.text);
    if (it == symbols.translations.end()) {
      parser.fail(t, "'" + t.text + "' is not a declared translation", ErrorKind::UndeclaredSymbol);
    }
    const auto idx = static_cast<std::size_t>(it - symbols.translations.begin());
    if (std::find(priority.begin(), priority.end(), idx) != priority.end()) {
      parser.fail(t, "translation '" + t.text + "' listed twice");
    }
    priority.push_back(idx);
    if (parser.at(Tok::Comma)) parser.take();
  }
  for (std::size_t i = 0; i < symbols.dim(); ++i) {
    if (std::find(priority.begin(), priority.end(), i) == priority.end()) priority.push_back(i);
  }
  return priority;
}

LatticeSet parse_points(std::string_view text, std::size_t dim, Signature signature) {
  Symbols none;
  Parser parser(tokenize(text), &none);
  std::vector<Point> pts;
  while (!parser.at(Tok::End)) {
    const Token open = parser.expect(Tok::LParen);
    std::vector<Coord> coords;
    if (!parser.at(Tok::RParen)) {
      coords.push_back(parser.parse_signed());
      while (parser.at(Tok::Comma)) {
        parser.take();
        coords.push_back(parser.parse_signed());
      }
    }
    parser.expect(Tok::RParen);
    if (coords.size() != dim) {
      parser.fail(open, "point has " + std::to_string(coords.size()) + " coordinates, expected " + std::to_string(dim),
                  ErrorKind::DimMismatch);
    }
    pts.emplace_back(std::move(coords));
    if (parser.at(Tok::Semicolon)) parser.take();
    else if (!parser.at(Tok::End)) parser.fail(parser.peek(), "expected ';' between points");
  }
  return LatticeSet(dim, signature, std::move(pts));
}

std::string to_string(const TermKey& t, const Symbols& symbols) { return term_body(t, symbols); }

std::string to_string(const DiffPolynomial& p, const Symbols& symbols, const Ranking& rk) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, ConstantPoly>*> entries;
  for (const auto& kv : p.terms()) entries.push_back(&kv);
  // Decreasing ranking: compare factor lists from the highest term down.
  std::stable_sort(entries.begin(), entries.end(), [&](const auto* a, const auto* b) {
    const auto fa = ranked_factors(a->first, rk);
    const auto fb = ranked_factors(b->first, rk);
    for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
      if (auto c = rk.compare(fa[i].first, fb[i].first); c != 0) return c > 0;
      if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
  });

  std::string out;
  bool first = true;
  for (const auto* kv : entries) {
    const Monomial& mono = kv->first;
    const ConstantPoly& coeff = kv->second;
    const std::string body = monomial_body(mono, symbols, rk);

    std::string piece;
    bool negative = false;
    if (coeff.terms().size() == 1) {
      const auto& [e, q] = *coeff.terms().begin();
      negative = q < 0;
      const ConstantPoly mag = negative ? -coeff : coeff;
      const std::string cs = to_string(mag, symbols.constants);
      if (body.empty()) piece = cs;
      else if (cs == "1") piece = body;
      else piece = cs + "*" + body;
    } else {
      const std::string cs = "(" + to_string(coeff, symbols.constants) + ")";
      piece = body.empty() ? cs : cs + "*" + body;
    }
    if (first) out += negative ? "-" + piece : piece;
    else out += (negative ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

std::string to_string(const SystemFile& file) {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
    return out;
  };
  std::string out;
  if (!file.symbols.constants.empty()) out += "constants: " + join(file.symbols.constants) + "\n";
  out += "translations: " + join(file.symbols.translations) + "\n";
  out += "indeterminates: " + join(file.symbols.indeterminates) + "\n";
  if (file.ranking_priority) {
    std::vector<std::string> names;
    for (auto i : *file.ranking_priority) names.push_back(file.symbols.translations[i]);
    out += "ranking: " + join(names) + "\n";
  }
  if (file.scheme) out += "scheme: " + *file.scheme + "\n";
  const Ranking rk = file.ranking();
  for (const auto& [name, p] : file.polys) out += "poly " + name + " = " + to_string(p, file.symbols, rk) + "\n";
  if (!file.system.empty()) out += "system: " + join(file.system) + "\n";
  return out;
}

}  // namespace delta
