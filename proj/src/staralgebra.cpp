#include "starcheck/staralgebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "starcheck/errors.hpp"

namespace starcheck {

std::string_view to_string(LetterType type) {
  switch (type) {
    case LetterType::general:
      return "gen";
    case LetterType::symmetric:
      return "sym";
    case LetterType::skew:
      return "skew";
  }
  return "?";
}

Declarations Declarations::parse(std::string_view text) {
  Declarations decls;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] == ';') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string_view keyword = text.substr(start, pos - start);
    LetterType type;
    if (keyword == "sym") {
      type = LetterType::symmetric;
    } else if (keyword == "skew") {
      type = LetterType::skew;
    } else if (keyword == "gen") {
      type = LetterType::general;
    } else {
      throw ParseError("expected 'sym', 'skew' or 'gen'", start + 1);
    }

    std::size_t count = 0;
    while (true) {
      skip_space();
      if (pos >= text.size() || text[pos] == ';') break;
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      char c = text[pos];
      bool single = std::isalpha(static_cast<unsigned char>(c)) &&
                    (pos + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])));
      if (!single) throw ParseError("letters must be single characters", pos + 1);
      if (decls.lookup(c)) throw ParseError(std::string("letter '") + c + "' declared twice", pos + 1);
      decls.letters_.emplace(c, type);
      ++count;
      ++pos;
    }
    if (count == 0) throw ParseError("declaration without letters", start + 1);
  }
  if (decls.letters_.empty()) throw ParseError("no letters declared", 0);
  return decls;
}

void Declarations::declare(char letter, LetterType type) {
  if (!std::isalpha(static_cast<unsigned char>(letter))) {
    throw ParseError(std::string("'") + letter + "' is not a letter", 0);
  }
  if (!letters_.emplace(letter, type).second) {
    throw ParseError(std::string("letter '") + letter + "' declared twice", 0);
  }
}

std::optional<LetterType> Declarations::lookup(char letter) const {
  auto it = letters_.find(letter);
  if (it == letters_.end()) return std::nullopt;
  return it->second;
}

std::string Declarations::to_string() const {
  std::string out;
  for (LetterType type : {LetterType::symmetric, LetterType::skew, LetterType::general}) {
    std::string group;
    for (const auto& [letter, t] : letters_) {
      if (t != type) continue;
      group += ' ';
      group += letter;
    }
    if (group.empty()) continue;
    if (!out.empty()) out += "; ";
    out += starcheck::to_string(type);
    out += group;
  }
  return out;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NormalForm NormalForm::constant(const mpq_class& value) {
  NormalForm nf;
  nf.add({}, value);
  return nf;
}

NormalForm NormalForm::letter(char name, LetterType) {
  NormalForm nf;
  nf.add({Atom{name, false}}, 1);
  return nf;
}

void NormalForm::add(const Word& word, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(word, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NormalForm& NormalForm::operator+=(const NormalForm& other) {
  for (const auto& [word, c] : other.terms_) add(word, c);
  return *this;
}

NormalForm& NormalForm::operator-=(const NormalForm& other) {
  for (const auto& [word, c] : other.terms_) add(word, -c);
  return *this;
}

NormalForm NormalForm::operator-() const {
  NormalForm out;
  for (const auto& [word, c] : terms_) out.terms_.emplace(word, -c);
  return out;
}

NormalForm operator*(const NormalForm& a, const NormalForm& b) {
  NormalForm out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

NormalForm NormalForm::star(const Declarations& decls) const {
  NormalForm out;
  for (const auto& [word, c] : terms_) {
    Word w(word.rbegin(), word.rend());
    mpq_class coeff = c;
    for (Atom& atom : w) {
      auto type = decls.lookup(atom.letter);
      if (!type) throw Error(std::string("undeclared letter '") + atom.letter + "'");
      switch (*type) {
        case LetterType::symmetric:
          break;
        case LetterType::skew:
          coeff = -coeff;
          break;
        case LetterType::general:
          atom.starred = !atom.starred;
          break;
      }
    }
    out.add(w, coeff);
  }
  return out;
}

std::string NormalForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;

    bool show_coeff = word.empty() || magnitude != 1;
    if (show_coeff) out += magnitude.get_str();
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (show_coeff || i > 0) out += ' ';
      out += word[i].letter;
      if (word[i].starred) out += '*';
    }
  }
  return out;
}

class StarParser {
 public:
  StarParser(std::string_view text, std::shared_ptr<const Declarations> decls)
      : text_(text), decls_(std::move(decls)) {}

  StarExpr run() {
    auto node = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return StarExpr(node, decls_);
  }

 private:
  using Node = StarExpr::Node;
  using NodePtr = std::shared_ptr<const Node>;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  static NodePtr make(StarExpr::Kind kind, std::vector<NodePtr> children = {}) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->children = std::move(children);
    return node;
  }

  NodePtr sum() {
    std::vector<NodePtr> terms;
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      NodePtr t = product();
      terms.push_back(negate ? make(StarExpr::Kind::negate, {t}) : t);
      if (peek('+') || peek('-')) {
        negate = text_[pos_] == '-';
        ++pos_;
        continue;
      }
      break;
    }
    if (terms.size() == 1) return terms.front();
    return make(StarExpr::Kind::sum, std::move(terms));
  }

  NodePtr product() {
    std::vector<NodePtr> factors;
    while (starts_factor()) factors.push_back(postfix());
    if (factors.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of expression");
      fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    }
    if (factors.size() == 1) return factors.front();
    return make(StarExpr::Kind::product, std::move(factors));
  }

  NodePtr postfix() {
    NodePtr p = primary();
    while (peek('*')) {
      ++pos_;
      p = make(StarExpr::Kind::star, {p});
    }
    return p;
  }

  NodePtr primary() {
    skip_space();
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = sum();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (!decls_->lookup(c)) fail(std::string("undeclared letter '") + c + "'");
    auto node = std::make_shared<Node>();
    node->kind = StarExpr::Kind::letter;
    node->letter = c;
    ++pos_;
    return node;
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_start) fail("expected a denominator");
    }
    mpq_class value;
    value.set_str(std::string(text_.substr(start, pos_ - start)), 10);
    if (value.get_den() == 0) {
      pos_ = start;
      fail("zero denominator");
    }
    value.canonicalize();
    auto node = std::make_shared<Node>();
    node->kind = StarExpr::Kind::number;
    node->number = value;
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::shared_ptr<const Declarations> decls_;
};

StarExpr StarExpr::parse(std::string_view text, const Declarations& decls) {
  return StarParser(text, std::make_shared<const Declarations>(decls)).run();
}

std::string StarExpr::to_string() const {
  switch (kind()) {
    case Kind::letter:
      return std::string(1, letter());
    case Kind::number:
      return number().get_str();
    case Kind::negate:
      return "-" + child(0).to_string();
    case Kind::star:
      return child(0).to_string() + "*";
    case Kind::sum: {
      std::string out = "(";
      for (std::size_t i = 0; i < arity(); ++i) {
        StarExpr c = child(i);
        if (i > 0) out += c.kind() == Kind::negate ? " - " : " + ";
        if (i > 0 && c.kind() == Kind::negate) {
          out += c.child(0).to_string();
        } else {
          out += c.to_string();
        }
      }
      return out + ")";
    }
    case Kind::product: {
      std::string out = "(";
      for (std::size_t i = 0; i < arity(); ++i) {
        if (i > 0) out += ' ';
        out += child(i).to_string();
      }
      return out + ")";
    }
  }
  return "?";
}

NormalForm normalize(const StarExpr& expr) {
  using Kind = StarExpr::Kind;
  switch (expr.kind()) {
    case Kind::letter:
      return NormalForm::letter(expr.letter(), *expr.declarations().lookup(expr.letter()));
    case Kind::number:
      return NormalForm::constant(expr.number());
    case Kind::negate:
      return -normalize(expr.child(0));
    case Kind::star:
      return normalize(expr.child(0)).star(expr.declarations());
    case Kind::sum: {
      NormalForm out;
      for (std::size_t i = 0; i < expr.arity(); ++i) out += normalize(expr.child(i));
      return out;
    }
    case Kind::product: {
      NormalForm out = normalize(expr.child(0));
      for (std::size_t i = 1; i < expr.arity(); ++i) out = out * normalize(expr.child(i));
      return out;
    }
  }
  return {};
}

IdentityResult check_identity(const StarExpr& lhs, const StarExpr& rhs) {
  if (lhs.declarations().letters() != rhs.declarations().letters()) {
    throw Error("identity sides use different declarations");
  }
  NormalForm diff = normalize(lhs) - normalize(rhs);
  return {diff.is_zero(), std::move(diff)};
}

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric:
      return "symmetric";
    case SymmetryClass::skew:
      return "skew";
    case SymmetryClass::neither:
      return "neither";
  }
  return "?";
}

SymmetryClass parse_symmetry_class(std::string_view text) {
  for (SymmetryClass c : {SymmetryClass::symmetric, SymmetryClass::skew, SymmetryClass::neither}) {
    if (to_string(c) == text) return c;
  }
  throw UnknownId("unknown symmetry class '" + std::string(text) + "' (expected symmetric, skew or neither)");
}

SymmetryClass classify_symmetry(const StarExpr& expr) {
  NormalForm nf = normalize(expr);
  NormalForm starred = nf.star(expr.declarations());
  if (starred == nf) return SymmetryClass::symmetric;
  if (starred == -nf) return SymmetryClass::skew;
  return SymmetryClass::neither;
}

Element evaluate(const StarExpr& expr, const Algebra& algebra, const std::map<char, Element>& assignment) {
  using Kind = StarExpr::Kind;
  switch (expr.kind()) {
    case Kind::letter: {
      auto it = assignment.find(expr.letter());
      if (it == assignment.end()) throw AlgebraError(std::string("no value for letter '") + expr.letter() + "'");
      if (!(it->second.algebra() == algebra)) throw AlgebraError("assigned element lives in another algebra");
      return it->second;
    }
    case Kind::number:
      return Scalar::from_rational(algebra.field(), expr.number()) * algebra.one();
    case Kind::negate:
      return -evaluate(expr.child(0), algebra, assignment);
    case Kind::star:
      return evaluate(expr.child(0), algebra, assignment).star();
    case Kind::sum: {
      Element out = algebra.zero();
      for (std::size_t i = 0; i < expr.arity(); ++i) out += evaluate(expr.child(i), algebra, assignment);
      return out;
    }
    case Kind::product: {
      Element out = evaluate(expr.child(0), algebra, assignment);
      for (std::size_t i = 1; i < expr.arity(); ++i) out = out * evaluate(expr.child(i), algebra, assignment);
      return out;
    }
  }
  return algebra.zero();
}

std::map<char, Element> random_assignment(const Declarations& decls, const Algebra& algebra, std::mt19937_64& rng) {
  std::map<char, Element> out;
  for (const auto& [letter, type] : decls.letters()) {
    ElementKind kind = type == LetterType::symmetric ? ElementKind::symmetric
                       : type == LetterType::skew    ? ElementKind::skew
                                                     : ElementKind::general;
    out.emplace(letter, random_element(algebra, rng, kind));
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

CorpusClaim parse_claim(const std::string& line, std::size_t line_no, const Declarations& decls) {
  std::size_t eq = line.find('=');
  if (eq != std::string::npos) {
    if (line.find('=', eq + 1) != std::string::npos) throw ParseError("more than one '='", line.find('=', eq + 1) + 1);
    StarExpr lhs = StarExpr::parse(line.substr(0, eq), decls);
    StarExpr rhs = [&] {
      try {
        return StarExpr::parse(line.substr(eq + 1), decls);
      } catch (const ParseError& e) {
        throw ParseError("right-hand side: " + std::string(e.what()), 0);
      }
    }();
    return {CorpusClaim::Kind::identity, line_no, line, std::move(lhs), std::move(rhs), std::nullopt};
  }

  std::size_t is = line.rfind(" is ");
  if (is == std::string::npos) throw ParseError("expected 'lhs = rhs' or 'expr is <class>'", 0);
  SymmetryClass expected = parse_symmetry_class(trim(std::string_view(line).substr(is + 4)));
  StarExpr lhs = StarExpr::parse(line.substr(0, is), decls);
  return {CorpusClaim::Kind::symmetry, line_no, line, std::move(lhs), std::nullopt, expected};
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::string_view text, std::string_view source) {
  std::vector<CorpusEntry> entries;
  std::set<std::string> names;
  bool have_decls = false;
  std::size_t line_no = 0;

  auto where = [&](std::size_t line) { return std::string(source) + ":" + std::to_string(line) + ": "; };
  auto close_entry = [&] {
    if (entries.empty()) return;
    const CorpusEntry& e = entries.back();
    if (!have_decls) throw ParseError(where(e.line) + "entry '" + e.name + "' has no declarations", 0);
    if (e.claims.empty()) throw ParseError(where(e.line) + "entry '" + e.name + "' has no claims", 0);
  };

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;

    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!entries.empty()) entries.back().comments.push_back(trim(std::string_view(line).substr(1)));
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ParseError(where(line_no) + "malformed entry header", 0);
      close_entry();
      std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!names.insert(name).second) throw ParseError(where(line_no) + "duplicate entry '" + name + "'", 0);
      entries.push_back(CorpusEntry{name, line_no, {}, {}, {}});
      have_decls = false;
      continue;
    }
    if (entries.empty()) throw ParseError(where(line_no) + "content before the first [entry] header", 0);

    CorpusEntry& entry = entries.back();
    try {
      if (!have_decls) {
        entry.declarations = Declarations::parse(line);
        have_decls = true;
      } else {
        entry.claims.push_back(parse_claim(line, line_no, entry.declarations));
      }
    } catch (const ParseError& e) {
      throw ParseError(where(line_no) + e.what(), 0);
    } catch (const UnknownId& e) {
      throw ParseError(where(line_no) + e.what(), 0);
    }
  }
  close_entry();
  return entries;
}

ClaimVerdict check_claim(const CorpusClaim& claim) {
  if (claim.kind == CorpusClaim::Kind::identity) {
    IdentityResult r = check_identity(claim.lhs, *claim.rhs);
    return {r.holds, r.holds ? "" : "lhs - rhs = " + r.difference.to_string()};
  }
  SymmetryClass actual = classify_symmetry(claim.lhs);
  return {actual == *claim.expected, std::string(to_string(actual))};
}

bool check_claim_instance(const CorpusClaim& claim, const std::map<char, Element>& assignment,
                          const Algebra& algebra) {
  Element lhs = evaluate(claim.lhs, algebra, assignment);
  if (claim.kind == CorpusClaim::Kind::identity) return lhs == evaluate(*claim.rhs, algebra, assignment);
  switch (*claim.expected) {
    case SymmetryClass::symmetric:
      return lhs.is_symmetric();
    case SymmetryClass::skew:
      return lhs.is_skew();
    case SymmetryClass::neither:
      return !lhs.is_symmetric() && !lhs.is_skew();
  }
  return false;
}

}  // namespace starcheck
