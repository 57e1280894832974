#include "diffalg/parser.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "diffalg/error.hpp"

namespace diffalg {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

struct Mark {
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
};

// Character cursor shared by the term, relation and script grammars.
class Scanner {
 public:
  explicit Scanner(std::string_view src) : src_(src) {}

  Mark mark() const { return here_; }
  void reset(Mark m) { here_ = m; }

  void skip_space() {
    while (!at_end()) {
      char c = src_[here_.pos];
      if (c == '#') {
        while (!at_end() && src_[here_.pos] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return here_.pos >= src_.size(); }

  // Next non-space character, or '\0' at end of input.
  char peek() {
    skip_space();
    return at_end() ? '\0' : src_[here_.pos];
  }

  char peek_raw(std::size_t offset = 0) const {
    auto p = here_.pos + offset;
    return p < src_.size() ? src_[p] : '\0';
  }

  bool starts_with(std::string_view s) {
    skip_space();
    return src_.substr(here_.pos, s.size()) == s;
  }

  bool accept(std::string_view s) {
    if (!starts_with(s)) return false;
    for (std::size_t i = 0; i < s.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view s, std::string_view what) {
    if (!accept(s)) fail("expected " + std::string(what));
  }

  void advance() {
    if (src_[here_.pos] == '\n') {
      ++here_.line;
      here_.column = 1;
    } else {
      ++here_.column;
    }
    ++here_.pos;
  }

  // Letters, digits and (when `underscores`) '_', starting with a letter.
  std::string identifier(bool underscores = false) {
    skip_space();
    if (at_end() || !is_ident_start(src_[here_.pos])) fail("expected identifier");
    std::string out;
    while (!at_end() && (is_ident_char(src_[here_.pos]) || (underscores && src_[here_.pos] == '_'))) {
      out += src_[here_.pos];
      advance();
    }
    return out;
  }

  // Maximal run of non-space characters other than ','.
  std::string word() {
    skip_space();
    std::string out;
    while (!at_end()) {
      char c = src_[here_.pos];
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#') break;
      out += c;
      advance();
    }
    return out;
  }

  std::string describe_next() {
    skip_space();
    if (at_end()) return "end of input";
    return "'" + std::string(1, src_[here_.pos]) + "'";
  }

  [[noreturn]] void fail(const std::string& message) {
    skip_space();
    fail_at(here_, message + ", found " + describe_next_at(here_));
  }

  [[noreturn]] void fail_at(Mark m, const std::string& message) const {
    throw SyntaxError(m.line, m.column, message);
  }

 private:
  std::string describe_next_at(Mark m) const {
    if (m.pos >= src_.size()) return "end of input";
    return "'" + std::string(1, src_[m.pos]) + "'";
  }

  std::string_view src_;
  Mark here_;
};

class TermParser {
 public:
  explicit TermParser(Scanner& s) : s_(s) {}

  Term sum() {
    Term t = difference();
    while (s_.peek() == '+') {
      s_.advance();
      t = Term::sum(std::move(t), difference());
    }
    return t;
  }

 private:
  Term difference() {
    Term t = product();
    while (s_.peek() == '-') {
      s_.advance();
      t = Term::diff(std::move(t), product());
    }
    return t;
  }

  Term product() {
    Term t = postfix();
    while (s_.peek() == '*') {
      s_.advance();
      t = Term::prod(std::move(t), postfix());
    }
    return t;
  }

  Term postfix() {
    Term t = atom();
    while (s_.peek() == '\'') {
      s_.advance();
      t = Term::complement(std::move(t));
    }
    return t;
  }

  Term atom() {
    char c = s_.peek();
    Mark start = s_.mark();
    if (c == '0' || c == '1') {
      s_.advance();
      if (std::isdigit(static_cast<unsigned char>(s_.peek_raw()))) {
        s_.fail_at(start, "only the constants 0 and 1 are allowed");
      }
      return c == '0' ? Term::zero() : Term::one();
    }
    if (is_ident_start(c)) {
      auto name = s_.identifier();
      return Term::var(std::move(name));
    }
    if (c == '(') {
      s_.advance();
      Term t = sum();
      s_.expect(")", "')'");
      return t;
    }
    if (c == '|') {
      open_bar(start);
      Term inner = sum();
      if (s_.peek() != '|') s_.fail("expected closing '|'");
      close_bar(s_.mark());
      if (inner.op() != Op::diff) {
        s_.fail_at(start, "expected a difference between bars");
      }
      return Term::mod_diff(inner.left(), inner.right());
    }
    s_.fail("expected term");
  }

  void open_bar(Mark start) {
    s_.advance();
    if (s_.peek_raw() == '|') s_.fail_at(start, "adjacent bars must be separated by whitespace");
  }

  void close_bar(Mark at) {
    s_.advance();
    if (s_.peek_raw() == '|') s_.fail_at(at, "adjacent bars must be separated by whitespace");
  }

  Scanner& s_;
};

Term term_at(Scanner& s) { return TermParser(s).sum(); }

void expect_end(Scanner& s) {
  if (s.peek() != '\0') s.fail("unexpected input");
}

class RelationParser {
 public:
  explicit RelationParser(Scanner& s) : s_(s) {}

  Relation disjunction() {
    Relation r = conjunction();
    while (s_.accept("\\/")) r = Relation::disj(std::move(r), conjunction());
    return r;
  }

 private:
  Relation conjunction() {
    Relation r = primary();
    while (s_.accept("/\\")) r = Relation::conj(std::move(r), primary());
    return r;
  }

  Relation primary() {
    Mark start = s_.mark();
    std::optional<SyntaxError> atom_error;
    try {
      return atom();
    } catch (const SyntaxError& e) {
      atom_error = e;
    }
    // A parenthesized subrelation; report whichever reading got further.
    Mark after_atom_failure{0, atom_error->line(), atom_error->column()};
    s_.reset(start);
    if (s_.peek() != '(') throw *atom_error;
    try {
      s_.advance();
      Relation r = disjunction();
      s_.expect(")", "')'");
      return r;
    } catch (const SyntaxError& e) {
      if (e.line() > after_atom_failure.line ||
          (e.line() == after_atom_failure.line && e.column() > after_atom_failure.column)) {
        throw;
      }
      throw *atom_error;
    }
  }

  Relation atom() {
    Term l = term_at(s_);
    if (s_.accept("<=")) return Relation::leq(std::move(l), term_at(s_));
    if (s_.accept("=")) return Relation::eq(std::move(l), term_at(s_));
    s_.fail("expected '=' or '<='");
  }

  Scanner& s_;
};

void reject_metavariables(Scanner& s, Mark at, const Term& t) {
  auto metas = metavariables(t);
  if (!metas.empty()) {
    s.fail_at(at, "metavariable " + metas.front() + " is not allowed in an object term");
  }
}

Term object_term(Scanner& s) {
  s.skip_space();
  Mark at = s.mark();
  Term t = term_at(s);
  reject_metavariables(s, at, t);
  return t;
}

bool keyword_next(Scanner& s, std::string_view kw) {
  if (!s.starts_with(kw)) return false;
  return !is_ident_char(s.peek_raw(kw.size())) && s.peek_raw(kw.size()) != '_';
}

void expect_keyword(Scanner& s, std::string_view kw) {
  if (!keyword_next(s, kw)) s.fail("expected '" + std::string(kw) + "'");
  s.accept(kw);
}

Path parse_path(Scanner& s) {
  s.skip_space();
  Mark at = s.mark();
  std::string text = s.word();
  if (text == ".") return Path{};
  std::vector<std::uint8_t> indices;
  if (text.empty() || text.size() % 2 != 0) {
    s.fail_at(at, "malformed path '" + text + "'");
  }
  for (std::size_t i = 0; i < text.size(); i += 2) {
    if (text[i] != '.') s.fail_at(at, "malformed path '" + text + "'");
    if (text[i + 1] != '0' && text[i + 1] != '1') {
      s.fail_at(at, "malformed path '" + text + "': child index must be 0 or 1");
    }
    indices.push_back(static_cast<std::uint8_t>(text[i + 1] - '0'));
  }
  return Path(std::move(indices));
}

ProofStep parse_step(Scanner& s) {
  ProofStep step;
  step.line = s.mark().line;
  s.expect("=", "'='");
  step.result = object_term(s);
  expect_keyword(s, "by");
  step.rule = s.identifier(true);
  if (s.peek_raw() == '~') {
    s.advance();
    step.direction = Direction::r2l;
  }
  expect_keyword(s, "at");
  step.at = parse_path(s);
  if (keyword_next(s, "with")) {
    s.accept("with");
    do {
      Mark at = s.mark();
      auto meta = s.identifier();
      if (!is_metavariable(meta)) s.fail_at(at, "'" + meta + "' is not a metavariable");
      s.expect(":=", "':='");
      auto value = object_term(s);
      if (!step.bindings.emplace(meta, std::move(value)).second) {
        s.fail_at(at, "metavariable " + meta + " bound twice");
      }
    } while (s.accept(","));
  }
  return step;
}

ProofScript parse_lemma(Scanner& s) {
  ProofScript script;
  script.line = s.mark().line;
  expect_keyword(s, "lemma");
  script.name = s.identifier(true);
  s.expect(":", "':'");
  script.goal_lhs = object_term(s);
  s.expect("=", "'='");
  script.goal_rhs = object_term(s);
  while (s.peek() == '=') {
    s.skip_space();
    script.steps.push_back(parse_step(s));
  }
  expect_keyword(s, "qed");
  return script;
}

enum Prec { kSum = 1, kDiff = 2, kProd = 3, kPostfix = 4, kAtom = 5 };

int precedence(const Term& t) {
  switch (t.op()) {
    case Op::sum: return kSum;
    case Op::diff: return kDiff;
    case Op::prod: return kProd;
    case Op::complement: return kPostfix;
    default: return kAtom;
  }
}

class Renderer {
 public:
  explicit Renderer(RenderStyle style) : style_(style) {}

  void term(const Term& t, std::string& out) const {
    switch (t.op()) {
      case Op::zero: out += '0'; return;
      case Op::one: out += '1'; return;
      case Op::var: out += t.name(); return;
      case Op::complement:
        operand(t.child(0), precedence(t.child(0)) < kPostfix, out);
        out += '\'';
        return;
      case Op::mod_diff:
        out += '|';
        binary(kDiff, "-", t.left(), t.right(), false, out);
        out += '|';
        return;
      case Op::diff: binary(kDiff, "-", t.left(), t.right(), false, out); return;
      case Op::prod: binary(kProd, "*", t.left(), t.right(), false, out); return;
      case Op::sum: binary(kSum, "+", t.left(), t.right(), style_ == RenderStyle::readable, out); return;
    }
  }

 private:
  void binary(int prec, const char* sym, const Term& l, const Term& r, bool wrap_diffs,
              std::string& out) const {
    bool lp = precedence(l) < prec || (wrap_diffs && l.op() == Op::diff);
    bool rp = precedence(r) <= prec || (wrap_diffs && r.op() == Op::diff);
    operand(l, lp, out);
    out += sym;
    operand(r, rp, out);
  }

  void operand(const Term& t, bool parens, std::string& out) const {
    if (parens) out += '(';
    term(t, out);
    if (parens) out += ')';
  }

  RenderStyle style_;
};

void render_rel(const Relation& r, std::string& out) {
  switch (r.op()) {
    case RelOp::eq:
      out += render_term(r.lhs()) + " = " + render_term(r.rhs());
      return;
    case RelOp::leq:
      out += render_term(r.lhs()) + " <= " + render_term(r.rhs());
      return;
    case RelOp::conj:
    case RelOp::disj: {
      // disjunction binds looser than conjunction; both associate left
      auto needs_parens = [&](const Relation& child, bool right_side) {
        if (child.is_atom()) return false;
        if (r.op() == RelOp::conj) return child.op() == RelOp::disj || (right_side && child.op() == RelOp::conj);
        return right_side && child.op() == RelOp::disj;
      };
      auto side = [&](const Relation& child, bool right_side) {
        bool p = needs_parens(child, right_side);
        if (p) out += '(';
        render_rel(child, out);
        if (p) out += ')';
      };
      side(r.left(), false);
      out += r.op() == RelOp::conj ? " /\\ " : " \\/ ";
      side(r.right(), true);
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view src) {
  Scanner s(src);
  Term t = term_at(s);
  expect_end(s);
  return t;
}

Relation parse_relation(std::string_view src) {
  Scanner s(src);
  Relation r = RelationParser(s).disjunction();
  expect_end(s);
  return r;
}

std::vector<ProofScript> parse_proof_corpus(std::string_view src) {
  Scanner s(src);
  std::vector<ProofScript> out;
  while (s.peek() != '\0') out.push_back(parse_lemma(s));
  return out;
}

ProofScript parse_proof_script(std::string_view src) {
  Scanner s(src);
  if (s.peek() == '\0') s.fail("expected 'lemma'");
  ProofScript script = parse_lemma(s);
  if (s.peek() != '\0') s.fail("expected end of input after 'qed'");
  return script;
}

std::string render_term(const Term& t, RenderStyle style) {
  std::string out;
  Renderer(style).term(t, out);
  // `||` would lex as an error; nested bars get a separating space.
  for (auto pos = out.find("||"); pos != std::string::npos; pos = out.find("||", pos)) {
    out.insert(pos + 1, " ");
  }
  return out;
}

std::string render_relation(const Relation& r) {
  std::string out;
  render_rel(r, out);
  return out;
}

std::string render_proof_script(const ProofScript& script) {
  constexpr auto style = RenderStyle::readable;
  std::string out = "lemma " + script.name + " : " + render_term(script.goal_lhs, style) + " = " +
                    render_term(script.goal_rhs, style) + "\n";
  for (const auto& step : script.steps) {
    out += "  = " + render_term(step.result, style) + "  by " + step.rule +
           (step.direction == Direction::r2l ? "~" : "") + " at " + step.at.to_string();
    if (!step.bindings.empty()) {
      out += " with ";
      bool first = true;
      for (const auto& [meta, value] : step.bindings) {
        if (!first) out += ", ";
        first = false;
        out += meta + " := " + render_term(value, style);
      }
    }
    out += "\n";
  }
  out += "qed\n";
  return out;
}

}  // namespace diffalg
