#include "pir/surface.hpp"

#include <cctype>
#include <vector>

namespace pir {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos{0};
  std::vector<std::string> scope;  // innermost binder last; index = distance from end

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) {
    raise(Errc::SyntaxError, msg + " at offset " + std::to_string(pos));
  }

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skipWs();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool peekIdentStart() {
    skipWs();
    return pos < text.size() &&
           (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_');
  }

  std::string ident() {
    skipWs();
    if (!peekIdentStart()) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  bool keyword(const std::string& kw) {
    skipWs();
    std::size_t save = pos;
    if (text.compare(pos, kw.size(), kw) != 0) return false;
    std::size_t after = pos + kw.size();
    if (after < text.size() &&
        (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_')) {
      pos = save;
      return false;
    }
    pos = after;
    return true;
  }

  Name resolve(const std::string& id) {
    for (std::size_t i = 0; i < scope.size(); ++i) {
      if (scope[scope.size() - 1 - i] == id) return static_cast<Name>(i);
    }
    raise(Errc::UnboundName, "unbound name '" + id + "' at offset " + std::to_string(pos));
  }

  ProcessPtr sum() {
    ProcessPtr p = parLevel();
    while (eat('+')) p = choice(p, parLevel());
    return p;
  }

  ProcessPtr parLevel() {
    ProcessPtr p = bang();
    while (eat('|')) p = par(p, bang());
    return p;
  }

  ProcessPtr bang() {
    if (eat('!')) return replicate(bang());
    return prefix();
  }

  ProcessPtr prefix() {
    skipWs();
    if (eat('0')) return nil();
    if (eat('(')) {
      ProcessPtr p = sum();
      expect(')');
      return p;
    }
    if (keyword("new")) {
      std::string binder = ident();
      expect('.');
      scope.push_back(binder);
      ProcessPtr body = prefix();
      scope.pop_back();
      return restrictP(body);
    }
    std::string id = ident();
    Name subject = resolve(id);
    skipWs();
    if (eat('<')) {
      Name object = resolve(ident());
      expect('>');
      expect('.');
      return output(subject, object, prefix());
    }
    if (eat('(')) {
      std::string binder = ident();
      expect(')');
      expect('.');
      scope.push_back(binder);
      ProcessPtr body = prefix();
      scope.pop_back();
      return input(subject, body);
    }
    fail("expected '<' or '(' after channel name");
  }

  std::pair<Context, ProcessPtr> program() {
    if (!keyword("free")) fail("expected 'free' preamble");
    std::vector<std::string> freeNames;
    while (peekIdentStart()) freeNames.push_back(ident());
    expect(';');
    // First declared name gets index 0; scope stores innermost last.
    for (auto it = freeNames.rbegin(); it != freeNames.rend(); ++it) scope.push_back(*it);
    ProcessPtr body = sum();
    skipWs();
    if (pos != text.size()) fail("trailing input");
    return {static_cast<Context>(freeNames.size()), body};
  }
};

enum class Level { Sum, Par, Bang, Prefix };

struct Printer {
  std::vector<std::string> scope;
  int nextBinder{0};
  std::string out;

  std::string nameOf(Name x) { return scope[scope.size() - 1 - x]; }

  void print(const ProcessPtr& p, Level lvl) {
    const bool needParens = [&] {
      switch (p->kind) {
        case ProcKind::Choice: return lvl != Level::Sum;
        case ProcKind::Par: return lvl == Level::Bang || lvl == Level::Prefix;
        case ProcKind::Replicate: return lvl == Level::Prefix;
        default: return false;
      }
    }();
    if (needParens) out += "(";
    switch (p->kind) {
      case ProcKind::Nil: out += "0"; break;
      case ProcKind::Input: {
        out += nameOf(p->subject);
        std::string binder = "x" + std::to_string(nextBinder++);
        out += "(" + binder + ").";
        scope.push_back(binder);
        print(p->left, Level::Prefix);
        scope.pop_back();
        break;
      }
      case ProcKind::Output:
        out += nameOf(p->subject) + "<" + nameOf(p->object) + ">.";
        print(p->left, Level::Prefix);
        break;
      case ProcKind::Choice:
        print(p->left, Level::Sum);
        out += " + ";
        // right operand of a left-associative operator: one level down
        print(p->right, Level::Par);
        break;
      case ProcKind::Par:
        print(p->left, Level::Par);
        out += " | ";
        print(p->right, Level::Bang);
        break;
      case ProcKind::Restrict: {
        std::string binder = "x" + std::to_string(nextBinder++);
        out += "new " + binder + ". ";
        scope.push_back(binder);
        print(p->left, Level::Prefix);
        scope.pop_back();
        break;
      }
      case ProcKind::Replicate:
        out += "!";
        print(p->left, Level::Bang);
        break;
    }
    if (needParens) out += ")";
  }
};

}  // namespace

std::pair<Context, ProcessPtr> parse(const std::string& text) {
  Parser p(text);
  auto result = p.program();
  if (!checkProcess(result.first, result.second))
    raise(Errc::IllFormed, "parsed process fails well-formedness");
  return result;
}

std::string printNamed(Context ctx, const ProcessPtr& p) {
  if (!checkProcess(ctx, p)) raise(Errc::IllFormed, "printNamed: ill-formed process");
  Printer pr;
  pr.out += "free";
  for (Context i = 0; i < ctx; ++i) pr.out += " a" + std::to_string(i);
  pr.out += "; ";
  // index 0 = first declared = innermost of the scope stack
  for (Context i = ctx; i > 0; --i) pr.scope.push_back("a" + std::to_string(i - 1));
  pr.print(p, Level::Sum);
  return pr.out;
}

std::string printDeBruijn(Context ctx, const ProcessPtr& p) {
  if (!p) return "<null>";
  switch (p->kind) {
    case ProcKind::Nil: return "0";
    case ProcKind::Input:
      return std::to_string(p->subject) + "(.)." + printDeBruijn(ctx + 1, p->left);
    case ProcKind::Output:
      return std::to_string(p->subject) + "<" + std::to_string(p->object) + ">." +
             printDeBruijn(ctx, p->left);
    case ProcKind::Choice:
      return "(" + printDeBruijn(ctx, p->left) + " + " + printDeBruijn(ctx, p->right) + ")";
    case ProcKind::Par:
      return "(" + printDeBruijn(ctx, p->left) + " | " + printDeBruijn(ctx, p->right) + ")";
    case ProcKind::Restrict: return "nu." + printDeBruijn(ctx + 1, p->left);
    case ProcKind::Replicate: return "!" + printDeBruijn(ctx, p->left);
  }
  return "?";
}

}  // namespace pir
