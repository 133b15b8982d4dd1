#include "pir/syntax.hpp"

namespace pir {

const char* errcName(Errc c) {
  switch (c) {
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::IllFormed: return "IllFormed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::InvalidDerivation: return "InvalidDerivation";
    case Errc::NotCoinitial: return "NotCoinitial";
    case Errc::NotConcurrent: return "NotConcurrent";
    case Errc::NotComposable: return "NotComposable";
    case Errc::EndpointMismatch: return "EndpointMismatch";
    case Errc::CofinalityViolation: return "CofinalityViolation";
  }
  return "Error";
}

Context magnitude(const Action& a) {
  return (a.kind == ActKind::Input || a.kind == ActKind::BoundOutput) ? 1 : 0;
}

bool isBound(const Action& a) { return magnitude(a) == 1; }

bool checkAction(Context ctx, const Action& a) {
  switch (a.kind) {
    case ActKind::Input:
    case ActKind::BoundOutput: return a.subject < ctx;
    case ActKind::Output: return a.subject < ctx && a.object < ctx;
    case ActKind::Tau: return true;
  }
  return false;
}

std::string showAction(const Action& a) {
  switch (a.kind) {
    case ActKind::Input: return std::to_string(a.subject) + "(.)";
    case ActKind::Output:
      return std::to_string(a.subject) + "<" + std::to_string(a.object) + ">";
    case ActKind::BoundOutput: return std::to_string(a.subject) + "^(.)";
    case ActKind::Tau: return "tau";
  }
  return "?";
}

namespace {
ProcessPtr make(Process p) { return std::make_shared<const Process>(std::move(p)); }
}  // namespace

ProcessPtr nil() {
  static const ProcessPtr n = make({ProcKind::Nil, 0, 0, nullptr, nullptr});
  return n;
}
ProcessPtr input(Name x, ProcessPtr body) {
  return make({ProcKind::Input, x, 0, std::move(body), nullptr});
}
ProcessPtr output(Name x, Name y, ProcessPtr body) {
  return make({ProcKind::Output, x, y, std::move(body), nullptr});
}
ProcessPtr choice(ProcessPtr l, ProcessPtr r) {
  return make({ProcKind::Choice, 0, 0, std::move(l), std::move(r)});
}
ProcessPtr par(ProcessPtr l, ProcessPtr r) {
  return make({ProcKind::Par, 0, 0, std::move(l), std::move(r)});
}
ProcessPtr restrictP(ProcessPtr body) {
  return make({ProcKind::Restrict, 0, 0, std::move(body), nullptr});
}
ProcessPtr replicate(ProcessPtr body) {
  return make({ProcKind::Replicate, 0, 0, std::move(body), nullptr});
}

bool processEqual(const ProcessPtr& a, const ProcessPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->subject != b->subject || a->object != b->object)
    return false;
  switch (a->kind) {
    case ProcKind::Nil: return true;
    case ProcKind::Input:
    case ProcKind::Output:
    case ProcKind::Restrict:
    case ProcKind::Replicate: return processEqual(a->left, b->left);
    case ProcKind::Choice:
    case ProcKind::Par:
      return processEqual(a->left, b->left) && processEqual(a->right, b->right);
  }
  return false;
}

std::size_t nodeCount(const ProcessPtr& p) {
  if (!p) return 0;
  return 1 + nodeCount(p->left) + nodeCount(p->right);
}

namespace {
int compareStructural(const ProcessPtr& a, const ProcessPtr& b);

int compareChild(const ProcessPtr& a, const ProcessPtr& b) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  return compareStructural(a, b);
}

int compareStructural(const ProcessPtr& a, const ProcessPtr& b) {
  const std::size_t na = nodeCount(a), nb = nodeCount(b);
  if (na != nb) return na < nb ? -1 : 1;
  if (a->kind != b->kind)
    return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
  if (int c = compareChild(a->left, b->left)) return c;
  if (int c = compareChild(a->right, b->right)) return c;
  if (a->subject != b->subject) return a->subject < b->subject ? -1 : 1;
  if (a->object != b->object) return a->object < b->object ? -1 : 1;
  return 0;
}
}  // namespace

int compareProcess(const ProcessPtr& a, const ProcessPtr& b) {
  return compareStructural(a, b);
}

bool checkProcess(Context ctx, const ProcessPtr& p) {
  if (!p) return false;
  switch (p->kind) {
    case ProcKind::Nil: return true;
    case ProcKind::Input:
      return p->subject < ctx && checkProcess(ctx + 1, p->left);
    case ProcKind::Output:
      return p->subject < ctx && p->object < ctx && checkProcess(ctx, p->left);
    case ProcKind::Choice:
    case ProcKind::Par:
      return checkProcess(ctx, p->left) && checkProcess(ctx, p->right);
    case ProcKind::Restrict: return checkProcess(ctx + 1, p->left);
    case ProcKind::Replicate: return checkProcess(ctx, p->left);
  }
  return false;
}

namespace {
struct Enumerator {
  // memo[ctx][n] = processes with exactly n nodes in context ctx
  std::vector<std::vector<std::vector<ProcessPtr>>> memo;
  std::vector<std::vector<bool>> done;

  const std::vector<ProcessPtr>& exact(Context ctx, std::size_t n) {
    if (memo.size() <= ctx) {
      memo.resize(ctx + 1);
      done.resize(ctx + 1);
    }
    if (memo[ctx].size() <= n) {
      memo[ctx].resize(n + 1);
      done[ctx].resize(n + 1, false);
    }
    if (done[ctx][n]) return memo[ctx][n];
    std::vector<ProcessPtr> out;
    if (n == 1) {
      out.push_back(nil());
    } else if (n >= 2) {
      const std::size_t m = n - 1;
      // Input: bodies in ctx+1, then subject ascending
      for (const auto& body : exact(ctx + 1, m))
        for (Name x = 0; x < ctx; ++x) out.push_back(input(x, body));
      // Output
      for (const auto& body : exact(ctx, m))
        for (Name x = 0; x < ctx; ++x)
          for (Name y = 0; y < ctx; ++y) out.push_back(output(x, y, body));
      // Choice: left size ascending, then left, then right
      for (std::size_t i = 1; i + 1 <= m; ++i)
        for (const auto& l : exact(ctx, i))
          for (const auto& r : exact(ctx, m - i)) out.push_back(choice(l, r));
      // Par
      for (std::size_t i = 1; i + 1 <= m; ++i)
        for (const auto& l : exact(ctx, i))
          for (const auto& r : exact(ctx, m - i)) out.push_back(par(l, r));
      // Restrict
      for (const auto& body : exact(ctx + 1, m)) out.push_back(restrictP(body));
      // Replicate
      for (const auto& body : exact(ctx, m)) out.push_back(replicate(body));
    }
    memo[ctx][n] = std::move(out);
    done[ctx][n] = true;
    return memo[ctx][n];
  }
};
}  // namespace

std::vector<ProcessPtr> enumerateProcesses(Context ctx, std::size_t maxNodes) {
  if (maxNodes < 1) raise(Errc::OutOfRange, "maxNodes must be >= 1");
  Enumerator e;
  std::vector<ProcessPtr> out;
  for (std::size_t n = 1; n <= maxNodes; ++n) {
    const auto& batch = e.exact(ctx, n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace pir
