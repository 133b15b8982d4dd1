#include "pir/renaming.hpp"

namespace pir {

Renaming mkIdentity(Context g) {
  Renaming r{g, g, {}, "id"};
  r.table.reserve(g);
  for (Name i = 0; i < g; ++i) r.table.push_back(i);
  return r;
}

Renaming mkPush(Context g) {
  Renaming r{g, g + 1, {}, "push"};
  r.table.reserve(g);
  for (Name i = 0; i < g; ++i) r.table.push_back(i + 1);
  return r;
}

Renaming mkPop(Context g, Name y) {
  if (y >= g) raise(Errc::OutOfRange, "pop target outside context");
  Renaming r{g + 1, g, {}, "pop(" + std::to_string(y) + ")"};
  r.table.reserve(g + 1);
  r.table.push_back(y);
  for (Name i = 0; i < g; ++i) r.table.push_back(i);
  return r;
}

Renaming mkSwap(Context g) {
  Renaming r{g + 2, g + 2, {}, "swap"};
  r.table.reserve(g + 2);
  r.table.push_back(1);
  r.table.push_back(0);
  for (Name i = 2; i < g + 2; ++i) r.table.push_back(i);
  return r;
}

Name applyToName(const Renaming& r, Name x) {
  if (x >= r.domain) raise(Errc::OutOfRange, "name outside renaming domain");
  return r.table[x];
}

Renaming lift(const Renaming& r) {
  Renaming s{r.domain + 1, r.codomain + 1, {}, ""};
  s.table.reserve(r.domain + 1);
  s.table.push_back(0);
  for (Name i = 0; i < r.domain; ++i) s.table.push_back(r.table[i] + 1);
  s.label = r.label.empty() ? "" : "suc " + r.label;
  return s;
}

Renaming liftN(const Renaming& r, Context n) {
  Renaming s = r;
  for (Context i = 0; i < n; ++i) s = lift(s);
  if (!r.label.empty() && n > 0) s.label = r.label + "+" + std::to_string(n);
  return s;
}

Renaming compose(const Renaming& outer, const Renaming& inner) {
  if (inner.codomain != outer.domain)
    raise(Errc::DomainMismatch, "compose: inner codomain != outer domain");
  Renaming s{inner.domain, outer.codomain, {}, ""};
  s.table.reserve(inner.domain);
  for (Name i = 0; i < inner.domain; ++i) s.table.push_back(outer.table[inner.table[i]]);
  return s;
}

bool renamingsEqual(const Renaming& a, const Renaming& b) {
  return a.domain == b.domain && a.codomain == b.codomain && a.table == b.table;
}

Action renameAction(const Renaming& r, const Action& a) {
  if (!checkAction(r.domain, a))
    raise(Errc::IllFormed, "renameAction: action outside domain");
  switch (a.kind) {
    case ActKind::Input: return Action::input(r.table[a.subject]);
    case ActKind::BoundOutput: return Action::boundOutput(r.table[a.subject]);
    case ActKind::Output: return Action::output(r.table[a.subject], r.table[a.object]);
    case ActKind::Tau: return Action::tau();
  }
  raise(Errc::IllFormed, "renameAction: bad action");
}

ProcessPtr renameProcess(const Renaming& r, const ProcessPtr& p) {
  if (!p) raise(Errc::IllFormed, "renameProcess: null process");
  switch (p->kind) {
    case ProcKind::Nil: return nil();
    case ProcKind::Input:
      return input(applyToName(r, p->subject), renameProcess(lift(r), p->left));
    case ProcKind::Output:
      return output(applyToName(r, p->subject), applyToName(r, p->object),
                    renameProcess(r, p->left));
    case ProcKind::Choice:
      return choice(renameProcess(r, p->left), renameProcess(r, p->right));
    case ProcKind::Par:
      return par(renameProcess(r, p->left), renameProcess(r, p->right));
    case ProcKind::Restrict:
      return restrictP(renameProcess(lift(r), p->left));
    case ProcKind::Replicate:
      return replicate(renameProcess(r, p->left));
  }
  raise(Errc::IllFormed, "renameProcess: bad node");
}

std::vector<Renaming> enumerateRenamings(Context domain, Context codomain) {
  std::vector<Renaming> out;
  if (domain > 0 && codomain == 0) return out;
  std::vector<Name> table(domain, 0);
  while (true) {
    out.push_back(Renaming{domain, codomain, table, ""});
    std::size_t i = 0;
    for (; i < domain; ++i) {
      if (table[i] + 1 < codomain) {
        ++table[i];
        for (std::size_t j = 0; j < i; ++j) table[j] = 0;
        break;
      }
    }
    if (i == domain) break;
  }
  return out;
}

}  // namespace pir
