#include "pir/semantics.hpp"

#include <algorithm>

namespace pir {

const char* ruleName(RuleKind k) {
  switch (k) {
    case RuleKind::InputPrefix: return "ax-in";
    case RuleKind::OutputPrefix: return "ax-out";
    case RuleKind::ChoiceL: return "choiceL";
    case RuleKind::ChoiceR: return "choiceR";
    case RuleKind::ParL: return "parL";
    case RuleKind::ParR: return "parR";
    case RuleKind::SynchL: return "synchL";
    case RuleKind::SynchR: return "synchR";
    case RuleKind::NuExtrude: return "nu^";
    case RuleKind::NuSynchL: return "nuSynchL";
    case RuleKind::NuSynchR: return "nuSynchR";
    case RuleKind::NuProp: return "nu";
    case RuleKind::Rep: return "rep";
  }
  return "?";
}

namespace {

TransitionPtr make(Transition t) {
  return std::make_shared<const Transition>(std::move(t));
}

// True iff a = push a' for some a'; i.e. no contained index is 0.
bool isPushImage(const Action& a) {
  switch (a.kind) {
    case ActKind::Tau: return true;
    case ActKind::Input:
    case ActKind::BoundOutput: return a.subject >= 1;
    case ActKind::Output: return a.subject >= 1 && a.object >= 1;
  }
  return false;
}

Action unpush(const Action& a) {
  switch (a.kind) {
    case ActKind::Tau: return Action::tau();
    case ActKind::Input: return Action::input(a.subject - 1);
    case ActKind::BoundOutput: return Action::boundOutput(a.subject - 1);
    case ActKind::Output: return Action::output(a.subject - 1, a.object - 1);
  }
  raise(Errc::IllFormed, "unpush: bad action");
}

}  // namespace

TransitionPtr mkInputPrefix(Context ctx, const ProcessPtr& prefixed) {
  if (!prefixed || prefixed->kind != ProcKind::Input || !checkProcess(ctx, prefixed))
    raise(Errc::IllFormed, "mkInputPrefix: not a well-formed input prefix");
  return make({RuleKind::InputPrefix, nullptr, nullptr, ctx, prefixed,
               Action::input(prefixed->subject), ctx + 1, prefixed->left});
}

TransitionPtr mkOutputPrefix(Context ctx, const ProcessPtr& prefixed) {
  if (!prefixed || prefixed->kind != ProcKind::Output || !checkProcess(ctx, prefixed))
    raise(Errc::IllFormed, "mkOutputPrefix: not a well-formed output prefix");
  return make({RuleKind::OutputPrefix, nullptr, nullptr, ctx, prefixed,
               Action::output(prefixed->subject, prefixed->object), ctx, prefixed->left});
}

TransitionPtr mkChoiceL(const TransitionPtr& sub, const ProcessPtr& right) {
  if (!sub || !checkProcess(sub->sourceCtx, right))
    raise(Errc::IllFormed, "mkChoiceL: bad inactive branch");
  return make({RuleKind::ChoiceL, sub, nullptr, sub->sourceCtx,
               choice(sub->source, right), sub->action, sub->targetCtx, sub->target});
}

TransitionPtr mkChoiceR(const ProcessPtr& left, const TransitionPtr& sub) {
  if (!sub || !checkProcess(sub->sourceCtx, left))
    raise(Errc::IllFormed, "mkChoiceR: bad inactive branch");
  return make({RuleKind::ChoiceR, sub, nullptr, sub->sourceCtx,
               choice(left, sub->source), sub->action, sub->targetCtx, sub->target});
}

TransitionPtr mkParL(const TransitionPtr& sub, const ProcessPtr& right) {
  if (!sub || !checkProcess(sub->sourceCtx, right))
    raise(Errc::IllFormed, "mkParL: bad passive branch");
  ProcessPtr passive =
      isBound(sub->action) ? renameProcess(mkPush(sub->sourceCtx), right) : right;
  return make({RuleKind::ParL, sub, nullptr, sub->sourceCtx, par(sub->source, right),
               sub->action, sub->targetCtx, par(sub->target, passive)});
}

TransitionPtr mkParR(const ProcessPtr& left, const TransitionPtr& sub) {
  if (!sub || !checkProcess(sub->sourceCtx, left))
    raise(Errc::IllFormed, "mkParR: bad passive branch");
  ProcessPtr passive =
      isBound(sub->action) ? renameProcess(mkPush(sub->sourceCtx), left) : left;
  return make({RuleKind::ParR, sub, nullptr, sub->sourceCtx, par(left, sub->source),
               sub->action, sub->targetCtx, par(passive, sub->target)});
}

TransitionPtr mkSynchL(const TransitionPtr& in, const TransitionPtr& out) {
  if (!in || !out || in->sourceCtx != out->sourceCtx)
    raise(Errc::IllFormed, "mkSynchL: premise contexts differ");
  if (in->action.kind != ActKind::Input || out->action.kind != ActKind::Output ||
      in->action.subject != out->action.subject)
    raise(Errc::InvalidDerivation, "mkSynchL: premises do not synchronise");
  const Context ctx = in->sourceCtx;
  const Name y = out->action.object;
  return make({RuleKind::SynchL, in, out, ctx, par(in->source, out->source),
               Action::tau(), ctx,
               par(renameProcess(mkPop(ctx, y), in->target), out->target)});
}

TransitionPtr mkSynchR(const TransitionPtr& out, const TransitionPtr& in) {
  if (!out || !in || in->sourceCtx != out->sourceCtx)
    raise(Errc::IllFormed, "mkSynchR: premise contexts differ");
  if (in->action.kind != ActKind::Input || out->action.kind != ActKind::Output ||
      in->action.subject != out->action.subject)
    raise(Errc::InvalidDerivation, "mkSynchR: premises do not synchronise");
  const Context ctx = in->sourceCtx;
  const Name y = out->action.object;
  return make({RuleKind::SynchR, out, in, ctx, par(out->source, in->source),
               Action::tau(), ctx,
               par(out->target, renameProcess(mkPop(ctx, y), in->target))});
}

TransitionPtr mkNuExtrude(const TransitionPtr& sub) {
  if (!sub) raise(Errc::IllFormed, "mkNuExtrude: null premise");
  if (sub->sourceCtx == 0) raise(Errc::IllFormed, "mkNuExtrude: empty premise context");
  if (sub->action.kind != ActKind::Output || sub->action.subject < 1 ||
      sub->action.object != 0)
    raise(Errc::InvalidDerivation, "mkNuExtrude: premise must output index 0 on x+1");
  const Context ctx = sub->sourceCtx - 1;
  return make({RuleKind::NuExtrude, sub, nullptr, ctx, restrictP(sub->source),
               Action::boundOutput(sub->action.subject - 1), ctx + 1, sub->target});
}

TransitionPtr mkNuSynchL(const TransitionPtr& in, const TransitionPtr& boundOut) {
  if (!in || !boundOut || in->sourceCtx != boundOut->sourceCtx)
    raise(Errc::IllFormed, "mkNuSynchL: premise contexts differ");
  if (in->action.kind != ActKind::Input || boundOut->action.kind != ActKind::BoundOutput ||
      in->action.subject != boundOut->action.subject)
    raise(Errc::InvalidDerivation, "mkNuSynchL: premises do not nu-synchronise");
  const Context ctx = in->sourceCtx;
  return make({RuleKind::NuSynchL, in, boundOut, ctx, par(in->source, boundOut->source),
               Action::tau(), ctx, restrictP(par(in->target, boundOut->target))});
}

TransitionPtr mkNuSynchR(const TransitionPtr& boundOut, const TransitionPtr& in) {
  if (!boundOut || !in || in->sourceCtx != boundOut->sourceCtx)
    raise(Errc::IllFormed, "mkNuSynchR: premise contexts differ");
  if (in->action.kind != ActKind::Input || boundOut->action.kind != ActKind::BoundOutput ||
      in->action.subject != boundOut->action.subject)
    raise(Errc::InvalidDerivation, "mkNuSynchR: premises do not nu-synchronise");
  const Context ctx = in->sourceCtx;
  return make({RuleKind::NuSynchR, boundOut, in, ctx, par(boundOut->source, in->source),
               Action::tau(), ctx, restrictP(par(boundOut->target, in->target))});
}

TransitionPtr mkNuProp(const TransitionPtr& sub) {
  if (!sub) raise(Errc::IllFormed, "mkNuProp: null premise");
  if (sub->sourceCtx == 0) raise(Errc::IllFormed, "mkNuProp: empty premise context");
  if (!isPushImage(sub->action))
    raise(Errc::InvalidDerivation, "mkNuProp: action mentions the binder");
  const Context ctx = sub->sourceCtx - 1;
  const Action a = unpush(sub->action);
  if (isBound(a)) {
    // target context of the premise is ctx+2; swap the two binder indices
    ProcessPtr body = renameProcess(mkSwap(ctx), sub->target);
    return make({RuleKind::NuProp, sub, nullptr, ctx, restrictP(sub->source), a,
                 ctx + 1, restrictP(body)});
  }
  return make({RuleKind::NuProp, sub, nullptr, ctx, restrictP(sub->source), a, ctx,
               restrictP(sub->target)});
}

TransitionPtr mkRep(const TransitionPtr& sub) {
  if (!sub) raise(Errc::IllFormed, "mkRep: null premise");
  const ProcessPtr& src = sub->source;
  if (!src || src->kind != ProcKind::Par || !src->right ||
      src->right->kind != ProcKind::Replicate ||
      !processEqual(src->left, src->right->left))
    raise(Errc::InvalidDerivation, "mkRep: premise source is not P | !P");
  return make({RuleKind::Rep, sub, nullptr, sub->sourceCtx, src->right, sub->action,
               sub->targetCtx, sub->target});
}

Name synchObject(const Transition& t) {
  switch (t.rule) {
    case RuleKind::SynchL: return t.second->action.object;
    case RuleKind::SynchR: return t.first->action.object;
    default: raise(Errc::IllFormed, "synchObject: not a synchronisation");
  }
}

bool transitionEqual(const TransitionPtr& a, const TransitionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->sourceCtx != b->sourceCtx ||
      !(a->action == b->action) || !processEqual(a->source, b->source) ||
      !processEqual(a->target, b->target))
    return false;
  if (!!a->first != !!b->first || !!a->second != !!b->second) return false;
  if (a->first && !transitionEqual(a->first, b->first)) return false;
  if (a->second && !transitionEqual(a->second, b->second)) return false;
  return true;
}

std::vector<TransitionPtr> enumerateTransitions(Context ctx, const ProcessPtr& p,
                                                unsigned repFuel) {
  if (!checkProcess(ctx, p)) raise(Errc::IllFormed, "enumerateTransitions: ill-formed");
  std::vector<TransitionPtr> out;
  switch (p->kind) {
    case ProcKind::Nil: break;
    case ProcKind::Input: out.push_back(mkInputPrefix(ctx, p)); break;
    case ProcKind::Output: out.push_back(mkOutputPrefix(ctx, p)); break;
    case ProcKind::Choice: {
      for (const auto& t : enumerateTransitions(ctx, p->left, repFuel))
        out.push_back(mkChoiceL(t, p->right));
      for (const auto& t : enumerateTransitions(ctx, p->right, repFuel))
        out.push_back(mkChoiceR(p->left, t));
      break;
    }
    case ProcKind::Par: {
      const auto ls = enumerateTransitions(ctx, p->left, repFuel);
      const auto rs = enumerateTransitions(ctx, p->right, repFuel);
      for (const auto& t : ls) out.push_back(mkParL(t, p->right));
      for (const auto& u : rs) out.push_back(mkParR(p->left, u));
      for (const auto& t : ls)
        for (const auto& u : rs)
          if (t->action.kind == ActKind::Input && u->action.kind == ActKind::Output &&
              t->action.subject == u->action.subject)
            out.push_back(mkSynchL(t, u));
      for (const auto& t : ls)
        for (const auto& u : rs)
          if (t->action.kind == ActKind::Output && u->action.kind == ActKind::Input &&
              t->action.subject == u->action.subject)
            out.push_back(mkSynchR(t, u));
      for (const auto& t : ls)
        for (const auto& u : rs)
          if (t->action.kind == ActKind::Input &&
              u->action.kind == ActKind::BoundOutput &&
              t->action.subject == u->action.subject)
            out.push_back(mkNuSynchL(t, u));
      for (const auto& t : ls)
        for (const auto& u : rs)
          if (t->action.kind == ActKind::BoundOutput &&
              u->action.kind == ActKind::Input &&
              t->action.subject == u->action.subject)
            out.push_back(mkNuSynchR(t, u));
      break;
    }
    case ProcKind::Restrict: {
      const auto subs = enumerateTransitions(ctx + 1, p->left, repFuel);
      for (const auto& t : subs)
        if (t->action.kind == ActKind::Output && t->action.subject >= 1 &&
            t->action.object == 0)
          out.push_back(mkNuExtrude(t));
      for (const auto& t : subs)
        if (isPushImage(t->action)) out.push_back(mkNuProp(t));
      break;
    }
    case ProcKind::Replicate: {
      if (repFuel > 0) {
        const ProcessPtr unfolded = par(p->left, p);
        for (const auto& t : enumerateTransitions(ctx, unfolded, repFuel - 1))
          out.push_back(mkRep(t));
      }
      break;
    }
  }
  return out;
}

namespace {
bool validateAt(const TransitionPtr& t) {
  if (!t) return false;
  try {
    TransitionPtr rebuilt;
    switch (t->rule) {
      case RuleKind::InputPrefix: rebuilt = mkInputPrefix(t->sourceCtx, t->source); break;
      case RuleKind::OutputPrefix: rebuilt = mkOutputPrefix(t->sourceCtx, t->source); break;
      case RuleKind::ChoiceL:
        if (!validateAt(t->first) || t->source->kind != ProcKind::Choice) return false;
        rebuilt = mkChoiceL(t->first, t->source->right);
        break;
      case RuleKind::ChoiceR:
        if (!validateAt(t->first) || t->source->kind != ProcKind::Choice) return false;
        rebuilt = mkChoiceR(t->source->left, t->first);
        break;
      case RuleKind::ParL:
        if (!validateAt(t->first) || t->source->kind != ProcKind::Par) return false;
        rebuilt = mkParL(t->first, t->source->right);
        break;
      case RuleKind::ParR:
        if (!validateAt(t->first) || t->source->kind != ProcKind::Par) return false;
        rebuilt = mkParR(t->source->left, t->first);
        break;
      case RuleKind::SynchL:
        if (!validateAt(t->first) || !validateAt(t->second)) return false;
        rebuilt = mkSynchL(t->first, t->second);
        break;
      case RuleKind::SynchR:
        if (!validateAt(t->first) || !validateAt(t->second)) return false;
        rebuilt = mkSynchR(t->first, t->second);
        break;
      case RuleKind::NuExtrude:
        if (!validateAt(t->first)) return false;
        rebuilt = mkNuExtrude(t->first);
        break;
      case RuleKind::NuSynchL:
        if (!validateAt(t->first) || !validateAt(t->second)) return false;
        rebuilt = mkNuSynchL(t->first, t->second);
        break;
      case RuleKind::NuSynchR:
        if (!validateAt(t->first) || !validateAt(t->second)) return false;
        rebuilt = mkNuSynchR(t->first, t->second);
        break;
      case RuleKind::NuProp:
        if (!validateAt(t->first)) return false;
        rebuilt = mkNuProp(t->first);
        break;
      case RuleKind::Rep:
        if (!validateAt(t->first)) return false;
        rebuilt = mkRep(t->first);
        break;
    }
    return rebuilt && rebuilt->sourceCtx == t->sourceCtx &&
           processEqual(rebuilt->source, t->source) && rebuilt->action == t->action &&
           rebuilt->targetCtx == t->targetCtx && processEqual(rebuilt->target, t->target);
  } catch (const Error&) {
    return false;
  }
}
}  // namespace

bool validateTransition(const TransitionPtr& t) { return validateAt(t); }

TransitionPtr renameTransition(const Renaming& r, const TransitionPtr& t) {
  if (!t) raise(Errc::IllFormed, "renameTransition: null transition");
  if (r.domain != t->sourceCtx)
    raise(Errc::DomainMismatch, "renameTransition: domain != source context");
  switch (t->rule) {
    case RuleKind::InputPrefix:
      return mkInputPrefix(r.codomain, renameProcess(r, t->source));
    case RuleKind::OutputPrefix:
      return mkOutputPrefix(r.codomain, renameProcess(r, t->source));
    case RuleKind::ChoiceL:
      return mkChoiceL(renameTransition(r, t->first),
                       renameProcess(r, t->source->right));
    case RuleKind::ChoiceR:
      return mkChoiceR(renameProcess(r, t->source->left),
                       renameTransition(r, t->first));
    case RuleKind::ParL:
      return mkParL(renameTransition(r, t->first), renameProcess(r, t->source->right));
    case RuleKind::ParR:
      return mkParR(renameProcess(r, t->source->left), renameTransition(r, t->first));
    case RuleKind::SynchL:
      return mkSynchL(renameTransition(r, t->first), renameTransition(r, t->second));
    case RuleKind::SynchR:
      return mkSynchR(renameTransition(r, t->first), renameTransition(r, t->second));
    case RuleKind::NuExtrude:
      return mkNuExtrude(renameTransition(lift(r), t->first));
    case RuleKind::NuSynchL:
      return mkNuSynchL(renameTransition(r, t->first), renameTransition(r, t->second));
    case RuleKind::NuSynchR:
      return mkNuSynchR(renameTransition(r, t->first), renameTransition(r, t->second));
    case RuleKind::NuProp:
      return mkNuProp(renameTransition(lift(r), t->first));
    case RuleKind::Rep:
      return mkRep(renameTransition(r, t->first));
  }
  raise(Errc::IllFormed, "renameTransition: bad rule");
}

std::string serializeProof(const TransitionPtr& t) {
  if (!t) raise(Errc::IllFormed, "serializeProof: null transition");
  const std::string name = ruleName(t->rule);
  switch (t->rule) {
    case RuleKind::InputPrefix:
    case RuleKind::OutputPrefix: return name;
    case RuleKind::SynchL:
    case RuleKind::SynchR:
    case RuleKind::NuSynchL:
    case RuleKind::NuSynchR:
      return name + "(" + serializeProof(t->first) + "," + serializeProof(t->second) + ")";
    default: return name + "(" + serializeProof(t->first) + ")";
  }
}

namespace {

struct ProofParser {
  const std::string& text;
  std::size_t pos{0};

  [[noreturn]] void fail(const std::string& msg) {
    raise(Errc::SyntaxError, "proof: " + msg + " at offset " + std::to_string(pos));
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

  std::string tag() {
    skipWs();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '^' ||
            text[pos] == '-'))
      ++pos;
    if (start == pos) fail("expected rule tag");
    return text.substr(start, pos - start);
  }

  TransitionPtr node(Context ctx, const ProcessPtr& p) {
    const std::string t = tag();
    if (t == "ax-in") {
      if (p->kind != ProcKind::Input) fail("ax-in does not match process");
      return mkInputPrefix(ctx, p);
    }
    if (t == "ax-out") {
      if (p->kind != ProcKind::Output) fail("ax-out does not match process");
      return mkOutputPrefix(ctx, p);
    }
    if (!eat('(')) fail("expected '('");
    TransitionPtr result;
    if (t == "choiceL") {
      if (p->kind != ProcKind::Choice) fail("choiceL does not match process");
      result = mkChoiceL(node(ctx, p->left), p->right);
    } else if (t == "choiceR") {
      if (p->kind != ProcKind::Choice) fail("choiceR does not match process");
      result = mkChoiceR(p->left, node(ctx, p->right));
    } else if (t == "parL") {
      if (p->kind != ProcKind::Par) fail("parL does not match process");
      result = mkParL(node(ctx, p->left), p->right);
    } else if (t == "parR") {
      if (p->kind != ProcKind::Par) fail("parR does not match process");
      result = mkParR(p->left, node(ctx, p->right));
    } else if (t == "synchL" || t == "synchR" || t == "nuSynchL" || t == "nuSynchR") {
      if (p->kind != ProcKind::Par) fail(t + " does not match process");
      TransitionPtr a = node(ctx, p->left);
      if (!eat(',')) fail("expected ','");
      TransitionPtr b = node(ctx, p->right);
      if (t == "synchL") result = mkSynchL(a, b);
      else if (t == "synchR") result = mkSynchR(a, b);
      else if (t == "nuSynchL") result = mkNuSynchL(a, b);
      else result = mkNuSynchR(a, b);
    } else if (t == "nu^") {
      if (p->kind != ProcKind::Restrict) fail("nu^ does not match process");
      result = mkNuExtrude(node(ctx + 1, p->left));
    } else if (t == "nu") {
      if (p->kind != ProcKind::Restrict) fail("nu does not match process");
      result = mkNuProp(node(ctx + 1, p->left));
    } else if (t == "rep") {
      if (p->kind != ProcKind::Replicate) fail("rep does not match process");
      result = mkRep(node(ctx, par(p->left, p)));
    } else {
      fail("unknown rule tag '" + t + "'");
    }
    if (!eat(')')) fail("expected ')'");
    return result;
  }
};

}  // namespace

TransitionPtr parseProof(Context ctx, const ProcessPtr& p, const std::string& text) {
  if (!checkProcess(ctx, p)) raise(Errc::IllFormed, "parseProof: ill-formed process");
  ProofParser parser{text};
  TransitionPtr t;
  try {
    t = parser.node(ctx, p);
  } catch (const Error& e) {
    if (e.code == Errc::SyntaxError) throw;
    raise(Errc::InvalidDerivation, e.what());
  }
  parser.skipWs();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return t;
}

unsigned repNesting(const TransitionPtr& t) {
  if (!t) return 0;
  unsigned sub = std::max(repNesting(t->first), repNesting(t->second));
  return sub + (t->rule == RuleKind::Rep ? 1u : 0u);
}

}  // namespace pir
