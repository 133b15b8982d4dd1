#include "pir/residuation.hpp"

namespace pir {

namespace {

BoundBraidPtr makeBB(BoundBraid b) {
  return std::make_shared<const BoundBraid>(std::move(b));
}

const ProcessPtr& leftOf(const ProcessPtr& p) { return p->left; }
const ProcessPtr& rightOf(const ProcessPtr& p) { return p->right; }
const ProcessPtr& bodyOf(const ProcessPtr& p) { return p->left; }

TransitionPtr pushT(const TransitionPtr& t) {
  return renameTransition(mkPush(t->sourceCtx), t);
}
TransitionPtr popT(Name y, const TransitionPtr& t) {
  return renameTransition(mkPop(t->sourceCtx - 1, y), t);
}
TransitionPtr swapT(const TransitionPtr& t) {
  return renameTransition(mkSwap(t->sourceCtx - 2), t);
}

}  // namespace

BoundBraidPtr bbNuNuSwap(Context ctx, const ProcessPtr& inner) {
  if (!checkProcess(ctx + 2, inner))
    raise(Errc::IllFormed, "bbNuNuSwap: body not well-formed in ctx+2");
  ProcessPtr swapped = renameProcess(mkSwap(ctx), inner);
  return makeBB({BraidRule::NuNuSwap, ctx, inner, nullptr, nullptr,
                 restrictP(restrictP(inner)), restrictP(restrictP(swapped))});
}

BoundBraidPtr bbReflNil(Context ctx) {
  return makeBB({BraidRule::ReflNil, ctx, nil(), nullptr, nullptr, nil(), nil()});
}

BoundBraidPtr bbReflInput(Context ctx, const ProcessPtr& prefixed) {
  if (!prefixed || prefixed->kind != ProcKind::Input || !checkProcess(ctx, prefixed))
    raise(Errc::IllFormed, "bbReflInput: not an input prefix");
  return makeBB({BraidRule::ReflInput, ctx, prefixed, nullptr, nullptr, prefixed, prefixed});
}

BoundBraidPtr bbReflOutput(Context ctx, const ProcessPtr& prefixed) {
  if (!prefixed || prefixed->kind != ProcKind::Output || !checkProcess(ctx, prefixed))
    raise(Errc::IllFormed, "bbReflOutput: not an output prefix");
  return makeBB({BraidRule::ReflOutput, ctx, prefixed, nullptr, nullptr, prefixed, prefixed});
}

BoundBraidPtr bbChoiceL(const BoundBraidPtr& sub, const ProcessPtr& right) {
  if (!sub || !checkProcess(sub->ctx, right))
    raise(Errc::IllFormed, "bbChoiceL: bad inactive branch");
  return makeBB({BraidRule::ChoiceLB, sub->ctx, right, sub, nullptr,
                 choice(sub->source, right), choice(sub->target, right)});
}

BoundBraidPtr bbChoiceR(const ProcessPtr& left, const BoundBraidPtr& sub) {
  if (!sub || !checkProcess(sub->ctx, left))
    raise(Errc::IllFormed, "bbChoiceR: bad inactive branch");
  return makeBB({BraidRule::ChoiceRB, sub->ctx, left, nullptr, sub,
                 choice(left, sub->source), choice(left, sub->target)});
}

BoundBraidPtr bbPar(const BoundBraidPtr& l, const BoundBraidPtr& r) {
  if (!l || !r || l->ctx != r->ctx) raise(Errc::IllFormed, "bbPar: context mismatch");
  return makeBB({BraidRule::ParB, l->ctx, nullptr, l, r, par(l->source, r->source),
                 par(l->target, r->target)});
}

BoundBraidPtr bbRestrict(const BoundBraidPtr& sub) {
  if (!sub || sub->ctx == 0) raise(Errc::IllFormed, "bbRestrict: bad premise");
  return makeBB({BraidRule::RestrictB, sub->ctx - 1, nullptr, sub, nullptr,
                 restrictP(sub->source), restrictP(sub->target)});
}

BoundBraidPtr bbReplicate(const BoundBraidPtr& sub) {
  if (!sub) raise(Errc::IllFormed, "bbReplicate: null premise");
  return makeBB({BraidRule::ReplicateB, sub->ctx, nullptr, sub, nullptr,
                 replicate(sub->source), replicate(sub->target)});
}

BoundBraidPtr reflBraid(Context ctx, const ProcessPtr& p) {
  if (!p) raise(Errc::IllFormed, "reflBraid: null process");
  switch (p->kind) {
    case ProcKind::Nil: return bbReflNil(ctx);
    case ProcKind::Input: return bbReflInput(ctx, p);
    case ProcKind::Output: return bbReflOutput(ctx, p);
    case ProcKind::Choice: return bbChoiceL(reflBraid(ctx, p->left), p->right);
    case ProcKind::Par: return bbPar(reflBraid(ctx, p->left), reflBraid(ctx, p->right));
    case ProcKind::Restrict: return bbRestrict(reflBraid(ctx + 1, p->left));
    case ProcKind::Replicate: return bbReplicate(reflBraid(ctx, p->left));
  }
  raise(Errc::IllFormed, "reflBraid: bad node");
}

BoundBraidPtr reverseBoundBraid(const BoundBraidPtr& b) {
  if (!b) raise(Errc::IllFormed, "reverseBoundBraid: null braid");
  switch (b->rule) {
    case BraidRule::NuNuSwap:
      return bbNuNuSwap(b->ctx, renameProcess(mkSwap(b->ctx), b->inner));
    case BraidRule::ReflNil:
    case BraidRule::ReflInput:
    case BraidRule::ReflOutput: return b;
    case BraidRule::ChoiceLB: return bbChoiceL(reverseBoundBraid(b->left), b->inner);
    case BraidRule::ChoiceRB: return bbChoiceR(b->inner, reverseBoundBraid(b->right));
    case BraidRule::ParB:
      return bbPar(reverseBoundBraid(b->left), reverseBoundBraid(b->right));
    case BraidRule::RestrictB: return bbRestrict(reverseBoundBraid(b->left));
    case BraidRule::ReplicateB: return bbReplicate(reverseBoundBraid(b->left));
  }
  raise(Errc::IllFormed, "reverseBoundBraid: bad rule");
}

bool boundBraidEqual(const BoundBraidPtr& a, const BoundBraidPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->ctx != b->ctx) return false;
  if (!!a->inner != !!b->inner || (a->inner && !processEqual(a->inner, b->inner)))
    return false;
  if (!!a->left != !!b->left || (a->left && !boundBraidEqual(a->left, b->left)))
    return false;
  if (!!a->right != !!b->right || (a->right && !boundBraidEqual(a->right, b->right)))
    return false;
  return true;
}

bool validateBoundBraid(const BoundBraidPtr& b) {
  if (!b) return false;
  try {
    BoundBraidPtr rebuilt;
    switch (b->rule) {
      case BraidRule::NuNuSwap: rebuilt = bbNuNuSwap(b->ctx, b->inner); break;
      case BraidRule::ReflNil: rebuilt = bbReflNil(b->ctx); break;
      case BraidRule::ReflInput: rebuilt = bbReflInput(b->ctx, b->inner); break;
      case BraidRule::ReflOutput: rebuilt = bbReflOutput(b->ctx, b->inner); break;
      case BraidRule::ChoiceLB:
        if (!validateBoundBraid(b->left)) return false;
        rebuilt = bbChoiceL(b->left, b->inner);
        break;
      case BraidRule::ChoiceRB:
        if (!validateBoundBraid(b->right)) return false;
        rebuilt = bbChoiceR(b->inner, b->right);
        break;
      case BraidRule::ParB:
        if (!validateBoundBraid(b->left) || !validateBoundBraid(b->right)) return false;
        rebuilt = bbPar(b->left, b->right);
        break;
      case BraidRule::RestrictB:
        if (!validateBoundBraid(b->left)) return false;
        rebuilt = bbRestrict(b->left);
        break;
      case BraidRule::ReplicateB:
        if (!validateBoundBraid(b->left)) return false;
        rebuilt = bbReplicate(b->left);
        break;
    }
    return rebuilt && processEqual(rebuilt->source, b->source) &&
           processEqual(rebuilt->target, b->target);
  } catch (const Error&) {
    return false;
  }
}

std::string serializeBraid(const BoundBraidPtr& b) {
  if (!b) return "<null>";
  switch (b->rule) {
    case BraidRule::NuNuSwap: return "nuNuSwap";
    case BraidRule::ReflNil: return "refl0";
    case BraidRule::ReflInput: return "reflIn";
    case BraidRule::ReflOutput: return "reflOut";
    case BraidRule::ChoiceLB: return "choiceLB(" + serializeBraid(b->left) + ")";
    case BraidRule::ChoiceRB: return "choiceRB(" + serializeBraid(b->right) + ")";
    case BraidRule::ParB:
      return "parB(" + serializeBraid(b->left) + "," + serializeBraid(b->right) + ")";
    case BraidRule::RestrictB: return "nuB(" + serializeBraid(b->left) + ")";
    case BraidRule::ReplicateB: return "repB(" + serializeBraid(b->left) + ")";
  }
  return "?";
}

BoundBraidPtr renameBoundBraid(const Renaming& r, const BoundBraidPtr& b) {
  if (!b) raise(Errc::IllFormed, "renameBoundBraid: null braid");
  if (r.domain != b->ctx)
    raise(Errc::DomainMismatch, "renameBoundBraid: domain != braid context");
  switch (b->rule) {
    case BraidRule::NuNuSwap:
      // transported under lift^2 via swap . (rho+2) = (rho+2) . swap
      return bbNuNuSwap(r.codomain, renameProcess(liftN(r, 2), b->inner));
    case BraidRule::ReflNil: return bbReflNil(r.codomain);
    case BraidRule::ReflInput: return bbReflInput(r.codomain, renameProcess(r, b->inner));
    case BraidRule::ReflOutput:
      return bbReflOutput(r.codomain, renameProcess(r, b->inner));
    case BraidRule::ChoiceLB:
      return bbChoiceL(renameBoundBraid(r, b->left), renameProcess(r, b->inner));
    case BraidRule::ChoiceRB:
      return bbChoiceR(renameProcess(r, b->inner), renameBoundBraid(r, b->right));
    case BraidRule::ParB:
      return bbPar(renameBoundBraid(r, b->left), renameBoundBraid(r, b->right));
    case BraidRule::RestrictB: return bbRestrict(renameBoundBraid(lift(r), b->left));
    case BraidRule::ReplicateB: return bbReplicate(renameBoundBraid(r, b->left));
  }
  raise(Errc::IllFormed, "renameBoundBraid: bad rule");
}

Braiding equalityBraiding(Context ctx, const ProcessPtr& p) {
  return Braiding{BraidKind::Equality, ctx, 0, nullptr, p, p};
}

Braiding freeBraiding(Context ctx, Context delta, const ProcessPtr& left) {
  if (ctx < delta + 2) raise(Errc::IllFormed, "freeBraiding: context too small");
  Renaming ren = liftN(mkSwap(ctx - delta - 2), delta);
  ProcessPtr right = renameProcess(ren, left);
  return Braiding{BraidKind::Free, ctx, delta, nullptr, left, right};
}

Braiding boundBraiding(const BoundBraidPtr& b) {
  if (!b) raise(Errc::IllFormed, "boundBraiding: null braid");
  return Braiding{BraidKind::Bound, b->ctx, 0, b, b->source, b->target};
}

Braiding reverseBraiding(const Braiding& g) {
  switch (g.kind) {
    case BraidKind::Equality: return g;
    case BraidKind::Free:
      return Braiding{BraidKind::Free, g.ctx, g.delta, nullptr, g.right, g.left};
    case BraidKind::Bound: return boundBraiding(reverseBoundBraid(g.bound));
  }
  raise(Errc::IllFormed, "reverseBraiding: bad kind");
}

bool braidingEqual(const Braiding& a, const Braiding& b) {
  if (a.kind != b.kind || a.ctx != b.ctx) return false;
  if (!processEqual(a.left, b.left) || !processEqual(a.right, b.right)) return false;
  switch (a.kind) {
    case BraidKind::Equality: return true;
    case BraidKind::Free: return a.delta == b.delta;
    case BraidKind::Bound: return boundBraidEqual(a.bound, b.bound);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Residual of t after `after` (the diamond construction).
// ---------------------------------------------------------------------------

namespace {

TransitionPtr resid(const TransitionPtr& t, const TransitionPtr& after);

TransitionPtr maybePush(const Action& afterAction, const TransitionPtr& sub) {
  return isBound(afterAction) ? pushT(sub) : sub;
}

// Rebuild a transition of the restricted process around an inner transition:
// an output of the binder extrudes, a push image propagates.
TransitionPtr wrapNu(const TransitionPtr& inner) {
  const Action& a = inner->action;
  if (a.kind == ActKind::Output && a.subject >= 1 && a.object == 0)
    return mkNuExtrude(inner);
  try {
    return mkNuProp(inner);
  } catch (const Error&) {
    raise(Errc::CofinalityViolation, "residual action cannot pass the binder");
  }
}

// A synchronisation whose bound-output side may have collapsed to a plain
// output (same-binder extrusion already performed).
TransitionPtr synchOrNuSynchL(const TransitionPtr& in, const TransitionPtr& out) {
  return out->action.kind == ActKind::BoundOutput ? mkNuSynchL(in, out)
                                                  : mkSynchL(in, out);
}
TransitionPtr synchOrNuSynchR(const TransitionPtr& out, const TransitionPtr& in) {
  return out->action.kind == ActKind::BoundOutput ? mkNuSynchR(out, in)
                                                  : mkSynchR(out, in);
}

TransitionPtr resid(const TransitionPtr& t, const TransitionPtr& after) {
  const RuleKind a = t->rule, b = after->rule;

  switch (b) {
    case RuleKind::ChoiceL:
      if (a == RuleKind::ChoiceL) return resid(t->first, after->first);
      break;
    case RuleKind::ChoiceR:
      if (a == RuleKind::ChoiceR) return resid(t->first, after->first);
      break;
    case RuleKind::Rep:
      if (a == RuleKind::Rep) return resid(t->first, after->first);
      break;

    case RuleKind::NuExtrude:
      if (a == RuleKind::NuExtrude || a == RuleKind::NuProp)
        return resid(t->first, after->first);
      break;

    case RuleKind::NuProp: {
      if (a != RuleKind::NuExtrude && a != RuleKind::NuProp) break;
      TransitionPtr rt = resid(t->first, after->first);
      if (isBound(after->action)) rt = swapT(rt);
      return a == RuleKind::NuExtrude ? mkNuExtrude(rt) : mkNuProp(rt);
    }

    case RuleKind::ParL: {
      const Action& pa = after->action;
      switch (a) {
        case RuleKind::ParL:
          return mkParL(resid(t->first, after->first), rightOf(after->target));
        case RuleKind::ParR:
          return mkParR(leftOf(after->target), maybePush(pa, t->first));
        case RuleKind::SynchL:
          return mkSynchL(resid(t->first, after->first), maybePush(pa, t->second));
        case RuleKind::SynchR:
          return mkSynchR(resid(t->first, after->first), maybePush(pa, t->second));
        case RuleKind::NuSynchL:
          return mkNuSynchL(resid(t->first, after->first), maybePush(pa, t->second));
        case RuleKind::NuSynchR:
          return synchOrNuSynchR(resid(t->first, after->first),
                                 maybePush(pa, t->second));
        default: break;
      }
      break;
    }

    case RuleKind::ParR: {
      const Action& pa = after->action;
      switch (a) {
        case RuleKind::ParR:
          return mkParR(leftOf(after->target), resid(t->first, after->first));
        case RuleKind::ParL:
          return mkParL(maybePush(pa, t->first), rightOf(after->target));
        case RuleKind::SynchL:
          return mkSynchL(maybePush(pa, t->first), resid(t->second, after->first));
        case RuleKind::SynchR:
          return mkSynchR(maybePush(pa, t->first), resid(t->second, after->first));
        case RuleKind::NuSynchL:
          return synchOrNuSynchL(maybePush(pa, t->first),
                                 resid(t->second, after->first));
        case RuleKind::NuSynchR:
          return mkNuSynchR(maybePush(pa, t->first), resid(t->second, after->first));
        default: break;
      }
      break;
    }

    case RuleKind::SynchL:
    case RuleKind::SynchR: {
      const bool popLeft = (b == RuleKind::SynchL);
      const Name y = synchObject(*after);
      // premise of `after` acting on the left resp. right component
      const TransitionPtr& al = after->first;
      const TransitionPtr& ar = after->second;
      auto adjustL = [&](TransitionPtr s) { return popLeft ? popT(y, s) : s; };
      auto adjustR = [&](TransitionPtr s) { return popLeft ? s : popT(y, s); };
      switch (a) {
        case RuleKind::ParL:
          return mkParL(adjustL(resid(t->first, al)), rightOf(after->target));
        case RuleKind::ParR:
          return mkParR(leftOf(after->target), adjustR(resid(t->first, ar)));
        case RuleKind::SynchL:
          return mkSynchL(adjustL(resid(t->first, al)), adjustR(resid(t->second, ar)));
        case RuleKind::SynchR:
          return mkSynchR(adjustL(resid(t->first, al)), adjustR(resid(t->second, ar)));
        case RuleKind::NuSynchL:
          return mkNuSynchL(adjustL(resid(t->first, al)),
                            adjustR(resid(t->second, ar)));
        case RuleKind::NuSynchR:
          return mkNuSynchR(adjustL(resid(t->first, al)),
                            adjustR(resid(t->second, ar)));
        default: break;
      }
      break;
    }

    case RuleKind::NuSynchL:
    case RuleKind::NuSynchR: {
      const TransitionPtr& al = after->first;
      const TransitionPtr& ar = after->second;
      const ProcessPtr& body = bodyOf(after->target);  // nu (R | S)
      TransitionPtr inner;
      switch (a) {
        case RuleKind::ParL:
          inner = mkParL(resid(t->first, al), rightOf(body));
          break;
        case RuleKind::ParR:
          inner = mkParR(leftOf(body), resid(t->first, ar));
          break;
        case RuleKind::SynchL:
          inner = mkSynchL(resid(t->first, al), resid(t->second, ar));
          break;
        case RuleKind::SynchR:
          inner = mkSynchR(resid(t->first, al), resid(t->second, ar));
          break;
        case RuleKind::NuSynchL:
          inner = synchOrNuSynchL(resid(t->first, al), resid(t->second, ar));
          break;
        case RuleKind::NuSynchR:
          inner = synchOrNuSynchR(resid(t->first, al), resid(t->second, ar));
          break;
        default: break;
      }
      if (inner) return wrapNu(inner);
      break;
    }

    default: break;
  }
  raise(Errc::NotConcurrent, "residual: transitions are not concurrent");
}

}  // namespace

TransitionPtr residual(const TransitionPtr& t, const TransitionPtr& after,
                       const ConcurrencyWitness& w) {
  const bool straight = transitionEqual(w.first, t) && transitionEqual(w.second, after);
  const bool crossed = transitionEqual(w.first, after) && transitionEqual(w.second, t);
  if (!straight && !crossed)
    raise(Errc::NotConcurrent, "residual: witness does not cover this pair");
  return resid(t, after);
}

// ---------------------------------------------------------------------------
// Braiding between the targets of the two residuals.
// ---------------------------------------------------------------------------

namespace {

BoundBraidPtr buildBoundBraid(const TransitionPtr& t, const TransitionPtr& u,
                              Context ctx, const ProcessPtr& L, const ProcessPtr& R) {
  const RuleKind a = t->rule, b = u->rule;
  const bool nuSynchPair =
      (a == RuleKind::NuSynchL || a == RuleKind::NuSynchR) &&
      (b == RuleKind::NuSynchL || b == RuleKind::NuSynchR);
  if (nuSynchPair) {
    if (L->kind != ProcKind::Restrict || L->left->kind != ProcKind::Restrict)
      raise(Errc::CofinalityViolation, "bound braid: expected a double binder");
    return bbNuNuSwap(ctx, L->left->left);
  }
  if (a == b) {
    switch (a) {
      case RuleKind::ChoiceL:
      case RuleKind::ChoiceR:
      case RuleKind::Rep:
        return buildBoundBraid(t->first, u->first, ctx, L, R);
      case RuleKind::ParL:
        return bbPar(buildBoundBraid(t->first, u->first, ctx, leftOf(L), leftOf(R)),
                     reflBraid(ctx, rightOf(L)));
      case RuleKind::ParR:
        return bbPar(reflBraid(ctx, leftOf(L)),
                     buildBoundBraid(t->first, u->first, ctx, rightOf(L), rightOf(R)));
      case RuleKind::NuProp:
        return bbRestrict(
            buildBoundBraid(t->first, u->first, ctx + 1, bodyOf(L), bodyOf(R)));
      default: break;
    }
  }
  raise(Errc::CofinalityViolation, "bound braid: unexpected witness shape");
}

}  // namespace

Braiding computeBraiding(const TransitionPtr& t, const TransitionPtr& u,
                         const ConcurrencyWitness& w) {
  const bool straight = transitionEqual(w.first, t) && transitionEqual(w.second, u);
  const bool crossed = transitionEqual(w.first, u) && transitionEqual(w.second, t);
  if (!straight && !crossed)
    raise(Errc::NotConcurrent, "computeBraiding: witness does not cover this pair");
  const ConcurrentActions cls =
      classifyActions(straight ? w : ConcurrencyWitness{t, u, w.derivation});
  TransitionPtr uAfterT = resid(u, t);
  TransitionPtr tAfterU = resid(t, u);
  const ProcessPtr L = uAfterT->target;
  const ProcessPtr R = tAfterU->target;
  const Context ctx = uAfterT->targetCtx;
  if (tAfterU->targetCtx != ctx)
    raise(Errc::CofinalityViolation, "residual target contexts differ");
  switch (cls.braidKind) {
    case BraidKind::Equality:
      if (!processEqual(L, R))
        raise(Errc::CofinalityViolation, "expected equal residual targets");
      return equalityBraiding(ctx, L);
    case BraidKind::Free: {
      if (ctx < 2) raise(Errc::CofinalityViolation, "free braid needs two binders");
      Braiding g = freeBraiding(ctx, 0, L);
      if (!processEqual(g.right, R))
        raise(Errc::CofinalityViolation, "free braid equation fails");
      return g;
    }
    case BraidKind::Bound: {
      BoundBraidPtr bb = buildBoundBraid(t, u, ctx, L, R);
      if (!processEqual(bb->source, L) || !processEqual(bb->target, R))
        raise(Errc::CofinalityViolation, "bound braid endpoints do not match");
      return boundBraiding(bb);
    }
  }
  raise(Errc::CofinalityViolation, "computeBraiding: bad classification");
}

ProcessPtr applyBraiding(const Braiding& g, const ProcessPtr& p) {
  if (processEqual(p, g.left)) return g.right;
  if (processEqual(p, g.right)) return g.left;
  raise(Errc::EndpointMismatch, "applyBraiding: process is not an endpoint");
}

// ---------------------------------------------------------------------------
// Residuals of transitions and coinitial bound braids.
// ---------------------------------------------------------------------------

namespace {

struct TransBraidPair {
  TransitionPtr trans;
  BoundBraidPtr braid;
};

TransBraidPair residPairBB(const TransitionPtr& t, const BoundBraidPtr& b);

TransBraidPair residNuNuSwap(const TransitionPtr& t, const BoundBraidPtr& b) {
  // t runs from nu nu X with X = b->inner; the four double-binder cases
  if (t->rule == RuleKind::NuExtrude && t->first->rule == RuleKind::NuProp) {
    TransitionPtr inner = t->first->first;
    TransitionPtr res = mkNuProp(mkNuExtrude(swapT(inner)));
    return {res, reflBraid(t->targetCtx, t->target)};
  }
  if (t->rule == RuleKind::NuProp && t->first->rule == RuleKind::NuExtrude) {
    TransitionPtr inner = t->first->first;
    TransitionPtr res = mkNuExtrude(mkNuProp(swapT(inner)));
    return {res, reflBraid(t->targetCtx, t->target)};
  }
  if (t->rule == RuleKind::NuProp && t->first->rule == RuleKind::NuProp) {
    TransitionPtr inner = t->first->first;
    TransitionPtr res = mkNuProp(mkNuProp(swapT(inner)));
    const ProcessPtr& tgt = t->target;  // nu nu Z
    return {res, bbNuNuSwap(t->targetCtx, tgt->left->left)};
  }
  raise(Errc::InvalidDerivation, "residual vs nu-nu-swap: unexpected derivation");
}

TransBraidPair residPairBB(const TransitionPtr& t, const BoundBraidPtr& b) {
  if (!t || !b) raise(Errc::IllFormed, "residual: null argument");
  if (t->sourceCtx != b->ctx || !processEqual(t->source, b->source))
    raise(Errc::NotCoinitial, "transition and bound braid are not coinitial");

  switch (b->rule) {
    case BraidRule::ReflNil:
      raise(Errc::InvalidDerivation, "no transition from nil");

    case BraidRule::ReflInput:
      return {t, reflBraid(t->targetCtx, t->target)};
    case BraidRule::ReflOutput:
      return {t, reflBraid(t->targetCtx, t->target)};

    case BraidRule::NuNuSwap: return residNuNuSwap(t, b);

    case BraidRule::ChoiceLB: {
      if (t->rule == RuleKind::ChoiceL) {
        auto [ts, bs] = residPairBB(t->first, b->left);
        return {mkChoiceL(ts, b->inner), bs};
      }
      if (t->rule == RuleKind::ChoiceR) {
        TransitionPtr res = mkChoiceR(b->left->target, t->first);
        return {res, reflBraid(t->targetCtx, t->target)};
      }
      break;
    }
    case BraidRule::ChoiceRB: {
      if (t->rule == RuleKind::ChoiceR) {
        auto [ts, bs] = residPairBB(t->first, b->right);
        return {mkChoiceR(b->inner, ts), bs};
      }
      if (t->rule == RuleKind::ChoiceL) {
        TransitionPtr res = mkChoiceL(t->first, b->right->target);
        return {res, reflBraid(t->targetCtx, t->target)};
      }
      break;
    }

    case BraidRule::ParB: {
      const BoundBraidPtr& lb = b->left;
      const BoundBraidPtr& rb = b->right;
      const Context ctx = b->ctx;
      switch (t->rule) {
        case RuleKind::ParL: {
          auto [ts, bs] = residPairBB(t->first, lb);
          BoundBraidPtr passive =
              isBound(t->action) ? renameBoundBraid(mkPush(ctx), rb) : rb;
          return {mkParL(ts, rb->target), bbPar(bs, passive)};
        }
        case RuleKind::ParR: {
          auto [ts, bs] = residPairBB(t->first, rb);
          BoundBraidPtr passive =
              isBound(t->action) ? renameBoundBraid(mkPush(ctx), lb) : lb;
          return {mkParR(lb->target, ts), bbPar(passive, bs)};
        }
        case RuleKind::SynchL: {
          auto [tin, bl] = residPairBB(t->first, lb);
          auto [tout, br] = residPairBB(t->second, rb);
          const Name y = tout->action.object;
          return {mkSynchL(tin, tout),
                  bbPar(renameBoundBraid(mkPop(ctx, y), bl), br)};
        }
        case RuleKind::SynchR: {
          auto [tout, bl] = residPairBB(t->first, lb);
          auto [tin, br] = residPairBB(t->second, rb);
          const Name y = tout->action.object;
          return {mkSynchR(tout, tin),
                  bbPar(bl, renameBoundBraid(mkPop(ctx, y), br))};
        }
        case RuleKind::NuSynchL: {
          auto [tin, bl] = residPairBB(t->first, lb);
          auto [tbo, br] = residPairBB(t->second, rb);
          return {mkNuSynchL(tin, tbo), bbRestrict(bbPar(bl, br))};
        }
        case RuleKind::NuSynchR: {
          auto [tbo, bl] = residPairBB(t->first, lb);
          auto [tin, br] = residPairBB(t->second, rb);
          return {mkNuSynchR(tbo, tin), bbRestrict(bbPar(bl, br))};
        }
        default: break;
      }
      break;
    }

    case BraidRule::RestrictB: {
      if (t->rule == RuleKind::NuExtrude) {
        auto [ts, bs] = residPairBB(t->first, b->left);
        return {mkNuExtrude(ts), bs};
      }
      if (t->rule == RuleKind::NuProp) {
        auto [ts, bs] = residPairBB(t->first, b->left);
        BoundBraidPtr res = isBound(t->action)
                                ? renameBoundBraid(mkSwap(b->ctx), bs)
                                : bs;
        return {mkNuProp(ts), bbRestrict(res)};
      }
      break;
    }

    case BraidRule::ReplicateB: {
      if (t->rule == RuleKind::Rep) {
        BoundBraidPtr unfolded = bbPar(b->left, bbReplicate(b->left));
        auto [ts, bs] = residPairBB(t->first, unfolded);
        return {mkRep(ts), bs};
      }
      break;
    }
  }
  raise(Errc::InvalidDerivation, "residual vs bound braid: unexpected derivation");
}

}  // namespace

TransitionPtr residualTransitionAfterBoundBraid(const TransitionPtr& t,
                                                const BoundBraidPtr& b) {
  return residPairBB(t, b).trans;
}

BoundBraidPtr residualBoundBraidAfterTransition(const BoundBraidPtr& b,
                                                const TransitionPtr& t) {
  return residPairBB(t, b).braid;
}

// ---------------------------------------------------------------------------
// Residuals against an arbitrary braiding.
// ---------------------------------------------------------------------------

namespace {

struct TransGammaPair {
  TransitionPtr trans;
  Braiding braiding;
};

TransGammaPair residPairGamma(const TransitionPtr& t, const Braiding& g) {
  switch (g.kind) {
    case BraidKind::Equality: {
      if (!processEqual(t->source, g.left))
        raise(Errc::EndpointMismatch, "transition does not start at the braiding");
      return {t, equalityBraiding(t->targetCtx, t->target)};
    }
    case BraidKind::Free: {
      const bool fromLeft = processEqual(t->source, g.left);
      const bool fromRight = !fromLeft && processEqual(t->source, g.right);
      if (!fromLeft && !fromRight)
        raise(Errc::EndpointMismatch, "transition does not start at the braiding");
      Renaming ren = liftN(mkSwap(g.ctx - g.delta - 2), g.delta);
      TransitionPtr moved = renameTransition(ren, t);
      const Context dPrime = g.delta + magnitude(t->action);
      Braiding out{BraidKind::Free, t->targetCtx, dPrime, nullptr,
                   fromLeft ? t->target : moved->target,
                   fromLeft ? moved->target : t->target};
      Renaming renPrime = liftN(mkSwap(out.ctx - dPrime - 2), dPrime);
      if (!processEqual(out.left, renameProcess(renPrime, out.right)))
        raise(Errc::CofinalityViolation, "residual free braid equation fails");
      return {moved, out};
    }
    case BraidKind::Bound: {
      if (processEqual(t->source, g.bound->source)) {
        auto [ts, bs] = residPairBB(t, g.bound);
        return {ts, boundBraiding(bs)};
      }
      if (processEqual(t->source, g.bound->target)) {
        auto [ts, bs] = residPairBB(t, reverseBoundBraid(g.bound));
        return {ts, reverseBraiding(boundBraiding(bs))};
      }
      raise(Errc::EndpointMismatch, "transition does not start at the braiding");
    }
  }
  raise(Errc::IllFormed, "residPairGamma: bad kind");
}

}  // namespace

TransitionPtr residualTransitionAfterBraiding(const TransitionPtr& t, const Braiding& g) {
  return residPairGamma(t, g).trans;
}

Braiding residualBraidingAfterTransition(const Braiding& g, const TransitionPtr& t) {
  return residPairGamma(t, g).braiding;
}

}  // namespace pir
