#include "pir/concurrency.hpp"

namespace pir {

namespace {

WitnessNodePtr wnode(ConcRule r, bool flipped, WitnessNodePtr a = nullptr,
                     WitnessNodePtr b = nullptr) {
  return std::make_shared<const WitnessNode>(
      WitnessNode{r, flipped, std::move(a), std::move(b)});
}

bool isSynchRule(RuleKind k) {
  return k == RuleKind::SynchL || k == RuleKind::SynchR || k == RuleKind::NuSynchL ||
         k == RuleKind::NuSynchR;
}

// Premise of a synchronisation acting on the left (resp. right) component.
const TransitionPtr& leftPremise(const TransitionPtr& t) { return t->first; }
const TransitionPtr& rightPremise(const TransitionPtr& t) { return t->second; }

WitnessNodePtr derive(const TransitionPtr& t, const TransitionPtr& u);

WitnessNodePtr deriveFlipped(const TransitionPtr& t, const TransitionPtr& u) {
  WitnessNodePtr w = derive(u, t);
  if (!w) return nullptr;
  return wnode(w->rule, true, w->first, w->second);
}

WitnessNodePtr derive(const TransitionPtr& t, const TransitionPtr& u) {
  const RuleKind a = t->rule, b = u->rule;

  // axiom: opposite sides of a parallel composition
  if (a == RuleKind::ParR && b == RuleKind::ParL) return wnode(ConcRule::ParRParL, false);
  if (a == RuleKind::ParL && b == RuleKind::ParR) return deriveFlipped(t, u);

  if (a == RuleKind::ParL && b == RuleKind::ParL) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::ParLParL, false, sub) : nullptr;
  }
  if (a == RuleKind::ParR && b == RuleKind::ParR) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::ParRParR, false, sub) : nullptr;
  }

  if (a == RuleKind::ParL && isSynchRule(b)) {
    WitnessNodePtr sub = derive(t->first, leftPremise(u));
    return sub ? wnode(ConcRule::ParLSynch, false, sub) : nullptr;
  }
  if (a == RuleKind::ParR && isSynchRule(b)) {
    WitnessNodePtr sub = derive(t->first, rightPremise(u));
    return sub ? wnode(ConcRule::ParRSynch, false, sub) : nullptr;
  }
  if (isSynchRule(a) && (b == RuleKind::ParL || b == RuleKind::ParR))
    return deriveFlipped(t, u);

  if (isSynchRule(a) && isSynchRule(b)) {
    WitnessNodePtr l = derive(leftPremise(t), leftPremise(u));
    if (!l) return nullptr;
    WitnessNodePtr r = derive(rightPremise(t), rightPremise(u));
    return r ? wnode(ConcRule::SynchSynch, false, l, r) : nullptr;
  }

  if (a == RuleKind::ChoiceL && b == RuleKind::ChoiceL) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::ChoiceLChoiceL, false, sub) : nullptr;
  }
  if (a == RuleKind::ChoiceR && b == RuleKind::ChoiceR) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::ChoiceRChoiceR, false, sub) : nullptr;
  }

  if (a == RuleKind::NuExtrude && b == RuleKind::NuExtrude) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::NuExtrudeNuExtrude, false, sub) : nullptr;
  }
  if (a == RuleKind::NuExtrude && b == RuleKind::NuProp) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::NuExtrudeNuProp, false, sub) : nullptr;
  }
  if (a == RuleKind::NuProp && b == RuleKind::NuExtrude) return deriveFlipped(t, u);
  if (a == RuleKind::NuProp && b == RuleKind::NuProp) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::NuPropNuProp, false, sub) : nullptr;
  }

  if (a == RuleKind::Rep && b == RuleKind::Rep) {
    WitnessNodePtr sub = derive(t->first, u->first);
    return sub ? wnode(ConcRule::RepRep, false, sub) : nullptr;
  }

  return nullptr;
}

}  // namespace

std::optional<ConcurrencyWitness> checkConcurrent(const TransitionPtr& t,
                                                  const TransitionPtr& u) {
  if (!t || !u) raise(Errc::IllFormed, "checkConcurrent: null transition");
  if (t->sourceCtx != u->sourceCtx || !processEqual(t->source, u->source))
    raise(Errc::NotCoinitial, "checkConcurrent: transitions are not coinitial");
  WitnessNodePtr d = derive(t, u);
  if (!d) return std::nullopt;
  return ConcurrencyWitness{t, u, d};
}

namespace {

// Two concurrent bound outputs extrude the same binder iff the derivations
// converge on a NuExtrude pair rather than diverging at a Par.
bool sameBinder(const TransitionPtr& t, const TransitionPtr& u) {
  const RuleKind a = t->rule, b = u->rule;
  if (a == RuleKind::NuExtrude && b == RuleKind::NuExtrude) return true;
  if (a == RuleKind::NuExtrude || b == RuleKind::NuExtrude) return false;  // vs NuProp
  if ((a == RuleKind::ParL && b == RuleKind::ParR) ||
      (a == RuleKind::ParR && b == RuleKind::ParL))
    return false;
  if (a == b) {
    switch (a) {
      case RuleKind::ChoiceL:
      case RuleKind::ChoiceR:
      case RuleKind::ParL:
      case RuleKind::ParR:
      case RuleKind::NuProp:
      case RuleKind::Rep: return sameBinder(t->first, u->first);
      default: break;
    }
  }
  return false;
}

// A tau pair yields a bound braid iff it is (a congruence image of) a pair of
// nu-synchronisations whose extruding premises are of distinct binders.
bool nuSynchDistinct(const TransitionPtr& t, const TransitionPtr& u) {
  const RuleKind a = t->rule, b = u->rule;
  if (a == RuleKind::NuSynchL && b == RuleKind::NuSynchL)
    return !sameBinder(rightPremise(t), rightPremise(u));
  if (a == RuleKind::NuSynchR && b == RuleKind::NuSynchR)
    return !sameBinder(leftPremise(t), leftPremise(u));
  if ((a == RuleKind::NuSynchL && b == RuleKind::NuSynchR) ||
      (a == RuleKind::NuSynchR && b == RuleKind::NuSynchL))
    return true;  // extrusions on opposite sides
  if (a == b) {
    switch (a) {
      case RuleKind::ChoiceL:
      case RuleKind::ChoiceR:
      case RuleKind::ParL:
      case RuleKind::ParR:
      case RuleKind::NuProp:
      case RuleKind::Rep: return nuSynchDistinct(t->first, u->first);
      default: break;
    }
  }
  return false;
}

Action pushAction(Context ctx, const Action& a) {
  return renameAction(mkPush(ctx), a);
}

}  // namespace

ConcurrentActions classifyActions(const ConcurrencyWitness& w) {
  const TransitionPtr& t = w.first;
  const TransitionPtr& u = w.second;
  const Context ctx = t->sourceCtx;
  const Action a = t->action, b = u->action;
  const bool ab = isBound(a), bb = isBound(b);

  if (ab && bb) {
    if (a.kind == ActKind::BoundOutput && b.kind == ActKind::BoundOutput &&
        sameBinder(t, u)) {
      // (iv): after the other extrusion, each becomes a plain output of the
      // freed index 0 on the pushed subject.
      return {ActionShape::SameBinderExtrusion, a, b,
              Action::output(b.subject + 1, 0), Action::output(a.subject + 1, 0),
              BraidKind::Equality};
    }
    return {ActionShape::BoundPair, a, b, pushAction(ctx, b), pushAction(ctx, a),
            BraidKind::Free};
  }
  if (ab != bb) {
    // (ii): the non-bound action shifts under the new binder.
    Action resB = ab ? pushAction(ctx, b) : b;
    Action resA = bb ? pushAction(ctx, a) : a;
    return {ActionShape::BoundNonBound, a, b, resB, resA, BraidKind::Equality};
  }
  if (a.kind == ActKind::Tau && b.kind == ActKind::Tau && nuSynchDistinct(t, u)) {
    return {ActionShape::NuSynchPair, a, b, Action::tau(), Action::tau(),
            BraidKind::Bound};
  }
  return {ActionShape::NonBoundPair, a, b, b, a, BraidKind::Equality};
}

}  // namespace pir
