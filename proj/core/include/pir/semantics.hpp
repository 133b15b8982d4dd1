#ifndef PIR_SEMANTICS_HPP
#define PIR_SEMANTICS_HPP

#include <memory>
#include <string>
#include <vector>

#include "pir/renaming.hpp"
#include "pir/syntax.hpp"

namespace pir {

// Rule constructors of the transition relation, one per derivation rule.
// Symmetric variants are explicit.
enum class RuleKind : std::uint8_t {
  InputPrefix,   // x(.).P -x(.)-> P
  OutputPrefix,  // x<y>.P -x<y>-> P
  ChoiceL,       // from P + Q, redex in P
  ChoiceR,
  ParL,          // from P | Q, redex in P; bound actions push Q
  ParR,
  SynchL,        // input on the left, output on the right; pops the receiver
  SynchR,
  NuExtrude,     // premise out(x+1)0 initiates extrusion as x^(.)
  NuSynchL,      // input left, bound output right; reinserts the binder
  NuSynchR,
  NuProp,        // premise action is a push image; bound actions swap
  Rep,           // premise from P | !P
};

const char* ruleName(RuleKind k);

struct Transition;
using TransitionPtr = std::shared_ptr<const Transition>;

// A transition is its derivation tree; source, action and target are cached
// at construction and revalidated by validateTransition.
struct Transition {
  RuleKind rule;
  TransitionPtr first{};   // sole or left premise
  TransitionPtr second{};  // right premise of synchronisation rules
  Context sourceCtx{0};
  ProcessPtr source{};
  Action action{};
  Context targetCtx{0};
  ProcessPtr target{};
};

// Smart constructors; each checks its side conditions and computes the
// cached action and target. They throw IllFormed/InvalidDerivation.
TransitionPtr mkInputPrefix(Context ctx, const ProcessPtr& prefixed);
TransitionPtr mkOutputPrefix(Context ctx, const ProcessPtr& prefixed);
TransitionPtr mkChoiceL(const TransitionPtr& sub, const ProcessPtr& right);
TransitionPtr mkChoiceR(const ProcessPtr& left, const TransitionPtr& sub);
TransitionPtr mkParL(const TransitionPtr& sub, const ProcessPtr& right);
TransitionPtr mkParR(const ProcessPtr& left, const TransitionPtr& sub);
TransitionPtr mkSynchL(const TransitionPtr& in, const TransitionPtr& out);
TransitionPtr mkSynchR(const TransitionPtr& out, const TransitionPtr& in);
TransitionPtr mkNuExtrude(const TransitionPtr& sub);
TransitionPtr mkNuSynchL(const TransitionPtr& in, const TransitionPtr& boundOut);
TransitionPtr mkNuSynchR(const TransitionPtr& boundOut, const TransitionPtr& in);
TransitionPtr mkNuProp(const TransitionPtr& sub);
TransitionPtr mkRep(const TransitionPtr& sub);

// Received name of a synchronisation (object of the output premise).
Name synchObject(const Transition& t);

bool transitionEqual(const TransitionPtr& a, const TransitionPtr& b);

// Exactly the derivable transitions with at most repFuel nested Rep
// constructors per path, in canonical order: constructor order as listed in
// RuleKind, recursing into premises.
std::vector<TransitionPtr> enumerateTransitions(Context ctx, const ProcessPtr& p,
                                                unsigned repFuel);

// True iff the proof tree is a correct derivation from t.source and the
// cached action/target match recomputation.
bool validateTransition(const TransitionPtr& t);

// rho t : rho P --rho a--> (rho + |a|) R. DomainMismatch if contexts differ.
TransitionPtr renameTransition(const Renaming& r, const TransitionPtr& t);

// Compact proof-term serialization, e.g. "nu^(parL(ax-out))".
std::string serializeProof(const TransitionPtr& t);
TransitionPtr parseProof(Context ctx, const ProcessPtr& p, const std::string& text);

// Maximum Rep nesting along any path.
unsigned repNesting(const TransitionPtr& t);

}  // namespace pir

#endif
