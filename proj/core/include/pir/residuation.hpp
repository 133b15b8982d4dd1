#ifndef PIR_RESIDUATION_HPP
#define PIR_RESIDUATION_HPP

#include <memory>
#include <string>

#include "pir/concurrency.hpp"

namespace pir {

// Generalised bound braid: a swap inserted under one pair of adjacent
// nu-binders, closed under reflexivity (dropping) and parallel composition
// (duplication).
enum class BraidRule : std::uint8_t {
  NuNuSwap,    // nu nu P  ><  nu nu (swap P)
  ReflNil,
  ReflInput,   // whole prefix, reflexively
  ReflOutput,
  ChoiceLB,
  ChoiceRB,
  ParB,        // braids on both sides
  RestrictB,
  ReplicateB,
};

struct BoundBraid;
using BoundBraidPtr = std::shared_ptr<const BoundBraid>;

struct BoundBraid {
  BraidRule rule;
  Context ctx{0};
  // NuNuSwap: inner = body under the two binders on the source side.
  // Refl leaves: inner = the whole prefix / nil.
  // ChoiceLB/ChoiceRB: inner = the untouched branch.
  ProcessPtr inner{};
  BoundBraidPtr left{};
  BoundBraidPtr right{};
  ProcessPtr source{};
  ProcessPtr target{};
};

BoundBraidPtr bbNuNuSwap(Context ctx, const ProcessPtr& inner);
BoundBraidPtr bbReflNil(Context ctx);
BoundBraidPtr bbReflInput(Context ctx, const ProcessPtr& prefixed);
BoundBraidPtr bbReflOutput(Context ctx, const ProcessPtr& prefixed);
BoundBraidPtr bbChoiceL(const BoundBraidPtr& sub, const ProcessPtr& right);
BoundBraidPtr bbChoiceR(const ProcessPtr& left, const BoundBraidPtr& sub);
BoundBraidPtr bbPar(const BoundBraidPtr& l, const BoundBraidPtr& r);
BoundBraidPtr bbRestrict(const BoundBraidPtr& sub);
BoundBraidPtr bbReplicate(const BoundBraidPtr& sub);

// Canonical reflexivity proof.
BoundBraidPtr reflBraid(Context ctx, const ProcessPtr& p);
// Same shape with source and target exchanged.
BoundBraidPtr reverseBoundBraid(const BoundBraidPtr& b);
bool boundBraidEqual(const BoundBraidPtr& a, const BoundBraidPtr& b);
bool validateBoundBraid(const BoundBraidPtr& b);
std::string serializeBraid(const BoundBraidPtr& b);

// The braid's image under a renaming (transport along lift^2 at the swap).
BoundBraidPtr renameBoundBraid(const Renaming& r, const BoundBraidPtr& b);

// Braiding relating the targets of the two residuals of a concurrent pair:
// syntactic equality, the shifted free braid swap+delta, or a bound braid.
struct Braiding {
  BraidKind kind{BraidKind::Equality};
  Context ctx{0};          // endpoint context
  Context delta{0};        // Free only: left == (swap+delta) right
  BoundBraidPtr bound{};   // Bound only
  ProcessPtr left{};
  ProcessPtr right{};
};

Braiding equalityBraiding(Context ctx, const ProcessPtr& p);
Braiding freeBraiding(Context ctx, Context delta, const ProcessPtr& left);
Braiding boundBraiding(const BoundBraidPtr& b);
Braiding reverseBraiding(const Braiding& g);
bool braidingEqual(const Braiding& a, const Braiding& b);

// Residual of t after `after`; w must witness t ~ after. Total on concurrent
// pairs; the result is a valid transition from target(after).
TransitionPtr residual(const TransitionPtr& t, const TransitionPtr& after,
                       const ConcurrencyWitness& w);

// The unique braiding relating target(residual(u,t)) (left endpoint) and
// target(residual(t,u)) (right endpoint). CofinalityViolation on failure.
Braiding computeBraiding(const TransitionPtr& t, const TransitionPtr& u,
                         const ConcurrencyWitness& w);

// Symmetric application: maps one endpoint to the other.
ProcessPtr applyBraiding(const Braiding& g, const ProcessPtr& p);

// Residuals of a transition and a coinitial bound braid; the square commutes:
// applyBraiding(b/t, target t) == target(t/b), and t/b has the same action.
TransitionPtr residualTransitionAfterBoundBraid(const TransitionPtr& t,
                                                const BoundBraidPtr& b);
BoundBraidPtr residualBoundBraidAfterTransition(const BoundBraidPtr& b,
                                                const TransitionPtr& t);

// Same for an arbitrary braiding; source(t) may be either endpoint.
TransitionPtr residualTransitionAfterBraiding(const TransitionPtr& t, const Braiding& g);
Braiding residualBraidingAfterTransition(const Braiding& g, const TransitionPtr& t);

}  // namespace pir

#endif
