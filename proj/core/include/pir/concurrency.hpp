#ifndef PIR_CONCURRENCY_HPP
#define PIR_CONCURRENCY_HPP

#include <memory>
#include <optional>
#include <vector>

#include "pir/semantics.hpp"

namespace pir {

// One derivation step of t ~ u. Pair rules are named by the constructor pair
// in unflipped orientation; `flipped` records uses of the symmetric closure.
enum class ConcRule : std::uint8_t {
  ParRParL,        // axiom: redexes on opposite sides of a parallel
  ParLParL,        // congruence on the same side
  ParRParR,
  ParLSynch,       // ParL t  ~  Synch/NuSynch whose left premise is concurrent
  ParRSynch,       // ParR u  ~  Synch/NuSynch whose right premise is concurrent
  SynchSynch,      // both premises pairwise concurrent
  ChoiceLChoiceL,
  ChoiceRChoiceR,
  NuExtrudeNuExtrude,
  NuExtrudeNuProp,
  NuPropNuProp,
  RepRep,
};

struct WitnessNode;
using WitnessNodePtr = std::shared_ptr<const WitnessNode>;

struct WitnessNode {
  ConcRule rule;
  bool flipped{false};
  WitnessNodePtr first{};
  WitnessNodePtr second{};
};

struct ConcurrencyWitness {
  TransitionPtr first;
  TransitionPtr second;
  WitnessNodePtr derivation;
};

// Nonempty iff t ~ u per the symmetric closure of the concurrency rules.
// NotCoinitial if the sources differ. Never relates a transition to itself.
std::optional<ConcurrencyWitness> checkConcurrent(const TransitionPtr& t,
                                                  const TransitionPtr& u);

enum class ActionShape : std::uint8_t {
  NonBoundPair,         // (i)   both non-bound
  BoundNonBound,        // (ii)  exactly one bound
  BoundPair,            // (iii) both bound, distinct binders
  SameBinderExtrusion,  // (iv)  extrusions of the same binder
  NuSynchPair,          // (v)   nu-synchronisations of distinct binders
};

enum class BraidKind : std::uint8_t { Equality, Free, Bound };

struct ConcurrentActions {
  ActionShape shape;
  Action first;            // a
  Action second;           // a'
  Action residualOfSecond; // a'/a
  Action residualOfFirst;  // a/a'
  BraidKind braidKind;
};

// Shape and residual actions per the concurrent-action diagrams; total on
// valid witnesses.
ConcurrentActions classifyActions(const ConcurrencyWitness& w);

}  // namespace pir

#endif
