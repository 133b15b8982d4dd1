#ifndef PIR_RENAMING_HPP
#define PIR_RENAMING_HPP

#include <string>
#include <vector>

#include "pir/syntax.hpp"

namespace pir {

// A total map from names in `domain` to names in `codomain`, kept as a
// concrete table so extensional equality is decidable (the lemma suites
// quantify over all renamings at small contexts). `label` is display-only.
struct Renaming {
  Context domain{0};
  Context codomain{0};
  std::vector<Name> table;
  std::string label;
};

Renaming mkIdentity(Context g);
Renaming mkPush(Context g);            // g -> g+1, i |-> i+1
Renaming mkPop(Context g, Name y);     // g+1 -> g, 0 |-> y, i+1 |-> i
Renaming mkSwap(Context g);            // g+2 -> g+2, transposes 0 and 1

Name applyToName(const Renaming& r, Name x);
Renaming lift(const Renaming& r);                  // suc: 0 |-> 0, i+1 |-> r(i)+1
Renaming liftN(const Renaming& r, Context n);      // r + n
Renaming compose(const Renaming& outer, const Renaming& inner);
bool renamingsEqual(const Renaming& a, const Renaming& b);

Action renameAction(const Renaming& r, const Action& a);
ProcessPtr renameProcess(const Renaming& r, const ProcessPtr& p);

// All tables domain -> codomain in lexicographic order (codomain^domain of
// them); lemma tests quantify rho with this.
std::vector<Renaming> enumerateRenamings(Context domain, Context codomain);

}  // namespace pir

#endif
