#ifndef PIR_SURFACE_HPP
#define PIR_SURFACE_HPP

#include <string>
#include <utility>

#include "pir/syntax.hpp"

namespace pir {

// ASCII surface syntax:
//
//   program := "free" ident* ";" sum
//   sum     := par ("+" par)*
//   par     := bang ("|" bang)*
//   bang    := "!" bang | prefix
//   prefix  := "0" | "(" sum ")"
//            | ident "<" ident ">" "." prefix
//            | ident "(" ident ")" "." prefix
//            | "new" ident "." prefix
//
// The free-name preamble binds the first declared identifier to index 0.
// Bound outputs and tau never appear in source programs.
std::pair<Context, ProcessPtr> parse(const std::string& text);

// Round-trips exactly: parse(printNamed(ctx, p)) == (ctx, p).
std::string printNamed(Context ctx, const ProcessPtr& p);

// Direct numeric rendering; injective on well-formed terms.
std::string printDeBruijn(Context ctx, const ProcessPtr& p);

}  // namespace pir

#endif
