#ifndef PIR_SYNTAX_HPP
#define PIR_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pir/errors.hpp"

namespace pir {

// A context is the number of free-name slots; a name is a de Bruijn index,
// well-formed in ctx iff index < ctx.
using Context = std::uint32_t;
using Name = std::uint32_t;

enum class ActKind : std::uint8_t { Input, Output, BoundOutput, Tau };

// Input(x), Output(x,y), BoundOutput(x), Tau. Unused name slots are zero.
struct Action {
  ActKind kind{ActKind::Tau};
  Name subject{0};
  Name object{0};

  static Action input(Name x) { return {ActKind::Input, x, 0}; }
  static Action output(Name x, Name y) { return {ActKind::Output, x, y}; }
  static Action boundOutput(Name x) { return {ActKind::BoundOutput, x, 0}; }
  static Action tau() { return {ActKind::Tau, 0, 0}; }

  friend bool operator==(const Action&, const Action&) = default;
};

// Context increment on firing: 1 for bound actions (input, bound output),
// 0 for free output and tau.
Context magnitude(const Action& a);
bool isBound(const Action& a);
bool checkAction(Context ctx, const Action& a);
std::string showAction(const Action& a);

enum class ProcKind : std::uint8_t {
  Nil,
  Input,     // x(.).P      body checked in ctx+1
  Output,    // x<y>.P
  Choice,    // P + Q
  Par,       // P | Q
  Restrict,  // nu.P        body checked in ctx+1
  Replicate, // !P
};

struct Process;
using ProcessPtr = std::shared_ptr<const Process>;

struct Process {
  ProcKind kind{ProcKind::Nil};
  Name subject{0};
  Name object{0};
  ProcessPtr left{};   // body for unary nodes
  ProcessPtr right{};
};

ProcessPtr nil();
ProcessPtr input(Name x, ProcessPtr body);
ProcessPtr output(Name x, Name y, ProcessPtr body);
ProcessPtr choice(ProcessPtr l, ProcessPtr r);
ProcessPtr par(ProcessPtr l, ProcessPtr r);
ProcessPtr restrictP(ProcessPtr body);
ProcessPtr replicate(ProcessPtr body);

bool processEqual(const ProcessPtr& a, const ProcessPtr& b);
std::size_t nodeCount(const ProcessPtr& p);

// Total order: node count, then constructor rank
// (Nil < Input < Output < Choice < Par < Restrict < Replicate),
// then children, then name indices. Fixes every enumeration tie-break.
int compareProcess(const ProcessPtr& a, const ProcessPtr& b);

// Gamma |- P per the well-formedness rules; total.
bool checkProcess(Context ctx, const ProcessPtr& p);

// Every well-formed process with node count <= maxNodes, strictly increasing
// in the canonical order above. Test oracle and CLI exploration helper.
std::vector<ProcessPtr> enumerateProcesses(Context ctx, std::size_t maxNodes);

}  // namespace pir

#endif
