#pragma once

#include <optional>
#include <string>

#include "core/algebra.hpp"
#include "core/module.hpp"
#include "core/topology.hpp"

namespace idem {

/// One named block of the text format. Kinds: cim, semiring, top, module,
/// monoid, ring. `cim_ref` / `ring_ref` remember by-name references so a
/// parsed document round-trips.
struct Block {
  std::string kind;
  std::string name;
  std::optional<Cim> cim;
  std::optional<Semiring> semiring;
  std::optional<Top> top;
  std::optional<Module> module;
  std::optional<Monoid> monoid;
  std::optional<Ring> ring;
  std::string cim_ref;
  std::string ring_ref;
};

struct Document {
  std::vector<Block> blocks;

  const Block* find(const std::string& name) const;
  const Block& need(const std::string& name) const;
  const Block& need_kind(const std::string& name, const std::string& kind) const;
  // first block of a kind, or the only block when name is empty
  const Block& pick(const std::string& name, std::initializer_list<const char*> kinds) const;
};

// Grammar (one or more blocks; '#' starts a line comment):
//   cim NAME { elements: a b c; zero: a; one: c; add: [[a,b],[b,b]] }
//   semiring NAME { cim: CIMNAME | {...}; one: c; mul: [[...]] }
//   top NAME { points: p q; closed: [], [q], [p q] }
//   module NAME over RING { cim: ...; action: [[...]] }
//   monoid NAME { elements: ...; mul: [[...]] }
//   ring NAME { elements: ...; add: [[...]]; mul: [[...]] }
// Table entries are element names (or bare indices). Every block is
// validated on load; parse errors carry line:column positions.
Document parse_document(const std::string& text);

std::string emit_document(const Document& doc);
std::string emit_block(const Block& b);

Block block_of_semiring(std::string name, const Semiring& s);
Block block_of_top(std::string name, const Top& t);
Block block_of_monoid(std::string name, const Monoid& m);
Block block_of_ring(std::string name, const Ring& r);
Block block_of_cim(std::string name, const Cim& c);

}  // namespace idem
