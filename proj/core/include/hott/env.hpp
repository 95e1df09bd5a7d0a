#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hott/syntax.hpp"
#include "hott/term.hpp"

namespace hott {

enum class DeclKind : uint8_t {
  Definition,  // type + body
  Axiom,       // type only, user-declared trusted constant
  Postulate,   // like Axiom but carries an explanatory marker
  Generated,   // axiom emitted by a schema elaboration
};

enum class SchemaKind : uint8_t { WSusp, Trunc };

struct Declaration {
  std::string name;
  DeclKind kind = DeclKind::Axiom;
  TermPtr type;
  TermPtr body;        // Definition only
  std::string marker;  // Postulate reason, or originating schema for Generated
  Span span;
};

// Local typing context: ordered types, innermost last. Var(0) refers to the
// last entry; the stored type of entry k is well-formed in the prefix before it.
class Context {
 public:
  size_t size() const { return types_.size(); }
  void push(TermPtr ty) { types_.push_back(std::move(ty)); }
  void pop() { types_.pop_back(); }

  // Type of Var(index), shifted into the full context.
  TermPtr lookup(uint32_t index) const {
    TermPtr raw = types_[types_.size() - 1 - index];
    return shift(raw, int(index) + 1);
  }

  bool inScope(uint32_t index) const { return index < types_.size(); }

 private:
  std::vector<TermPtr> types_;
};

// Insertion-ordered map of global declarations.
class GlobalEnv {
 public:
  const Declaration* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &decls_[it->second];
  }

  bool contains(const std::string& name) const { return index_.count(name) > 0; }

  void add(Declaration decl) {
    index_.emplace(decl.name, decls_.size());
    decls_.push_back(std::move(decl));
  }

  const std::vector<Declaration>& declarations() const { return decls_; }
  size_t size() const { return decls_.size(); }

 private:
  std::vector<Declaration> decls_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace hott
