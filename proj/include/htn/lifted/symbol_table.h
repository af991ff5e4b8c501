#ifndef HTN_LIFTED_SYMBOL_TABLE_H
#define HTN_LIFTED_SYMBOL_TABLE_H

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace htn::lifted {

using TypeId = int;
using ObjectId = int;
using PredicateId = int;

/// Append-only bijection between names and dense ids.
class NameTable {
public:
    /// Returns the id of `name`, appending it if absent.
    int intern(std::string_view name);
    /// -1 when absent.
    int find(std::string_view name) const;
    const std::string &name(int id) const { return names_.at(static_cast<std::size_t>(id)); }
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string> &names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;
};

struct SymbolTable {
    NameTable types;  // id 0 is the root type "object"
    NameTable objects;  // domain constants first, then problem objects
    NameTable predicates;
    NameTable primitive_tasks;  // one per action, same id as the action
    NameTable compound_tasks;
    NameTable methods;

    std::vector<TypeId> type_parent;  // -1 for the root
    std::vector<TypeId> object_type;
    /// Per type: the type itself and all its descendants, ascending.
    std::vector<std::vector<TypeId>> subtypes;
    /// Per type: objects of that type or any descendant, ascending.
    std::vector<std::vector<ObjectId>> members;
};

}  // namespace htn::lifted

#endif
