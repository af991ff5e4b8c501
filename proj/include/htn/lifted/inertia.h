#ifndef HTN_LIFTED_INERTIA_H
#define HTN_LIFTED_INERTIA_H

#include "htn/lifted/indexed_model.h"

#include <vector>

namespace htn::lifted {

enum class Inertia {
    Positive,  // never added
    Negative,  // never deleted
    Full,  // never affected: static
    Fluent,
};

const char *to_string(Inertia inertia);

/// Per predicate, indexed by predicate id.
using InertiaClass = std::vector<Inertia>;

/// Scans action effects only; methods never change the state.
InertiaClass classify_inertia(const IndexedModel &model);

/// Narrows each operator parameter domain using positive preconditions over
/// static predicates: a value survives only if some init tuple supports it.
/// Domains never grow.
IndexedModel infer_parameter_domains(IndexedModel model, const InertiaClass &inertia);

/// Folds fully constant literals over static predicates against init and
/// equalities decidable without instantiation. True conjuncts disappear; a
/// false conjunct (or an empty parameter domain) marks the operator
/// uninstantiable.
IndexedModel simplify(IndexedModel model, const InertiaClass &inertia);

}  // namespace htn::lifted

#endif
