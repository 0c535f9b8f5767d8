#pragma once

// Norton-style irreducibility test for matrix algebras over finite fields.
// Reducible verdicts return an explicit invariant-subspace basis, verified by
// closure; Irreducible verdicts are certified by Norton's criterion on an
// algebra element whose chosen charpoly factor has minimal nullity.

#include "ffrep/algrep.hpp"

namespace ffrep {

struct MeataxeResult {
  Verdict verdict = Verdict::Unknown;
  MatF invariant;  // columns span a proper invariant subspace when Reducible
  std::string detail;
};

MeataxeResult meataxe_irreducible(const std::vector<MatF>& gens, uint64_t seed, int budget = 60);

// all g map the column span into itself
bool is_invariant_subspace(const MatF& basis, const std::vector<MatF>& gens);

// spin the column span to closure under the generators
MatF spin_closure_fq(const MatF& seed, const std::vector<MatF>& gens);

}  // namespace ffrep
