#include "clasp/freegroup.hpp"

namespace clasp {

Word phi(const Bracket& body) {
  if (body.is_leaf()) return Word::generator(body.label());
  return commutator(phi(body.left()), phi(body.right()));
}

Word phi(const RootedTree& t) { return phi(t.body); }

}  // namespace clasp
