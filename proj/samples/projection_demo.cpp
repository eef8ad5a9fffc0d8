// Builds a few star rings and shows how an idempotent that is not a
// projection is turned into one, when the construction applies.

#include <iostream>

#include "ringlab/ringlab.hpp"

using namespace ringlab;

namespace {

void show(const StarRing& S) {
  const auto& R = S.ring();
  std::cout << S.label() << " (order " << R.order() << ")\n";
  for (auto e : idempotents(R).elements()) {
    if (is_projection(S, e)) continue;
    std::cout << "  idempotent " << e.index << " has star " << S.star(e).index << ": ";
    try {
      const auto c = lemma2_projection(S, e);
      std::cout << "projection " << c.p.index << ", (e - p) nilpotent of index "
                << c.certificate.nilpotency_index << '\n';
    } catch (const HypothesisFails&) {
      std::cout << "e - e* is neither radical nor nilpotent\n";
    }
  }
  std::cout << "  strongly pi-*-regular: " << std::boolalpha << is_strongly_pi_star_regular(S) << '\n';
}

}  // namespace

int main() {
  show(example6());
  show(build_star({RingExpr::zero_pairing(RingExpr::zn(2)), InvExpr::transpose()}));
  show(build_star({RingExpr::zn(4), InvExpr::identity()}));
}
