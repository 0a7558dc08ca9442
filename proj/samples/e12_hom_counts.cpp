// alpha-induction hom counts for the E^(12) invariant of SU(3)_9.
#include <iostream>

#include "modinv/invariants/named.hpp"

using namespace modinv;

int main() {
  const auto cfg = PrecisionConfig::high(40);
  apply_precision(cfg);
  FusionRing<HighPrec> ring(su_n_k<HighPrec>(3, 9, cfg));
  const IntMatrix z = su3_invariant(ring, "E^(12)").matrix();

  auto sec = [&](const char* s) { return SectorVector::parse(ring.labels(), s); };
  const auto f = sec("(1,0)");
  const auto ff = fuse(ring, f, f);
  const auto two = sec("(2,0)");

  std::cout << alpha_hom(z, ring, {f, f}, {f, f}) << ' ' << alpha_hom(z, ring, {f, ff}, {f, ff}) << ' '
            << alpha_hom(z, ring, {two, f}, {two, f}) << ' ' << alpha_hom(z, ring, {two, ff}, {two, ff}) << '\n';
}
