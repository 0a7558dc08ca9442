// Enumerate the SU(2)_16 invariants and multiply them.
#include <iostream>

#include "modinv/invariants/enumerate.hpp"
#include "modinv/invariants/named.hpp"

using namespace modinv;

int main() {
  const auto cfg = PrecisionConfig::high(50);
  apply_precision(cfg);
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, 16, cfg));
  FusionRing<HighPrec> ring(md);

  const auto found = enumerate_physical(*md, cfg);
  std::cout << found.invariants.size() << " physical invariants\n";

  const IntMatrix d = ade_invariant(ring, {'D', 10}).matrix();
  const IntMatrix e = ade_invariant(ring, {'E', 7}).matrix();
  std::cout << "Z_E7^2 == Z_D10 + Z_E7: " << std::boolalpha << (e * e == d + e) << '\n';
  std::cout << "Z_D10 Z_E7 == 2 Z_E7: " << (d * e == 2 * e) << '\n';
}
