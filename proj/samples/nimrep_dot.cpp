// Build the E7 nimrep at SU(2)_16, print theta at each vertex and the graph as DOT.
#include <iostream>

#include "modinv/nimreps/nimrep.hpp"

using namespace modinv;

int main() {
  const auto cfg = PrecisionConfig::high(50);
  apply_precision(cfg);
  auto md = std::make_shared<const ModularData<HighPrec>>(su_n_k<HighPrec>(2, 16, cfg));
  FusionRing<HighPrec> ring(md);
  const Graph g = dynkin("E7");
  const auto nim = su2_nimrep(g, ring);
  for (std::size_t a = 0; a < g.size(); ++a)
    std::cout << "// theta(" << g.vertex(a) << ") = " << theta_at_vertex(nim, a).to_string() << '\n';
  std::cout << dot_export(g);
}
