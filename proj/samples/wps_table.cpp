#include <iostream>
#include <vector>

#include "spectra/spectra.hpp"

int main() {
  using namespace spectra;
  const std::vector<std::vector<std::int64_t>> weights = {{1, 1, 1}, {1, 1, 2}, {1, 2, 3}, {1, 2, 5},
                                                          {1, 3, 3}, {1, 1, 1, 1}, {1, 2, 2, 2}};
  for (const auto& w : weights) {
    const WpsWeights ws(w);
    const auto fromFormula = wpsSpectrum(ws);
    const auto fromPolytope = geometricSpectrum(wpsPolytope(ws));
    const int n = static_cast<int>(w.size()) - 1;
    const auto st = spectrumStats(fromFormula, n);
    std::cout << "P(";
    for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? "," : "") << w[i];
    std::cout << ")  mu=" << st.mu << "  variance=" << st.variance << "  spectrum: " << fromFormula.str()
              << (fromFormula == fromPolytope ? "" : "  MISMATCH") << "\n";
    if (fromFormula != fromPolytope) return 1;
  }
  return 0;
}
