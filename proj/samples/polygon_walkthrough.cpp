#include <iostream>

#include "spectra/spectra.hpp"

int main() {
  using namespace spectra;
  const auto P = buildPolytope({{1, 0}, {0, 1}, {-2, -5}});
  const auto spec = geometricSpectrum(P);
  std::cout << "geometric spectrum: " << spec.str() << "\n";
  std::cout << "algebraic spectrum: " << algebraicSpectrum2D(P).str() << "\n";

  const auto res = resolveFan2D(P);
  std::cout << "resolution rays:";
  for (std::size_t i = 0; i < res.fan.rays.size(); ++i) {
    const auto& v = res.fan.rays[i];
    std::cout << " (" << v[0] << "," << v[1] << ")" << (res.inserted[i] ? "*" : "");
  }
  std::cout << "\nself-intersections:";
  for (const auto s : res.selfIntersections) std::cout << " " << s;
  std::cout << "\nmu-hat: " << muHat2D(res) << "\n";
  std::cout << "stacky E-function: " << stringyE2D(res).str() << "\n";

  for (const auto& r : verifyAll(P)) std::cout << r.checkName << ": " << (r.passed ? "ok" : r.failed() ? "FAILED" : "skipped") << "\n";
  return stringyE2D(res) == spec ? 0 : 1;
}
