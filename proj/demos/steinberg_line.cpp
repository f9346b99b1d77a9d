// Walkthrough: assembling the parameter of an unramified twist of the
// Steinberg representation for GL(n) and checking the projection diagram.

#include <iostream>

#include "exq/langlands.hpp"

int main() {
  using namespace exq;
  const int n = 3;

  SeriesContext ctx = full_series_context(gl_datum(n));
  InertialDatum chi;
  chi.generators.push_back(TorusPoint::one(n));

  ReederParameter st = mu_assemble(ctx, TorusPoint::one(n), Partition{n}, 0, 0, chi);
  std::cout << "cocharacter exponents:";
  for (const Int& e : st.h) std::cout << " " << e;
  std::cout << "\ncell: " << st.cell.key << (st.cell.is_lowest ? " (lowest)" : "") << "\n";

  TorusCoord alpha(Rat(2), Rat(0));
  TorusOrbit img = i_alpha(ctx, st, alpha);
  std::cout << "i_alpha image magnitudes:";
  for (const auto& c : img.canonical.coords) std::cout << " " << c.mag;
  std::cout << "\n";

  for (const auto& pt : second_kind_fiber(ctx, TorusPoint::one(n)))
    if (pt.springer && pt.springer->h == st.h)
      std::cout << "matching second-kind point found, diagram "
                << (pi_alpha(ctx, pt, alpha) == img ? "commutes" : "fails") << "\n";
  return 0;
}
