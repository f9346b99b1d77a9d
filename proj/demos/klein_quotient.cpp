// Walkthrough: the rank-3 torus under the Klein four group cut out by two
// order-2 inertial characters, its extended quotient, and the fiber counts
// of the projection to the ordinary quotient.

#include <iostream>

#include "exq/examples.hpp"

int main() {
  using namespace exq;

  RootDatum rd = pgl_datum(4);
  MatGroup w = weyl_group(rd);
  std::cout << "ambient Weyl group order: " << w.size() << "\n";

  InertialDatum chi = sl4_example_chi();
  WsResult r = compute_Ws(rd, w, chi, WsMode::stabilizer);
  std::cout << "W^s order: " << r.ws.size() << "\n";

  SeriesContext ctx(r.h_datum, std::move(r.ws));
  auto eq = extended_quotient_first(ctx);
  for (const auto& e : eq)
    std::cout << "class " << e.class_index << ": fixed locus dim " << e.locus.dimension << ", "
              << e.locus.component_count << " component(s), " << e.quotient_component_count
              << " after the centralizer quotient\n";

  TorusPoint vertex = TorusPoint::one(3);
  std::cout << "fiber over a vertex point: "
            << fiber_cardinality(ctx, vertex).predicted_constituents << "\n";
  for (const auto& pt : second_kind_fiber(ctx, vertex))
    std::cout << "  point tau=" << pt.tau << " lies in cell " << cell_of(ctx, pt).key << "\n";
  return 0;
}
