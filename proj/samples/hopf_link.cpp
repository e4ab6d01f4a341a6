// Linking numbers of a Hopf link in R^3 and of a circle threading the
// suspension of a triangle in R^4.
#include "linklab/linking.hpp"

#include <iostream>

using namespace linklab;

int main() {
  const GeomCycle1<3> a({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}});
  const GeomCycle1<3> b({{Rational(1, 2), Rational(1, 2), -1}, {Rational(1, 2), Rational(1, 2), 1},
                         {5, 5, 0}});
  const auto lk = lk3(a, b, 1);
  std::cout << "lk3(hopf)             = " << lk.value << " (retries " << lk.retries << ")\n";
  std::cout << "projection oracle     = " << lk3_projection_oracle(a, b) << "\n";

  // Triangle in w = 0 suspended to apexes (0,0,0,+-1).
  const std::vector<Point4> pts{{2, 0, 0, 0}, {-1, 2, 0, 0}, {-1, -2, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}};
  std::vector<Tri4> tris;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    tris.emplace_back(pts[i], pts[j], pts[3]);
    tris.emplace_back(pts[j], pts[i], pts[4]);
  }
  const GeomCycle2 surface(tris);
  const GeomCycle1<4> ring({{0, 0, 1, 0}, {0, 0, -1, 0}, {10, 0, 0, 0}});
  std::cout << "lk4(threading)        = " << lk4(ring, surface, 1).value << "\n";
  std::cout << "chain oracle          = " << lk4_chain_oracle(ring, surface) << "\n";
}
