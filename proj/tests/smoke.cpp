#include <iostream>
#include "gps/lie_algebra.hpp"
#include "gps/poisson.hpp"

using namespace gps;

void perturb_jblock(ExactTensor& w, std::vector<int> js, int sigma, const ExactScalar& delta) {
  std::sort(js.begin(), js.end());
  std::vector<int> idx(5);
  do {
    int sign = permutation_sign(std::span<const int>(js.data(), 4));
    std::copy(js.begin(), js.end(), idx.begin());
    idx[4] = sigma;
    w.at(idx) += sign > 0 ? delta : -delta;
  } while (std::next_permutation(js.begin(), js.end()));
}

int main() {
  const LieAlgebra& su3 = catalog_load("su3");
  auto coc = build_cocycle(invariant_symmetric_tensor(su3, 3));
  int sensitive = 0, insensitive = 0;
  for (int a = 0; a < 8; ++a) for (int b = a+1; b < 8; ++b) for (int c = b+1; c < 8; ++c)
  for (int d = c+1; d < 8; ++d) for (int s = 0; s < 8; ++s) {
    ExactTensor w = coc.omega;
    perturb_jblock(w, {a,b,c,d}, s, ExactScalar(1));
    auto r = gji_residual_of(w);
    if (r.is_zero()) {
      ++insensitive;
      if (insensitive <= 12) {
        std::cout << "insensitive: (" << a+1 << b+1 << c+1 << d+1 << "|" << s+1 << ")\n";
      }
    } else ++sensitive;
  }
  std::cout << "sensitive=" << sensitive << " insensitive=" << insensitive << " of 560\n";
  return 0;
}
