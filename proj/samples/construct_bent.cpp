// Builds a bent function on 8 variables from the quadratic near-bent
// function tr(x^3+x^9) over GF(2^7), then looks at its dual.

#include <iostream>

#include "bentkit/bentkit.hpp"

int main() {
  using namespace bentkit;
  const FieldContext K(7);
  const auto f0 = parse("tr(x^3+x^9)", K);
  const auto F = bent_from_near_bent(f0, K);

  const auto s = walsh(F);
  std::cout << "F on " << F.dim() << " variables: " << class_name(s.cls) << "\n";

  const auto [d0, d1] = split(dual(s, K));
  std::cout << "dual f0       = " << format(to_trace_form(d0, K), K) << "\n";
  std::cout << "dual f1 + f0  = " << format(to_trace_form(d0 ^ d1, K), K) << "\n";
}
