// Builds the Cantor-Bernstein bijection for p = prepend 0, q = prepend 1 on
// binary strings and prints each input's chain and image.
#include <iostream>

#include "pcard.hpp"

int main() {
  using namespace pcard;
  const Alphabet a(2);
  const Str zero(a, "0"), one(a, "1");
  const auto S = gallery::sigma_star(a);
  const auto P = make_injection_pair(S, S, maps::prepend(zero), maps::prepend(one));
  const auto E = cb_witness(P, 8);

  for_each_upto(a, 3, [&](const Str& x) {
    auto v = classify(x, Side::A, P);
    std::cout << format(x) << "  " << to_string(v.origin) << "  walk";
    for (const auto& w : v.walk) std::cout << " " << format(w);
    std::cout << "  ->  " << format(*E.forward(x)) << "\n";
  });
  auto report = verify_equipollence(E, 8);
  std::cout << "\nverified up to 8: " << (report.clean() ? "clean" : "violations") << "\n";
  return report.clean() ? 0 : 1;
}
