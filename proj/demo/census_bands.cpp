// Prints the censuses of the two tower-gap languages side by side and shows
// where each one outgrows every cubic stretch of the other.
#include <iomanip>
#include <iostream>

#include "pcard.hpp"

int main() {
  using namespace pcard;
  const Alphabet a(2);
  const auto A0 = gallery::tower_gap_A0(a), A1 = gallery::tower_gap_A1(a);
  const Polynomial cubic({5, 5, 5, 5});

  std::cout << std::setw(4) << "n" << std::setw(12) << "c_A0(n)" << std::setw(12) << "c_A1(n)" << "\n";
  for (std::size_t n = 0; n <= 20; ++n) {
    std::cout << std::setw(4) << n << std::setw(12) << census(A0, n) << std::setw(12) << census(A1, n) << "\n";
  }
  auto rep = census_poly_related(A0, A1, cubic, cubic, 20);
  std::cout << "\nwith p = q = " << cubic.to_string() << ":\n";
  for (const auto& row : rep.rows) {
    if (row.combined() == RelVerdict::Fail) {
      std::cout << "  n=" << row.n << "  A0 into A1: " << to_string(row.a_into_b)
                << "  A1 into A0: " << to_string(row.b_into_a) << "\n";
    }
  }
  std::cout << "overall: " << to_string(rep.overall()) << "\n";
}
