// Runs the stage construction with A empty and B = Σ*, then prints the
// stage log and the requirement table.
#include <cstdlib>
#include <iostream>

#include "pcard.hpp"

int main(int argc, char** argv) {
  using namespace pcard;
  const std::uint64_t stages = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 30;
  const std::size_t horizon = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 8;
  const Alphabet a(2);
  const Language A = gallery::empty(a), B = gallery::sigma_star(a);
  const MachineCatalog cat = catalogs::standard(a);

  auto run = run_construction(A, B, cat, stages, horizon);
  for (const auto& r : run.state.log) {
    if (r.kind == StageKind::Init) continue;
    std::cout << "stage " << r.stage << "  " << to_string(r.kind);
    if (!r.pair_name.empty()) std::cout << " [" << r.pair_name << "]";
    if (!r.subcase_label.empty()) std::cout << " case " << r.subcase_label;
    else if (!r.case_label.empty()) std::cout << " case " << r.case_label;
    for (const auto& x : r.added) std::cout << "  +" << format(x);
    for (const auto& x : r.excluded) std::cout << "  -" << format(x);
    std::cout << "  " << to_string(r.verdict) << "\n";
  }
  std::cout << "\nC up to length 4:";
  for (const auto& x : enumerate_upto(run.C, 4)) std::cout << " " << format(x);
  std::cout << "\n\n";
  for (const auto& rec : check_requirements(run.state, A, B, cat, horizon)) {
    std::cout << rec.pair_name << ": R1 " << rec.r1.label() << ", R2 " << rec.r2.label() << "\n";
  }
}
