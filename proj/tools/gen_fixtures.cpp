// Writes the fixture corpus and a few adversarial mutants into a directory.
#include <filesystem>
#include <iostream>

#include "valab/fixtures.hpp"
#include "valab/mutate.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  const fs::path dir = argc > 1 ? argv[1] : "fixtures";
  fs::create_directories(dir);
  auto corpus = valab::fixtures::corpus();
  for (const auto& f : corpus) valab::save_file(f, dir / (f.id + ".json"));

  int k = 0;
  for (const auto& f : corpus) {
    if (f.id != "ex62_alpha1" && f.id != "ex63_rho1" && f.id != "semisimple_l1") continue;
    for (const auto& mu : valab::draw_mutations(f.algebroid, 1000 + k, 2)) {
      valab::AlgebroidFile m = f;
      m.id = "mutant_" + f.id + "_" + std::to_string(++k);
      m.algebroid = valab::apply_mutation(f.algebroid, mu);
      valab::save_file(m, dir / (m.id + ".json"));
    }
  }
  std::cout << "wrote " << corpus.size() + k << " fixtures to " << dir << "\n";
}
