// Prints how the literature coefficient tables for the transformed GHZ and W
// states deviate from the direct tensor-product computation.

#include <cstdio>

#include "lorentzqi/lorentzqi.hpp"

namespace {

void report(const char* title, const lorentzqi::TableComparison& cmp) {
  std::printf("%s (reference %s)\n", title, std::string(to_string(cmp.reference)).c_str());
  for (std::size_t k = 0; k < 8; ++k)
    std::printf("  coefficient %zu: max deviation %.3e%s\n", k + 1, cmp.max_deviation[k],
                cmp.max_deviation[k] > lorentzqi::kTableTolerance ? "  <-- mismatch" : "");
}

}  // namespace

int main() {
  report("A table", lorentzqi::compare_published_ghz());
  report("B table", lorentzqi::compare_published_w(lorentzqi::StateId::w));
  report("B table", lorentzqi::compare_published_w(lorentzqi::StateId::w_prime));
}
