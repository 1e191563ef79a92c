// Detects a 2-join in a planted instance and builds its blocks.
#include <iostream>

#include "twojoin/twojoin.hpp"

int main() {
  using namespace twojoin;

  const auto planted = gen::double_hexagon();
  const Graph& g = planted.graph;

  if (auto s = detect_nonpath_2join(g)) {
    std::cout << "non-path 2-join:\n";
    write_split(std::cout, *s);

    const auto [g1, g2] = decompose_blocks(g, *s, 3);
    std::cout << "block sizes: " << g1.graph.n() << ", " << g2.graph.n() << '\n';
  }

  const Detection none = detect_2join_report(gen::complete(6));
  std::cout << "K6 has a 2-join: " << std::boolalpha << static_cast<bool>(none)
            << " (certificate of " << none.certificate.size() << " tuples)\n";
}
