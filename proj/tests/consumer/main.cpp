#include <iostream>

#include "goorbit/isotypic.hpp"

int main() {
  auto s = goorbit::space_by_id("a2.1");
  auto dec = goorbit::isotypic_decompose(*s);
  std::cout << s->id() << " components " << dec.components.size() << "\n";
  return dec.components.size() == 2 ? 0 : 1;
}
