// Copyright 2026 The primdeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints the primitive degree of the lifted Wielandt tensor for a few
// dimensions and orders, next to the (n-1)^2 + 1 bound it attains.

#include <iostream>

#include "primdeg/primdeg.hpp"

int main() {
  std::cout << "n\tm\tgamma\tbound\n";
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t m : {2, 3, 4}) {
      const auto rep = primdeg::analyze(primdeg::wielandt_tensor(n, m));
      std::cout << n << '\t' << m << '\t' << *rep.gamma << '\t' << rep.bound
                << '\n';
    }
  }
}
