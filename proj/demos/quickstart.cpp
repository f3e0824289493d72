/*
   Copyright 2026 The mirrordim authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Minimal library walkthrough: the sextic surface case n=2, a=6.

#include <iostream>

#include "mirrordim/mirrordim.hpp"

int main() {
    using namespace mirrordim;

    const int n = 2, a = 6;

    const Polynomial w_hat = deformed_potential(n, a);
    std::cout << "potential: " << w_hat.to_string() << "\n";
    std::cout << "global milnor number: " << milnor_number(w_hat, false) << "\n";
    std::cout << "local milnor number:  " << milnor_number(w_hat, true) << "\n\n";

    const VerificationReport rep = build_verification(n, a);
    std::cout << verification_table(rep);

    const GraphSummary g = hom_graph(n, a);
    std::cout << "\nthimble graph: " << g.vertices << " vertices, " << g.edges << " edges, "
              << g.components << " component(s)\n";
    return rep.all_pass ? 0 : 1;
}
