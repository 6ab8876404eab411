#pragma once

namespace symchev {

// Execution policy for the data-parallel kernels (row elimination,
// per-monomial Reynolds averaging, per-degree invariant kernels).
// Serial is the reference implementation; Omp must produce identical
// results since all arithmetic is exact and work items are independent.
enum class Exec { Serial, Omp };

inline Exec& default_exec() {
    static Exec e = Exec::Omp;
    return e;
}

}  // namespace symchev
