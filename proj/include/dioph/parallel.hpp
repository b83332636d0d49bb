#pragma once

namespace dioph {

/// Kernels with an OpenMP implementation also keep a serial reference.
enum class Exec { serial, parallel };

/// Caps OpenMP worker count (0 leaves the runtime default).
void set_max_threads(int n);
int max_threads();

}  // namespace dioph
