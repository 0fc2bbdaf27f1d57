#pragma once

namespace ecg {

// Selects between the OpenMP kernel and its single-threaded path. Both
// produce identical results; the serial path is what tests compare against.
enum class Execution { serial, parallel };

// Threads available to parallel kernels (1 when built without OpenMP).
int max_threads();

}  // namespace ecg
