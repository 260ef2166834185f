#pragma once

namespace idealkit {

// Selects between the OpenMP kernels and their serial reference versions.
// Both always produce identical results.
enum class Execution { serial, parallel };

// Thread cap for parallel kernels: IDEALKIT_THREADS when set and positive,
// otherwise the OpenMP default (IDEALKIT_THREADS=0 means auto).
int thread_cap();

}  // namespace idealkit
