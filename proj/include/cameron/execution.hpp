#pragma once

namespace cameron {

/// Kernels that fan out with OpenMP take this; `serial` is the reference path.
enum class Execution { serial, parallel };

/// Applies the CAMERON_WORKERS environment variable (a positive integer) to the
/// OpenMP thread count. Returns the count in effect.
int configure_workers_from_env();

}  // namespace cameron
