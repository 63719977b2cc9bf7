#pragma once

namespace bbcage {

/// Selects between the OpenMP kernel and the serial reference kernel.
/// Both must produce identical results; tests compare them.
enum class Exec { parallel, serial };

} // namespace bbcage
