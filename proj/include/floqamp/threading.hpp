#pragma once

namespace floqamp {

// 0 -> all available cores (1 when built without OpenMP).
int resolve_threads(int requested);

}  // namespace floqamp
