#pragma once

// Placeholder during bring-up; the full CLI is assembled once the experiment
// layer exists.
namespace spoilkit {
int cli_main(int argc, char** argv);
inline int cli_main(int, char**) { return 0; }
}  // namespace spoilkit
