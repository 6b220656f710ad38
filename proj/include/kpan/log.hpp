// Process-wide stderr logger; level from KPAN_LOG={quiet|info|debug}.
#pragma once

#include <memory>

#include <spdlog/spdlog.h>

namespace kpan {

std::shared_ptr<spdlog::logger> logger();

/// Re-reads KPAN_LOG. Unknown values fall back to info.
void configure_logging();

}  // namespace kpan
