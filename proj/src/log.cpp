#include "kpan/log.hpp"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>

namespace kpan {

std::shared_ptr<spdlog::logger> logger() {
    static const auto instance = [] {
        auto l = std::make_shared<spdlog::logger>("kpan", std::make_shared<spdlog::sinks::stderr_sink_mt>());
        l->set_pattern("kpan: %l: %v");
        return l;
    }();
    return instance;
}

void configure_logging() {
    const char* env = std::getenv("KPAN_LOG");
    const std::string_view level = env ? env : "info";
    if (level == "quiet") {
        logger()->set_level(spdlog::level::err);
    } else if (level == "debug") {
        logger()->set_level(spdlog::level::debug);
    } else {
        logger()->set_level(spdlog::level::info);
    }
}

}  // namespace kpan
