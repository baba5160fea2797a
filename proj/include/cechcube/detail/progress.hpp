#pragma once

#include <atomic>
#include <string>

namespace cechcube::detail {

// Optional sink for coarse progress messages from long computations. Library
// code never writes to any stream directly; a front end may install a sink
// (the CLI routes messages to standard error).
using ProgressSink = void (*)(const std::string&);

inline std::atomic<ProgressSink>& progress_sink() {
    static std::atomic<ProgressSink> sink{nullptr};
    return sink;
}

inline void set_progress_sink(ProgressSink s) { progress_sink().store(s); }

inline void progress(const std::string& message) {
    if (ProgressSink s = progress_sink().load()) s(message);
}

}  // namespace cechcube::detail
