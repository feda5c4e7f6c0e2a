#pragma once

#include <utility>
#include <vector>

namespace germkit::detail {

// Built-in corpus files (name, contents); generated at build time.
const std::vector<std::pair<const char*, const char*>>& embedded_corpus();

}  // namespace germkit::detail
