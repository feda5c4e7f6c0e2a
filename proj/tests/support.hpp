#pragma once

#include <string>

#include "germkit/corpus.hpp"
#include "germkit/rational.hpp"

namespace germkit::testing {

inline Rational Q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

inline const std::string& corpus_file(const std::string& name) {
  static const Corpus corpus = Corpus::builtin();
  return corpus.file(name);
}

}  // namespace germkit::testing
