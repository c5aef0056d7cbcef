#pragma once

#include <string>

#include "tiltcov/io.hpp"

#ifndef FIXTURE_DIR
#define FIXTURE_DIR "fixtures"
#endif

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline tiltcov::AlgebraPtr load_fixture(const std::string& name) {
  return tiltcov::io::parse_algebra(
      tiltcov::io::read_file(fixture_path(name + ".alg.json")));
}

inline tiltcov::io::GradingSpec load_grading(const std::string& file,
                                             const tiltcov::AlgebraPresentation& a) {
  return tiltcov::io::parse_grading(tiltcov::io::read_file(fixture_path(file)), a);
}

}  // namespace testutil
