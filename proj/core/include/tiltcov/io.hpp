#pragma once

#include <stdexcept>
#include <string>

#include "tiltcov/covering.hpp"
#include "tiltcov/tilting.hpp"

namespace tiltcov::io {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical JSON text formats. format(parse(format(x))) == format(x) byte
/// for byte: keys are emitted in a fixed order with two-space indentation.
AlgebraPtr parse_algebra(const std::string& text);
std::string format_algebra(const AlgebraPresentation& a);

Representation parse_module(const std::string& text, AlgebraPtr alg);
std::string format_module(const Representation& m);

struct GradingSpec {
  FiniteGroup group;
  Grading grading;
};
GradingSpec parse_grading(const std::string& text, const AlgebraPresentation& a);
std::string format_grading(const GradingSpec& g, const AlgebraPresentation& a);

/// Hasse diagram in DOT: vertex labels are the summand dimension vectors,
/// edge labels the index of the exchanged summand.
std::string hasse_dot(const TiltingDiagram& d);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tiltcov::io
