#ifndef PRETROP_SYSTEMS_HPP
#define PRETROP_SYSTEMS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pretrop/linalg.hpp"
#include "pretrop/polytope.hpp"

namespace pretrop {

struct Provenance {
  std::string kind;    // "generator" | "file" | "text"
  std::string detail;  // generator name + parameters + seed, or source name
};

// A tuple of polynomial supports: the input to everything else.
struct SystemSpec {
  int ambient_dim = 0;
  std::vector<std::vector<IntVec>> supports;
  Provenance provenance;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
  ParseError(const std::string& msg, int line_, int col_)
      : InputError(msg), line(line_), col(col_) {}
  int line = 0;
  int col = 0;
};

/// Laurent polynomial text:
///   optional header  vars x y z ;
///   one polynomial per statement, ';'-terminated, '#' comments,
///   terms of an optional integer coefficient and '*'-separated powers
///   var^int with negative exponents allowed and ^1 optional.
/// Coefficients are validated, then only their nonzero-ness is kept.
SystemSpec parse_polynomials(std::string_view text,
                             std::string_view source = "<input>");
std::string to_polynomial_text(const SystemSpec& spec);

/// n-1 random simplices in dimension n: n+1 points each, coordinates
/// uniform over {0,...,30} from a seeded mt19937_64 (rejection sampling
/// on the low five bits), resampled until affinely independent.
SystemSpec gen_generic_simplices(int n, std::uint64_t seed);

/// The cyclic n-roots supports; reduced=true substitutes x_i = y_i/y_0,
/// clears denominators and keeps the first n-1 equations in y_1..y_{n-1}.
SystemSpec gen_cyclic(int n, bool reduced);

/// Polynomialized relative-equilibrium systems (see docs/benchmark_systems.md
/// for the exact convention used).
SystemSpec gen_nbody(int n);
SystemSpec gen_nvortex(int n);

std::string to_support_json(const SystemSpec& spec);
SystemSpec parse_support_json(const std::string& text,
                              std::string_view source = "<input>");

/// Reads a support file (JSON) or polynomial text, by extension/content.
SystemSpec load_system_file(const std::string& path);

/// Builds one polytope per support.
std::vector<Polytope> build_polytopes(const SystemSpec& spec);

}  // namespace pretrop

#endif
