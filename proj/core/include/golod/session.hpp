#pragma once

// Session files declare one ring plus named ideals and graphs:
//
//   # comment
//   ring x,y,z weights 1,1,1        (weights optional, default all 1)
//   ideal I = x*z, y*z
//   graph G = cycle 5               (also: path N, complete N, file <path>)
//
// Every ideal is checked for homogeneity under the declared weights at parse
// time. Errors carry 1-based line and column.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golod/ideal.hpp"
#include "golod/monomial_ideal.hpp"

namespace golod {

struct Session {
  RingPtr ring;
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, Graph>> graphs;

  bool has_ideal(std::string_view name) const;
  /// Throws DomainError for an unknown name.
  const Ideal& ideal(std::string_view name) const;
  const Graph& graph(std::string_view name) const;
};

/// Relative graph file paths resolve against `base_dir`.
Session parse_session(std::string_view text, const std::filesystem::path& base_dir = {});

/// Throws Error if the file cannot be read.
Session load_session(const std::filesystem::path& path);

/// Reads a whole text file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace golod
