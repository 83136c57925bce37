#ifndef MUSTAFIN_CONFIG_HPP
#define MUSTAFIN_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mustafin/building.hpp"
#include "mustafin/flag.hpp"

namespace mustafin {

/// A parsed run configuration: the lattice configuration and flag type plus
/// run parameters. Lattices are kept as vertices (diagonal or matrix form).
struct RunConfig {
  int d = -1;
  std::vector<int> ranks;
  std::vector<Vertex> vertices;
  uint64_t seed = 1;
  int radius = 1;
  int maxCandidates = 64;
  int trials = 5;
  std::string order = "degrevlex";

  FlagType flagType() const;            // validates d/ranks
  Configuration configuration() const;  // validates the vertex list
};

/// Line-oriented format: `d=3`, `flag=1,2`, repeated `lattice diag=0,0,0` /
/// `lattice matrix=[[1,0],[0,t]]` lines, optional `seed=`, `radius=`,
/// `max-candidates=`, `trials=`, `order=`. `#` starts a comment. Errors
/// carry the 1-based line number.
RunConfig parseConfig(const std::string& text);

/// Inverse of parseConfig: parseConfig(printConfig(c)) reproduces c.
std::string printConfig(const RunConfig& c);

}  // namespace mustafin

#endif
