#pragma once

#include "hyplan/solution_pair.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hyplan::cli {

class CsvError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

/// Header: edge_id,t,j,x0,...,x{n-1},u0,...,u{m-1}; one row per sample.
std::string trajectory_header(int state_dim, int input_dim);

void write_trajectory_csv(std::ostream& out, const SolutionPair& sp);

/// Dimensions are read off the header. Edge ids must start at 0 and grow by
/// one at each new edge. Throws CsvError with a line number.
SolutionPair read_trajectory_csv(std::istream& in, const std::string& source = "<csv>");

SolutionPair load_trajectory_csv(const std::string& path);
void save_trajectory_csv(const std::string& path, const SolutionPair& sp);

}  // namespace hyplan::cli
