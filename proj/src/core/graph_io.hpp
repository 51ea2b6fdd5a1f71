#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "core/network.hpp"

namespace duopoly {

// Text graph format: optional comment lines starting with '#', a line with
// the agent count n, then n lines of n whitespace-separated weights.
// With normalize = true each row is rescaled to sum 1 before validation.
Network read_network(const std::string& path, bool normalize = false);
Network read_network(std::istream& in, bool normalize = false);

void write_network(const Network& net, const std::string& path);
void write_network(const Network& net, std::ostream& out);

// Reads exactly n whitespace-separated values ('#' comments allowed),
// one per agent in index order.
Eigen::VectorXd read_state_vector(const std::string& path, int n);
Eigen::VectorXd read_state_vector(std::istream& in, int n);

}  // namespace duopoly
