#include "core/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace duopoly {

namespace {

// Splits a stream into whitespace-separated tokens, dropping '#' comment
// lines. Keeps the 1-based line number of each token for error messages.
struct Token {
  std::string text;
  int line;
};

std::vector<Token> tokenize(std::istream& in) {
  std::vector<Token> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string field;
    while (fields >> field) {
      if (field.front() == '#') break;  // rest of the line is a comment
      tokens.push_back({field, line_no});
    }
  }
  return tokens;
}

double parse_number(const Token& tok) {
  try {
    std::size_t used = 0;
    const double value = std::stod(tok.text, &used);
    if (used != tok.text.size()) throw std::invalid_argument(tok.text);
    return value;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(tok.line) + ": '" + tok.text +
                     "' is not a number");
  }
}

int parse_count(const Token& tok) {
  const double value = parse_number(tok);
  const int n = static_cast<int>(value);
  if (static_cast<double>(n) != value || n < 1) {
    throw ParseError("line " + std::to_string(tok.line) + ": '" + tok.text +
                     "' is not a valid agent count");
  }
  return n;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

Network read_network(std::istream& in, bool normalize) {
  const auto tokens = tokenize(in);
  if (tokens.empty()) throw ParseError("empty graph file");
  const int n = parse_count(tokens.front());
  const std::size_t expected = 1 + static_cast<std::size_t>(n) * n;
  if (tokens.size() != expected) {
    throw ParseError("expected " + std::to_string(expected - 1) +
                     " weights for n=" + std::to_string(n) + ", found " +
                     std::to_string(tokens.size() - 1));
  }
  Eigen::MatrixXd w(n, n);
  std::size_t next = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w(i, j) = parse_number(tokens[next++]);
    }
  }
  if (normalize) w = normalize_rows(std::move(w));
  return Network::from_weights(std::move(w));
}

Network read_network(const std::string& path, bool normalize) {
  auto in = open_input(path);
  return read_network(in, normalize);
}

void write_network(const Network& net, std::ostream& out) {
  const int n = net.size();
  out << n << '\n';
  char buf[64];
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", net.weights()(i, j));
      if (j > 0) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void write_network(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_network(net, out);
  if (!out) throw IoError("failed writing '" + path + "'");
}

Eigen::VectorXd read_state_vector(std::istream& in, int n) {
  const auto tokens = tokenize(in);
  if (static_cast<int>(tokens.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " values, found " +
                     std::to_string(tokens.size()));
  }
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y(i) = parse_number(tokens[i]);
  return y;
}

Eigen::VectorXd read_state_vector(const std::string& path, int n) {
  auto in = open_input(path);
  return read_state_vector(in, n);
}

}  // namespace duopoly
