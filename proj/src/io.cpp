#include "mrfft/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace mrfft {

std::vector<Complex> read_vector(std::istream& in) {
  std::vector<Complex> v;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    if (!(fields >> re >> im))
      throw std::runtime_error("malformed sample on line " + std::to_string(lineno) + ": '" +
                               line + "'");
    std::string extra;
    if (fields >> extra)
      throw std::runtime_error("trailing data on line " + std::to_string(lineno) + ": '" + line +
                               "'");
    v.emplace_back(re, im);
  }
  return v;
}

void write_vector(std::ostream& out, std::span<const Complex> v) {
  char buf[96];
  for (const Complex& z : v) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
    out << buf;
  }
}

std::vector<Complex> read_vector_file(const std::string& path) {
  if (path == "-") return read_vector(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return read_vector(in);
}

void write_vector_file(const std::string& path, std::span<const Complex> v) {
  if (path == "-") {
    write_vector(std::cout, v);
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_vector(out, v);
}

}  // namespace mrfft
