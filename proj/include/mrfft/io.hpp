#ifndef MRFFT_IO_HPP
#define MRFFT_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mrfft/operators.hpp"

namespace mrfft {

/// Complex-vector text format: one sample per line as two decimal floats
/// "re im"; lines starting with '#' and blank lines are ignored.
/// Throws std::runtime_error on malformed lines.
std::vector<Complex> read_vector(std::istream& in);

/// Writes one "re im" pair per line with round-trip-exact precision; output
/// is byte-stable for identical inputs.
void write_vector(std::ostream& out, std::span<const Complex> v);

std::vector<Complex> read_vector_file(const std::string& path);  // "-" reads stdin
void write_vector_file(const std::string& path, std::span<const Complex> v);  // "-" writes stdout

}  // namespace mrfft

#endif  // MRFFT_IO_HPP
