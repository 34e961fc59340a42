#pragma once

#include <string>
#include <vector>

#include "sgm/matrix.hpp"

namespace sgm {

// Text format:
//   rows cols domain          (domain is gf3 or dyadic)
//   <rows lines of entries>
//   labels l1 ... ln          (optional; omitted when labels are e1..en)
// Lines starting with '#' are ignored.
std::string format_matrix(const ExactMatrix& m);
ExactMatrix parse_matrix(const std::string& text);

// Single-line variant used inside catalog records:
//   rows cols domain | r1c1 r1c2 ... | r2c1 ...
std::string flatten_matrix(const ExactMatrix& m);
ExactMatrix parse_flat_matrix(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Whitespace tokenizer shared by the text parsers.
std::vector<std::string> split_ws(const std::string& line);

}  // namespace sgm
