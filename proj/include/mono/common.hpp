#pragma once

#include <stdexcept>
#include <string>

namespace mono {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Strand/rank count of two operands disagree.
struct mismatch_error : error {
  using error::error;
};

// A stated operation precondition does not hold (bad index, bad degree, ...).
struct precondition_error : error {
  using error::error;
};

// A word grew past the configured length cap.
struct word_limit_error : error {
  using error::error;
};

struct parse_error : error {
  std::size_t column;  // 1-based offset into the input text
  parse_error(const std::string& msg, std::size_t col)
      : error(msg + " (column " + std::to_string(col) + ")"), column(col) {}
};

// Global length cap for braid/free words; exceeding it throws word_limit_error
// instead of silently truncating.
std::size_t word_length_limit();
void set_word_length_limit(std::size_t limit);

}  // namespace mono
