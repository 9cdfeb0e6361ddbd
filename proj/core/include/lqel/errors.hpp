#pragma once

#include <stdexcept>
#include <string>

namespace lqel {

// Stable machine codes for the hypothesis gates of the Clifford stage.
// These are expected outcomes for some inputs, not bugs.
enum class RejectCode {
  SecantFills,  // Sec(X) = ambient space: the construction does not apply
  NotLqel,      // key identity fails at the sampled point
  DeltaZero,    // projection oracle says X is not secant-defective
};

inline const char* reject_code_id(RejectCode c) {
  switch (c) {
    case RejectCode::SecantFills: return "secant_fills";
    case RejectCode::NotLqel: return "not_lqel";
    case RejectCode::DeltaZero: return "delta_zero";
  }
  return "?";
}

inline const char* reject_code_message(RejectCode c) {
  switch (c) {
    case RejectCode::SecantFills:
      return "not applicable: secant variety fills the ambient space";
    case RejectCode::NotLqel: return "not LQEL at this point";
    case RejectCode::DeltaZero: return "not secant-defective (delta = 0)";
  }
  return "?";
}

// A hypothesis of the construction is not satisfied by the input.
class hypothesis_reject : public std::runtime_error {
 public:
  explicit hypothesis_reject(RejectCode code)
      : std::runtime_error(reject_code_message(code)), code_(code) {}
  RejectCode code() const { return code_; }

 private:
  RejectCode code_;
};

// A vector that the commuting-diagram argument forces into a subspace
// failed to decompose there. Either the sample was non-generic (retry
// once with a fresh one) or there is a bug.
class exactness_breach : public std::runtime_error {
 public:
  explicit exactness_breach(const std::string& what)
      : std::runtime_error("diagram exactness breach: " + what) {}
};

// A consistency statement that must hold for every admissible input
// failed. Always a bug or a discovery; never swallowed.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& what)
      : std::runtime_error("invariant violation: " + what) {}
};

// The resampling budget ran out before a usable generic sample appeared.
class sampling_exhausted : public std::runtime_error {
 public:
  explicit sampling_exhausted(const std::string& what)
      : std::runtime_error("sampling budget exhausted: " + what) {}
};

// Malformed user input: unknown id, unreadable file, bad polynomial.
class input_error : public std::invalid_argument {
 public:
  explicit input_error(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace lqel
