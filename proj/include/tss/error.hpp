#ifndef TSS_ERROR_HPP
#define TSS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tss {

// Every failure the kernel reports, as a code so callers can dispatch
// without string matching. Three-valued verdicts (sign, comparison) are
// not errors; they carry their indeterminacy in the result type.
enum class errc {
  constant_exp_unsupported,
  constant_log_unsupported,
  constant_capability_missing,
  division_by_zero,
  indeterminate_pivot,
  indeterminate_sign,
  indeterminate_cube_membership,
  budget_exhausted,
  argument_not_bounded,
  constant_outside_domain,
  not_positive,
  not_positive_unit,
  invalid_split,
  emission_order,
  field_mismatch,
  syntax_error,
  bad_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(errc code, std::string message, std::size_t position)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  errc code() const { return code_; }

  // Offset into the source text for syntax errors, or the span of the
  // offending subexpression once the evaluator has annotated the error.
  std::size_t position() const { return position_; }
  bool has_position() const { return position_ != npos; }

  std::size_t span_begin = npos;
  std::size_t span_end = npos;

 private:
  errc code_;
  std::size_t position_ = npos;
};

[[noreturn]] inline void fail(errc code, std::string message) {
  throw Error(code, std::move(message));
}

}  // namespace tss

#endif  // TSS_ERROR_HPP
