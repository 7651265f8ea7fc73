#pragma once

#include <stdexcept>
#include <string>

namespace qschur {

// Computational errors carry a stable machine-readable code so the CLI can
// serialize them; the code names double as the error vocabulary of the tests.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error size_mismatch(const std::string& what) { return Error("SizeMismatch", what); }
inline Error denominator_vanishes(const std::string& what) { return Error("DenominatorVanishes", what); }
inline Error non_invertible_q(const std::string& what) { return Error("NonInvertibleQ", what); }
inline Error zero_divisor(const std::string& what) { return Error("ZeroDivisor", what); }
inline Error shift_out_of_range(const std::string& what) { return Error("ShiftOutOfRange", what); }
inline Error no_solution_at_bound(const std::string& what) { return Error("NoSolutionAtBound", what); }
inline Error forced_set_dependent(const std::string& what) { return Error("ForcedSetDependent", what); }
inline Error negative_multiplicity(const std::string& what) { return Error("NegativeMultiplicity", what); }
inline Error not_a_cleared(const std::string& what) { return Error("NotACleared", what); }
inline Error internal_error(const std::string& what) { return Error("InternalError", what); }
inline Error parse_error(const std::string& what) { return Error("ParseError", what); }

} // namespace qschur
