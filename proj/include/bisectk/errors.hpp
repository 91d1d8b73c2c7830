#pragma once

#include <stdexcept>
#include <string>

namespace bisectk {

// Malformed input: bad vertex ids, self-loops, unbalanced partitions, parse errors.
class input_error : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's precondition in a way input validation cannot express.
class contract_error : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

// The exhaustive oracle refused an instance larger than its vertex limit.
class oracle_limit_error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

// A kernel was produced but is too large for the exhaustive oracle.
class undecided_error : public oracle_limit_error {
public:
	using oracle_limit_error::oracle_limit_error;
};

} // namespace bisectk
