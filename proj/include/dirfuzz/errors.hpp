#ifndef DIRFUZZ_ERRORS_HPP
#define DIRFUZZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dirfuzz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based.
struct ParseError : Error {
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

// A documented operation precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

// Some (state, letter) pair has empty support; carries the witness.
struct IncompleteError : PreconditionError {
    IncompleteError(const std::string& state_, const std::string& letter_)
        : PreconditionError("automaton is not complete: state '" + state_ +
                            "' has no transition on letter '" + letter_ + "'"),
          state(state_), letter(letter_) {}
    std::string state;
    std::string letter;
};

// A state subset is not closed under the transition supports.
struct NotClosedError : PreconditionError {
    NotClosedError(const std::string& state_, const std::string& letter_,
                   const std::string& escaped_)
        : PreconditionError("subset is not closed: '" + state_ + "' reaches '" +
                            escaped_ + "' on letter '" + letter_ + "'"),
          state(state_), letter(letter_), escaped(escaped_) {}
    std::string state;
    std::string letter;
    std::string escaped;
};

// A partition fails the congruence condition; carries a witness
// (two related states, a letter, and the block whose row maxima differ).
struct NotCongruenceError : PreconditionError {
    NotCongruenceError(const std::string& a_, const std::string& a2_,
                       const std::string& letter_, const std::string& block_)
        : PreconditionError("not a congruence: states '" + a_ + "' and '" + a2_ +
                            "' have different row maxima on letter '" + letter_ +
                            "' into block " + block_),
          a(a_), a2(a2_), letter(letter_), block(block_) {}
    std::string a;
    std::string a2;
    std::string letter;
    std::string block;
};

struct AlphabetMismatchError : PreconditionError {
    AlphabetMismatchError() : PreconditionError("automata have different alphabets") {}
};

// Brute-force enumeration would exceed the configured word budget.
struct BudgetExceededError : Error {
    using Error::Error;
};

}  // namespace dirfuzz

#endif
