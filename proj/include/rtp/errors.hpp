#pragma once

#include <stdexcept>
#include <string>

namespace rtp {

// Base class for all engine errors. Subclasses carry the failure kind in the
// type so callers can map them to exit codes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- parse errors ---
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};
struct UnknownVariable : SyntaxError {
    UnknownVariable(char var, std::size_t off)
        : SyntaxError(std::string("unknown variable '") + var + "'", off) {}
};
struct NegativeExponent : SyntaxError {
    explicit NegativeExponent(std::size_t off)
        : SyntaxError("negative exponent", off) {}
};

// --- algebra errors ---
struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial") {}
    explicit ZeroPolynomial(const std::string& ctx) : Error("zero polynomial: " + ctx) {}
};
struct ZeroVector : Error {
    ZeroVector() : Error("zero vector") {}
};
struct ParallelVectors : Error {
    ParallelVectors() : Error("parallel vectors") {}
};
struct InvalidFraction : Error {
    explicit InvalidFraction(const std::string& what) : Error(what) {}
};
struct NonCompactFace : Error {
    NonCompactFace() : Error("face is not compact") {}
};

// --- graph construction errors (mathematical obstructions) ---
struct NoIntegralWeight : Error {
    explicit NoIntegralWeight(const std::string& what) : Error(what) {}
};
struct NoPositiveRelation : Error {
    explicit NoPositiveRelation(const std::string& what) : Error(what) {}
};
struct NoStrictlyPositiveGenerator : Error {
    NoStrictlyPositiveGenerator() : Error("fan has no strictly positive generator") {}
};
struct DisconnectedResult : Error {
    DisconnectedResult() : Error("graph construction produced a disconnected result") {}
};

// --- resolution graph errors ---
struct NotNegativeDefinite : Error {
    NotNegativeDefinite() : Error("intersection matrix is not negative definite") {}
};
struct NotRational : Error {
    NotRational() : Error("graph is not rational") {}
};
struct UnsupportedContraction : Error {
    UnsupportedContraction() : Error("(-1)-vertex of valence >= 3 cannot be contracted") {}
};
struct NotATree : Error {
    NotATree() : Error("graph is not a tree") {}
};
struct NonSNC : Error {
    NonSNC() : Error("blow-down produced a surviving multi-edge") {}
};

// --- catalog errors ---
struct ParameterOutOfRange : Error {
    explicit ParameterOutOfRange(const std::string& what) : Error(what) {}
};
struct AmbiguousBranch : Error {
    explicit AmbiguousBranch(const std::string& what) : Error(what) {}
};
struct ZeroBorC : Error {
    ZeroBorC() : Error("Miranda data requires b != 0 and c != 0") {}
};

}  // namespace rtp
