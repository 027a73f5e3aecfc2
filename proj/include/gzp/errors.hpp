#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gzp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Graph construction / input validation failures.
class ValidationError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public ValidationError {
public:
    explicit SelfLoopError(int u)
        : ValidationError("self-loop at vertex " + std::to_string(u)), vertex(u) {}
    int vertex;
};

class DuplicateEdgeError : public ValidationError {
public:
    DuplicateEdgeError(int u, int v)
        : ValidationError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          from(u), to(v) {}
    int from;
    int to;
};

class ZeroWeightError : public ValidationError {
public:
    ZeroWeightError(int u, int v)
        : ValidationError("zero weight on edge (" + std::to_string(u) + ", " + std::to_string(v) + ")"),
          from(u), to(v) {}
    int from;
    int to;
};

/// Cycle found while validating a DAG; carries one explicit cycle as witness.
class CycleError : public ValidationError {
public:
    explicit CycleError(std::vector<int> witness)
        : ValidationError(describe(witness)), cycle(std::move(witness)) {}
    std::vector<int> cycle;

private:
    static std::string describe(const std::vector<int>& w) {
        std::string s = "cycle detected:";
        for (int v : w) s += " " + std::to_string(v);
        return s;
    }
};

class LengthMismatchError : public Error {
public:
    LengthMismatchError(std::size_t expected, std::size_t got)
        : Error("signal length mismatch: expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

class NotConnectedError : public Error {
public:
    NotConnectedError() : Error("graph is not a connected DAG (no Hamiltonian path)") {}
};

/// Matrix rejected as (near-)defective by the eigendecomposition acceptance rule.
class NotDiagonalizableError : public Error {
public:
    NotDiagonalizableError(double gap, double cond)
        : Error("matrix is not (reliably) diagonalizable: min eigenvalue gap " +
                std::to_string(gap) + ", eigenvector condition estimate " + std::to_string(cond)),
          min_gap(gap), cond_estimate(cond) {}
    double min_gap;
    double cond_estimate;
};

class DegenerateSpectrumError : public Error {
public:
    DegenerateSpectrumError() : Error("all eigenvalues are zero; total variation undefined") {}
};

class NonExactEntriesError : public Error {
public:
    NonExactEntriesError()
        : Error("matrix entries are not exactly representable integers") {}
};

class OrderExceedsPaddingError : public Error {
public:
    OrderExceedsPaddingError(int order, int pad)
        : Error("filter order " + std::to_string(order) + " exceeds zero-padding M=" +
                std::to_string(pad) + "; output would alias"),
          order(order), pad(pad) {}
    int order;
    int pad;
};

class TooLargeError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

} // namespace gzp
