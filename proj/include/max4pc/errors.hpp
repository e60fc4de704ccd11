#pragma once

#include <stdexcept>
#include <string>

namespace max4pc {

// Input-layer failures (tree parsing).
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};
struct NotATree : std::runtime_error {
    explicit NotATree(const std::string& what) : std::runtime_error(what) {}
};
struct LabelOutOfRange : std::out_of_range {
    explicit LabelOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

// Pair-matrix failures.
struct UnknownPair : std::out_of_range {
    explicit UnknownPair(const std::string& what) : std::out_of_range(what) {}
};
struct OverflowGuard : std::overflow_error {
    explicit OverflowGuard(const std::string& what) : std::overflow_error(what) {}
};

// Exact-kernel contract violations.
struct NotSquare : std::invalid_argument {
    explicit NotSquare(const std::string& what) : std::invalid_argument(what) {}
};
struct NotSymmetric : std::invalid_argument {
    explicit NotSymmetric(const std::string& what) : std::invalid_argument(what) {}
};

// Basis-builder preconditions.
struct TooSmall : std::invalid_argument {
    explicit TooSmall(const std::string& what) : std::invalid_argument(what) {}
};
struct NotAStar : std::invalid_argument {
    explicit NotAStar(const std::string& what) : std::invalid_argument(what) {}
};
struct IsAStar : std::invalid_argument {
    explicit IsAStar(const std::string& what) : std::invalid_argument(what) {}
};
struct NotALeaf : std::invalid_argument {
    explicit NotALeaf(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace max4pc
