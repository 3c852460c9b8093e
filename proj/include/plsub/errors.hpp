#ifndef PLSUB_ERRORS_HPP
#define PLSUB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plsub {

// Base for all recoverable errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotATree : Error {
    explicit NotATree(const std::string& w) : Error(w) {}
};
struct Unbalanced : Error {
    explicit Unbalanced(const std::string& w) : Error(w) {}
};
struct EulerViolation : Error {
    explicit EulerViolation(const std::string& w) : Error(w) {}
};
struct EmptyPart : Error {
    explicit EmptyPart(const std::string& w) : Error(w) {}
};
struct Overlap : Error {
    explicit Overlap(const std::string& w) : Error(w) {}
};
struct TooLargeForExhaustive : Error {
    explicit TooLargeForExhaustive(const std::string& w) : Error(w) {}
};
struct BadPartition : Error {
    explicit BadPartition(const std::string& w) : Error(w) {}
};
struct CleaningOverflow : Error {
    explicit CleaningOverflow(const std::string& w) : Error(w) {}
};
struct OutOfRange : Error {
    explicit OutOfRange(const std::string& w) : Error(w) {}
};
struct TriangleNotFound : Error {
    explicit TriangleNotFound(const std::string& w) : Error(w) {}
};
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& w) : Error(w) {}
};
struct NoSwapAvailable : Error {
    explicit NoSwapAvailable(const std::string& w) : Error(w) {}
};
struct OutOfHostPairs : Error {
    explicit OutOfHostPairs(const std::string& w) : Error(w) {}
};
struct NotABag : Error {
    explicit NotABag(const std::string& w) : Error(w) {}
};
struct BadPermutation : Error {
    explicit BadPermutation(const std::string& w) : Error(w) {}
};
struct UnassignableVertex : Error {
    int vertex;
    int good_bag_count;
    UnassignableVertex(const std::string& w, int v, int good)
        : Error(w), vertex(v), good_bag_count(good) {}
};
struct PairingImpossible : Error {
    explicit PairingImpossible(const std::string& w) : Error(w) {}
};
struct BadOrder : Error {
    explicit BadOrder(const std::string& w) : Error(w) {}
};
struct EmbedFailed : Error {
    int restarts_used = 0;
    long placements_tried = 0;
    EmbedFailed(const std::string& w, int restarts, long placements)
        : Error(w), restarts_used(restarts), placements_tried(placements) {}
};
struct PartitionPoor : Error {
    explicit PartitionPoor(const std::string& w) : Error(w) {}
};
struct BudgetExhausted : Error {
    long best_lower_bound;
    BudgetExhausted(const std::string& w, long best) : Error(w), best_lower_bound(best) {}
};
struct InputError : Error {
    explicit InputError(const std::string& w) : Error(w) {}
};

}  // namespace plsub

#endif
