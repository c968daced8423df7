#ifndef SOLBRACE_ERRORS_HPP
#define SOLBRACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace solbrace {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- multiplication table validation ----

struct NotAssociative : Error {
    int a, b, c;
    NotAssociative(int a_, int b_, int c_)
        : Error("table not associative at (" + std::to_string(a_) + ", " +
                std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

struct NoIdentity : Error {
    NoIdentity() : Error("table has no two-sided identity") {}
};

struct NoInverse : Error {
    int element;
    explicit NoInverse(int e)
        : Error("element " + std::to_string(e) + " has no inverse"), element(e) {}
};

struct NotLatinSquare : Error {
    int row, col;
    NotLatinSquare(int r, int c)
        : Error("table is not a Latin square, duplicate in row " +
                std::to_string(r) + " at column " + std::to_string(c)),
          row(r), col(c) {}
};

struct NotNormal : Error {
    int conjugator, member;
    NotNormal(int g, int h)
        : Error("subgroup not normal: conjugating member " + std::to_string(h) +
                " by " + std::to_string(g) + " leaves the subgroup"),
          conjugator(g), member(h) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what_) : Error(what_) {}
};

// ---- soluble structure ----

struct NotSoluble : Error {
    explicit NotSoluble(const std::string& which)
        : Error("group is not soluble: " + which) {}
};

struct NotFound : Error {
    explicit NotFound(const std::string& what_) : Error(what_) {}
};

struct SylowClassTooBig : Error {
    int prime;
    explicit SylowClassTooBig(int p)
        : Error("Sylow " + std::to_string(p) +
                "-subgroup has nilpotency class above 2"),
          prime(p) {}
};

// ---- brace validation ----

struct IdentityMismatch : Error {
    int add_identity, mul_identity;
    IdentityMismatch(int ai, int mi)
        : Error("additive identity " + std::to_string(ai) +
                " differs from multiplicative identity " + std::to_string(mi)),
          add_identity(ai), mul_identity(mi) {}
};

struct CompatibilityFailure : Error {
    int a, b, c;
    CompatibilityFailure(int a_, int b_, int c_)
        : Error("brace law fails at (" + std::to_string(a_) + ", " +
                std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_), b(b_), c(c_) {}
};

// ---- constructors ----

struct NotClassTwo : Error {
    explicit NotClassTwo(const std::string& which)
        : Error("nilpotency class above 2: " + which) {}
};

struct EvenCommutator : Error {
    int a, b;
    EvenCommutator(int a_, int b_)
        : Error("commutator of (" + std::to_string(a_) + ", " +
                std::to_string(b_) + ") has even order, no square root"),
          a(a_), b(b_) {}
};

struct HypothesisFailure : Error {
    std::string which;
    std::string witness;
    HypothesisFailure(const std::string& which_, const std::string& witness_)
        : Error("hypothesis failed: " + which_ +
                (witness_.empty() ? "" : " (witness " + witness_ + ")")),
          which(which_), witness(witness_) {}
};

struct NotWellDefined : Error {
    explicit NotWellDefined(const std::string& witness)
        : Error("sum depends on the chosen factorisation: " + witness) {}
};

struct ConditionFailure : Error {
    int factor;     // 1-based factor index
    int condition;  // which numbered assembly condition failed
    std::string witness;
    ConditionFailure(int factor_, int condition_, const std::string& witness_)
        : Error("assembly condition (" + std::to_string(condition_) +
                ") fails at factor " + std::to_string(factor_) +
                (witness_.empty() ? "" : ": " + witness_)),
          factor(factor_), condition(condition_), witness(witness_) {}
};

struct NoSylowTower : Error {
    NoSylowTower() : Error("no Sylow tower ordering exists") {}
};

// ---- input handling ----

struct ParseError : Error {
    explicit ParseError(const std::string& what_)
        : Error("parse error: " + what_) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name)
        : Error("unknown catalog name: " + name) {}
};

struct Unsupported : Error {
    explicit Unsupported(const std::string& why) : Error(why) {}
};

}  // namespace solbrace

#endif
