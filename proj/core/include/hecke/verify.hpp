// Self-verification: relation checks, identity batteries, decomposition
// oracles and randomized suites, with machine-readable reports.

#pragma once

#include "hecke/element.hpp"
#include "hecke/inductive.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

struct Violation {
    std::string description;
    std::string inputs;  // JSON fragment describing the inputs
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    int m = 0;
    int n = 0;
    std::uint64_t seed = 0;
    long checks = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_json() const;
    void merge(const Report& other);
};

// The six defining relation families, checked through the kernel.
Report check_relations(int m, int n);

// Basis census: canonical monomial count equals m^n * n!, canonical-form
// invariants hold on random products.
Report dimension_check(int m, int n, std::uint64_t seed, int samples);

// Independent decomposition oracle: exact sparse linear solve of x against
// the label-times-basis matrix. The matrix is verified unitriangular with
// respect to a degree-dominance order when the table is built (cached per
// (m, N, family)); any structural failure throws instead of guessing.
Decomposition oracle_decompose(const Element& x, LabelFamily family);

// Named suites: relations, lemmas-2, inductive, tr-rules, tr-symmetry,
// Tr-rules, Tr-symmetry, specializations, all.
std::vector<std::string> suite_names();
Report run_suite(const std::string& suite, int m, int n, std::uint64_t seed);

}  // namespace hecke
