#pragma once

#include "inoue/intmat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace inoue {

// a x^2 + b xy + c y^2
struct BQForm {
    BigInt a, b, c;
    BigInt disc() const { return b * b - 4 * a * c; }
    std::string str() const;
    friend bool operator==(const BQForm&, const BQForm&) = default;
    friend bool operator<(const BQForm& x, const BQForm& y);
};

struct SimilarityClass {
    IMat representative;
    BigInt trace;
    int det = 1;
    std::vector<BQForm> cycle;         // SL-cycle of the representative's form
    std::vector<BQForm> mirror_cycle;  // cycle merged in by the improper involution (may equal cycle)
};

// (n21, n22 - n11, -n12); the form v -> det[v, N v].
BQForm associated_form(const IMat& N);
// Inverse of associated_form for a given trace.
IMat matrix_of_form(const BQForm& f, const BigInt& trace);

bool is_reduced(const BQForm& f);
// One step of the reduction operator; also returns the SL(2,Z) matrix M with f' = f o M.
BQForm rho(const BQForm& f, IMat* M = nullptr);
// Reduced forms properly equivalent to f, in rho order starting from the first reduced form reached.
std::vector<BQForm> reduction_cycle(const BQForm& f);
// Rotation of a cycle starting at its least element.
std::vector<BQForm> canonical_cycle(std::vector<BQForm> cycle);
// Improper involution realising conjugation by diag(1,-1): (a,b,c) -> (-a,b,-c).
BQForm mirror(const BQForm& f);

std::vector<SimilarityClass> similarity_classes(const BigInt& trace, int det, bool sl_only = false);

struct SimilarityVerdict {
    enum class Status { similar, not_similar, invariant_mismatch, inconclusive };
    Status status = Status::inconclusive;
    std::optional<IMat> conjugator;  // K with K N K^{-1} = N2
    std::string witness;
};

// max_steps caps the number of reduction steps taken to reach each cycle.
SimilarityVerdict are_similar(const IMat& N, const IMat& N2, long max_steps = 100000);

}  // namespace inoue
