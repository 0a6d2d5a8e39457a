#pragma once

#include "inoue/intmat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace inoue {

// P(X) = X^3 - theta2 X^2 + theta1 X - 1
struct CubicInput {
    BigInt theta2;
    BigInt theta1;
};

struct CubicDiagnosis {
    bool admissible = false;
    BigInt disc;
    BigInt p_at_1;
    bool has_rational_root = false;
    std::string reason;
};

BigInt cubic_disc(const BigInt& theta2, const BigInt& theta1);
CubicDiagnosis admissible_cubic(const BigInt& theta2, const BigInt& theta1);

// Multiplication by alpha on Z[alpha] in the basis (1, alpha, alpha^2).
IMat companion_matrix(const CubicInput& P);
// Multiplication by y0 + y1 alpha + y2 alpha^2.
IMat mult_matrix(const CubicInput& P, const BigInt& y0, const BigInt& y1, const BigInt& y2);

struct OrderIdeal {
    IMat hnf;    // 3x3 upper-triangular column Hermite basis
    BigInt norm; // index in Z[alpha]
    friend bool operator==(const OrderIdeal& x, const OrderIdeal& y) { return x.hnf == y.hnf; }
};

bool is_alpha_stable(const CubicInput& P, const IMat& hnf);

// All alpha-stable full sublattices of index <= bound, ordered by (index, basis).
std::vector<OrderIdeal> enumerate_ideals(const CubicInput& P, long bound);

// (J : I) = (1/den) * L(basis)
struct ColonLattice {
    IMat basis;
    BigInt den;
};
ColonLattice colon_lattice(const CubicInput& P, const OrderIdeal& J, const OrderIdeal& I);

enum class EquivalenceVerdict { equivalent, inequivalent_proven, inequivalent_search };

struct EquivalenceResult {
    EquivalenceVerdict verdict = EquivalenceVerdict::inequivalent_search;
    // lambda = (y0 + y1 alpha + y2 alpha^2) / den with lambda I = J
    std::array<BigInt, 3> y{};
    BigInt den = 1;
};

EquivalenceResult ideals_equivalent(const CubicInput& P, const OrderIdeal& I, const OrderIdeal& J, long height = 50);

struct IdealClassResult {
    long h = 0;
    long bound = 0;
    long doubled_h = 0;
    bool stable = false;
    long height = 50;
    std::vector<OrderIdeal> representatives;
    std::vector<OrderIdeal> ideals;
    std::vector<long> class_of;
    long unproven_separations = 0;
};

long default_norm_bound(const BigInt& disc);

// Classes among ideals of index <= bound (no stability pass).
IdealClassResult ideal_classes_at(const CubicInput& P, long bound, long height = 50);
IdealClassResult ideal_classes(const BigInt& theta2, const BigInt& theta1, std::optional<long> norm_bound = {},
                               long height = 50);

struct TypeIClass {
    OrderIdeal ideal;
    std::string label;  // "beta" or "beta_bar"
    long ideal_class = 0;
};

struct TypeIReport {
    BigInt theta2, theta1;
    bool admissible = false;
    BigInt disc;
    long h = 0;
    long bound = 0;
    bool stable = false;
    long biholo_count = 0;
    std::vector<TypeIClass> classes;
};

TypeIReport classify_type1(const BigInt& theta2, const BigInt& theta1, std::optional<long> norm_bound = {});

// [disc(P)/disc(P')]^{1/2}, after confirming both polynomials define the same field.
BigRat order_index_ratio(const CubicInput& P, const CubicInput& P2);

}  // namespace inoue
