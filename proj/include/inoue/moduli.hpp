#pragma once

#include "inoue/centralizer.hpp"
#include "inoue/conjugacy.hpp"
#include "inoue/intmat.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace inoue {

enum class Kind { plus, minus };  // type II (det N = 1) / type III (det N = -1)

struct AdmissibleAlpha {
    BigInt theta;
    Kind kind = Kind::plus;
    QuadElem alpha;
    QuadElem alpha_conj;  // alpha^{-1} (plus) or -alpha^{-1} (minus)
    long d = 2;           // radicand
    BigRat scale;         // alpha = theta/2 + scale * sqrt(d)
};

using QVec2 = std::array<QuadElem, 2>;

struct EigenPair {
    QVec2 a;
    QVec2 b;
    QuadElem wedge_ba;  // b^a = b1 a2 - b2 a1
    // Scale used by the compatibility condition: b^a for type II, a^b for type III.
    QuadElem wedge;
};

// Everything needed to evaluate compatibility formulas for one (N, r).
struct CompatContext {
    AdmissibleAlpha alpha;
    IMat N;
    EigenPair ep;
    BigInt r;
};

enum class Component { C, Cstar };

struct OrbitRecord {
    std::vector<IVec2> representatives;
    std::optional<Component> component;  // type II only
};

struct ClassEntry {
    IMat N;
    CentralizerGen gen;
    std::vector<BigInt> divisors;  // elementary divisors of (I -+ N | r I)
    BigInt quotient_order;
    long action_period = 1;
    std::vector<OrbitRecord> orbits;
};

struct ClassReport {
    BigInt theta;
    BigInt r;
    Kind kind = Kind::plus;
    std::vector<ClassEntry> classes;
    BigInt total_orbits() const;
};

const char* kind_name(Kind k);
const char* component_name(Component c);
std::string component_description(Component c);

AdmissibleAlpha admissible_alpha(const BigInt& theta, Kind kind);
EigenPair canonical_eigenpair(const IMat& N, const AdmissibleAlpha& alpha);
CompatContext make_context(const IMat& N, const BigInt& r, Kind kind);

// I - N (plus) or I + N (minus).
IMat shifted_matrix(const IMat& N, Kind kind);

QVec2 compat_c_from_p(const CompatContext& ctx, const IVec2& p);
IVec2 compat_p_from_c(const CompatContext& ctx, const QVec2& c);
bool is_compatible(const CompatContext& ctx, const QVec2& c);

// c + (wedge / r) (I -+ N)^{-1} s
QVec2 shift_c(const CompatContext& ctx, const QVec2& c, const IVec2& s);

QVec2 k_dot_c(const CompatContext& ctx, const QVec2& c, const IVec2& k);
// Real part of k ._c t (the imaginary part of t is unchanged). Type II only.
QuadElem k_dot_t(const CompatContext& ctx, const QVec2& c, const QuadElem& t, const IVec2& k);

// Small helpers shared with the group-theoretic checks.
QuadElem dot(const IVec2& k, const QVec2& v);
QVec2 mat_vec(const IMat& A, const QVec2& v);

IVec2 star_action(const IMat& K, const IVec2& p, const FiniteQuotient& Q);
long action_period(const IMat& K, const FiniteQuotient& Q);
Component component_type(const IMat& N, const BigInt& r, const OrbitRecord& orbit, const CentralizerGen& gen,
                         const FiniteQuotient& Q);

ClassReport classify(const BigInt& theta, const BigInt& r, Kind kind);

}  // namespace inoue
