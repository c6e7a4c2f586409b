#ifndef QUATLIN_AUTOS_HPP
#define QUATLIN_AUTOS_HPP

#include "quatlin/operator4.hpp"
#include "quatlin/quaternion.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatlin {

// Catalog of (anti)linear automorphisms of H. All matrices are exact and
// every linear entry is inner with a rational conjugator.

/// A1: fixes 1, cycles i -> j -> k -> i.
Operator4 cyclic_op();
/// A1 composed with itself: i -> k, j -> i, k -> j.
Operator4 cyclic_sq_op();
/// A2: quarter turn about i (j -> k, k -> -j).
Operator4 rot_i_op();
/// A3: quarter turn about j (k -> i, i -> -k).
Operator4 rot_j_op();
/// Quarter turn about k (i -> j, j -> -i). Not a catalog entry.
Operator4 rot_k_op();
/// I: quaternion conjugation, diag(1, -1, -1, -1).
Operator4 conj_op();
/// I1 = A1 o I, I2 = A1^2 o I. Throws std::out_of_range unless k is 1 or 2.
Operator4 anti_op(int k);

/// x -> q x q^-1. Invariant under nonzero rational rescaling of q.
/// Throws ZeroQuaternion for q = 0.
Operator4 conjugation_by(const Quaternion& q);

enum class AutoTag { LinearAutomorphism, AntilinearAutomorphism, Neither };

struct AutoKind {
    AutoTag tag = AutoTag::Neither;
    /// Which law failed and on what input; empty unless tag is Neither.
    std::string reason;
};

std::string_view to_string(AutoTag tag);

struct CoordinateCheck {
    bool ok = false;
    /// First violated condition, empty when ok.
    std::string failure;
};

/// Closed-form automorphism conditions on the matrix: f(1) = 1, the first row
/// vanishes off the corner, and the lower-right 3x3 block Q is a rotation
/// (Q^T Q = I, det Q = 1).
CoordinateCheck check_coordinate_conditions(const Operator4& f);

/// Decides between linear automorphism (f(ab) = f(a) f(b)), antilinear
/// automorphism (f(ab) = f(b) f(a)) and neither, using all 16 ordered basis
/// pairs, f(1) = 1 and det f != 0.
AutoKind classify(const Operator4& f);

/// Nonzero q with conjugation_by(q) = f. Scale-free; stored as a primitive
/// integer vector whose first nonzero component is positive.
struct Conjugator {
    Quaternion q;
};

/// Throws NotAnAutomorphism unless classify(f) is LinearAutomorphism.
Conjugator recover_conjugator(const Operator4& f);

/// True iff a = c * b for some nonzero rational c (both nonzero).
bool collinear(const Quaternion& a, const Quaternion& b);

/// Smallest n in 1..max_order with f^n = identity.
std::optional<int> operator_order(const Operator4& f, int max_order = 24);

/// Stable catalog names: id, A1, A2, A3, I, I1, I2.
const std::vector<std::string>& catalog_names();
/// Throws UnknownName for anything outside catalog_names().
Operator4 catalog_op(std::string_view name);

} // namespace quatlin

#endif
