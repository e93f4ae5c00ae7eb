#pragma once

#include "arqkit/diagrams.hpp"
#include "arqkit/int_matrix.hpp"
#include "arqkit/quiver.hpp"
#include "arqkit/translation_quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arqkit {

struct CoxeterPair {
    IntMatrix c;
    IntMatrix c_inv;
};

/// Columns of P are p_j (paths starting at j); columns of I are i_j (paths ending at j).
IntMatrix projective_dims(const Quiver& q);
IntMatrix injective_dims(const Quiver& q);

/// C with C i_j = -p_j, and its inverse with C^-1 p_j = -i_j.
CoxeterPair coxeter(const Quiver& q);

/// C^-1 from path counts alone.
IntMatrix inverse_coxeter_combinatorial(const Quiver& q);
/// C from path counts alone.
IntMatrix coxeter_combinatorial(const Quiver& q);

enum class Direction { Left, Right };

/// Column j holds the coordinates of tau(X_j) (or tau^-1 for Right) in the basis sigma.
IntMatrix translation_matrix(const TranslationQuiver& window, const std::vector<int>& sigma,
                             Direction dir = Direction::Left);

struct NegativeUnit {
    unsigned long long k = 0;
    std::size_t j = 0; // 1-based
    std::size_t l = 0; // 1-based
};

/// First (k, j, l), ordered by k then j, with M^k e_j = -e_l.
std::optional<NegativeUnit> check_no_negative_unit(const IntMatrix& m, unsigned long long k_max = 60);

struct DefectData {
    unsigned d = 0;
    IntVec h;
    IntVec partial;
};

DefectData defect(const Quiver& q, unsigned d_max = 64);

/// The quiver carried by sigma: its vertices with the window arrows between them.
Quiver sigma_quiver(const TranslationQuiver& window, const std::vector<int>& sigma);

/// Lengths of tau(X_j) minus C^-1 m, where C is the Coxeter matrix of the quiver of sigma.
IntVec tau_coxeter_residual(const TranslationQuiver& window, const std::vector<int>& sigma, const IntVec& m);

/// Coefficients c with sum_j c_j i_j = v over the injective dimension vectors of q; nullopt if not integral.
std::optional<IntVec> decompose_injective(const Quiver& q, const IntVec& v);

struct Slice {
    TranslationQuiver window;
    std::vector<int> sigma;
};

/// Slice of ZB for Dynkin B in the orientation whose translation matrix is the classical M_n.
Slice dynkin_slice(const DiagramType& t);

struct IdentityCheck {
    std::string statement;
    bool pass = false;
};

/// Matrix identities for a family name such as "A5", "D6" or "E8".
std::vector<IdentityCheck> identity_checks(const std::string& family);

DiagramType parse_family(const std::string& family);

} // namespace arqkit
