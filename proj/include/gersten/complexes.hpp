#pragma once

#include <functional>
#include <optional>

#include "gersten/braces.hpp"
#include "gersten/linalg.hpp"

namespace gersten {

enum class CxKind { OperadCx, IdealCx, HochschildCx, BimoduleCx, BimoduleHochschildCx };

/* Ordered component basis at one bidegree: hom-type keys or generic operad
 * basis indices. */
struct ComponentBasis {
    std::vector<EKey> keys;
    std::vector<int> gen;
    int dim() const { return (int)(keys.size() + gen.size()); }
};

/* Canonical cohomology basis at one bidegree: representatives are rows of
 * the RREF of (image + cocycles) whose pivots avoid the image pivots. */
struct CohBasis {
    int comp_dim = 0;
    Echelon image;            // row space of the incoming differential
    std::vector<Vec> reps;    // canonical cocycle representatives
    std::vector<int> rep_pivots;
    FieldSpec field;

    long dim() const { return (long)reps.size(); }
    /* coefficients of a cocycle vector in this basis (reduce modulo the
     * image); nullopt when the vector is not a cocycle of the span */
    std::optional<Vec> express(const Vec& cocycle) const;
};

/* A bigraded complex assembled over a finite window. The ideal-type kinds
 * (IdealCx, BimoduleCx) reindex arities down by one: window (p,q) holds the
 * arity-(p+1) ideal cochains. The differential is [m2, -] throughout. */
class ComplexWindow {
public:
    static ComplexWindow assemble(CxKind kind, HandlePtr h, const Multiplication& m2,
                                  DegreeWindow win,
                                  std::optional<OperadIdeal> ideal = std::nullopt);

    CxKind kind() const { return kind_; }
    const HandlePtr& handle() const { return h_; }
    const Cochain& m2() const { return m2_.m2; }
    const DegreeWindow& window() const { return win_; }
    /* horizontal offset between window degree and cochain arity */
    int arity_offset() const { return shifted_ ? 1 : 0; }

    const ComponentBasis& basis(int p, int q) const;
    long component_dim(int p, int q) const { return basis(p, q).dim(); }
    bool has_diff(int p, int q) const;
    const SparseMatrix& diff(int p, int q) const;

    /* cohomology is only answered at bidegrees with both differentials
     * inside the window; edges report "partial" as nullopt */
    bool interior(int p, int q) const;
    std::optional<long> cohomology_dim(int p, int q) const;

    /* coordinates of a cochain in the component basis and back */
    Vec coords(const Cochain& x, int p, int q) const;
    Cochain from_coords(int p, int q, const Vec& v) const;
    /* window bidegree of a cochain that lives in this complex */
    std::pair<int, int> locate(const Cochain& x) const;

    Cochain apply_d(const Cochain& x) const;
    bool is_cocycle(const Cochain& x) const;
    /* deterministic primitive with d(c) = x, or nullopt; throws on
     * non-cocycle input or when the needed differential is outside the
     * window */
    std::optional<Cochain> is_coboundary(const Cochain& x) const;

    const CohBasis& coh_basis(int p, int q) const;

private:
    CxKind kind_;
    bool shifted_ = false;
    HandlePtr h_;
    Multiplication m2_{Cochain()};
    std::optional<OperadIdeal> ideal_;
    DegreeWindow win_;
    std::map<std::pair<int, int>, ComponentBasis> bases_;
    std::map<std::pair<int, int>, std::map<EKey, int>> key_index_;
    std::map<std::pair<int, int>, std::map<int, int>> gen_index_;
    std::map<std::pair<int, int>, SparseMatrix> diff_;
    mutable std::map<std::pair<int, int>, CohBasis> coh_cache_;

    ComplexWindow() = default;
    void build_basis(int p, int q);
};

/* A cohomology class: window, bidegree, certified cocycle representative. */
struct CohomologyClass {
    const ComplexWindow* cx = nullptr;
    int p = 0, q = 0;
    Cochain rep;
};

CohomologyClass make_class(const ComplexWindow& cx, const Cochain& rep);
bool class_is_zero(const CohomologyClass& a);
bool class_equal(const CohomologyClass& a, const CohomologyClass& b);

/* The three complexes of an algebra-bimodule pair over one window, plus the
 * cochains every computation needs. HC is assembled over Endo(A); BC and
 * HCE share the LinEndo(A,M) handle. */
struct BimodulePair {
    GradedSpace A, M;
    HandlePtr endo, linendo;
    Cochain m2_alg_endo;  // multiplication over Endo(A)
    Cochain m2_total;     // m2^A + m2^M over LinEndo(A,M)
    Cochain idM;          // identity of M, an ideal cochain
    ComplexWindow HC, BC, HCE;
};

/* Validates associativity and the bimodule axioms (the single equation
 * m2{m2} = 0 over E(A,M)); reports the offending entry on failure. */
BimodulePair assemble_bimodule_complexes(const GradedSpace& A, const GradedSpace& M,
                                         const Cochain& m2_total, DegreeWindow win);

/* Pure cochains transfer between the Endo(A) and LinEndo(A,M) pictures. */
Cochain embed_pure(const BimodulePair& pr, const Cochain& hc_cochain);
Cochain project_pure(const BimodulePair& pr, const Cochain& hce_cochain);

/* delta(a) = id_M . a - a . id_M, landing in the bimodule complex. */
CohomologyClass connecting_delta(const BimodulePair& pr, const CohomologyClass& a);

/* Matrix of a cochain-level map on cohomology bases; certifies that the map
 * sends cocycles to cocycles and coboundaries to coboundaries. */
SparseMatrix induced_map(const ComplexWindow& src, int sp, int sq, const ComplexWindow& dst,
                         int dp, int dq, const std::function<Cochain(const Cochain&)>& F);

struct LesNode {
    int p, q;
    long dim_ext_in = 0, dim_hhe = 0, dim_hh = 0, dim_ext_out = 0;
    bool exact_at_hhe = false, exact_at_hh = false, exact_at_ext = false;
};

struct LesReport {
    std::vector<LesNode> nodes;
    bool exact = true;
};

/* Checks im = ker at every interior node of
 *   Ext^{p-1,q} -> HHE^{p,q} -> HH^{p,q} -> Ext^{p,q} -> HHE^{p+1,q}. */
LesReport les_exactness_audit(const BimodulePair& pr);

} // namespace gersten
