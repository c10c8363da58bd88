#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gersten/graded.hpp"

namespace gersten {

/* Slot signature of a linear-endomorphism cochain component: mod_pos is the
 * 0-based position of the single module input, -1 for pure algebra
 * components. The output is a module slot exactly when mod_pos >= 0. */
struct SlotSig {
    int arity = 0;
    int mod_pos = -1;
    bool pure() const { return mod_pos < 0; }
    auto operator<=>(const SlotSig&) const = default;
};

/* Generic finite graded operad with explicit structure constants. Carried
 * arities are 0..max_arity(); compositions landing outside are rejected. */
class FiniteOperad {
public:
    /* comp key: (p, i, q) with 1 <= i <= p; value[(a,b)] = e_a o_i e_b as a
     * sparse combination in arity p+q-1. Absent entries are zero maps. */
    using CompTable = std::map<std::tuple<int, int, int>,
                               std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>>>;

    static FiniteOperad make(FieldSpec f, std::vector<GradedSpace> arity_spaces,
                             int unit_index, CompTable comp);

    const FieldSpec& field() const { return field_; }
    int max_arity() const { return (int)spaces_.size() - 1; }
    const GradedSpace& space(int arity) const;
    int unit_index() const { return unit_; }

    /* e_a o_i e_b, arities (p, q); empty when the entry is a zero map. */
    const std::vector<std::pair<int, Scalar>>& compose_basis(int p, int i, int q, int a, int b) const;

private:
    FieldSpec field_;
    std::vector<GradedSpace> spaces_;
    int unit_ = -1;
    CompTable comp_;

    void validate() const;
};

/* An operad the cochain calculus can run over. Endo and LinEndo handles hold
 * the underlying spaces; cochain tables over them are keyed by basis labels
 * of the *shifted* spaces, so suspended composition is plain Koszul-signed
 * composition of multilinear maps. */
class OperadHandle {
public:
    enum class Kind { Endo, LinEndo, Generic };

    static std::shared_ptr<const OperadHandle> endomorphism(GradedSpace v);
    static std::shared_ptr<const OperadHandle> linear_endomorphism(GradedSpace v, GradedSpace w);
    static std::shared_ptr<const OperadHandle> generic(FiniteOperad op);

    Kind kind() const { return kind_; }
    const FieldSpec& field() const { return field_; }
    const GradedSpace& alg_space() const { return A_; }
    const GradedSpace& mod_space() const { return M_; }
    const FiniteOperad& op() const { return op_; }

    /* shifted degrees: deg - 1 */
    int sdeg_alg(int i) const { return A_.degree(i) - 1; }
    int sdeg_mod(int i) const { return M_.degree(i) - 1; }

private:
    Kind kind_;
    FieldSpec field_;
    GradedSpace A_, M_;
    FiniteOperad op_;
};

using HandlePtr = std::shared_ptr<const OperadHandle>;

/* Basis functional of a hom-type cochain: input labels (indices into A, or
 * into M at mod_pos) and an output label. */
struct EKey {
    int mod_pos = -1;
    std::vector<int> in;
    int out = 0;
    auto operator<=>(const EKey&) const = default;
};

/* Bihomogeneous element of OC^{p,q} of the suspended operad. For Endo and
 * LinEndo handles the table holds the shifted-space multilinear map, entry
 * constraint sdeg(out) = sum sdeg(in) + (p+q-1). For Generic handles the
 * element lives in O(p)^q, keyed by basis index. */
class Cochain {
public:
    Cochain() = default;
    static Cochain zero(HandlePtr h, int p, int q);
    static Cochain from_table(HandlePtr h, int p, int q, std::map<EKey, Scalar> table);
    static Cochain from_generic(HandlePtr h, int p, int q, std::map<int, Scalar> coeffs);

    const HandlePtr& handle() const { return h_; }
    int arity() const { return p_; }
    int vdeg() const { return q_; }
    int total_deg() const { return p_ + q_; }
    bool is_zero() const { return tab_.empty() && gen_.empty(); }
    const std::map<EKey, Scalar>& table() const { return tab_; }
    const std::map<int, Scalar>& generic_coeffs() const { return gen_; }

    /* true when every component carries a module slot (lies in the canonical
     * LinEndo ideal); pure components make it false. Zero cochains count as
     * ideal elements. */
    bool is_ideal_element() const;
    /* true when no component carries a module slot. */
    bool is_pure() const;

    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(const Scalar& c) const;
    Cochain operator-() const;
    bool operator==(const Cochain& o) const;

    /* LinEndo helpers: split into the pure part and the ideal part. */
    Cochain pure_part() const;
    Cochain ideal_part() const;

    std::string str() const;

private:
    HandlePtr h_;
    int p_ = 0, q_ = 0;
    std::map<EKey, Scalar> tab_;
    std::map<int, Scalar> gen_;

    friend Cochain compose_at(const Cochain&, const Cochain&, int);
    void add_entry(const EKey& k, const Scalar& v);
    void add_generic(int idx, const Scalar& v);
};

/* Infinitesimal composition in the suspended operad, 1-based slot i.
 * Vertical degrees add; arity of the result is p_x + p_y - 1. */
Cochain compose_at(const Cochain& x, const Cochain& y, int i);

/* Identity cochains (bidegree (1,0)). */
Cochain identity_cochain(HandlePtr h);           // Endo: id_A; Generic: unit
Cochain id_alg_cochain(HandlePtr h);             // LinEndo: id_A (pure part of the unit)
Cochain id_mod_cochain(HandlePtr h);             // LinEndo: id_M (ideal part of the unit)

/* Elementary basis cochain for a single key / generic basis index. */
Cochain elementary_cochain(HandlePtr h, int p, int q, const EKey& k);
Cochain elementary_generic(HandlePtr h, int p, int q, int idx);

/* Ordered basis keys of the (p,q) component over an Endo/LinEndo handle:
 * pure keys first, then module keys by slot position, each lexicographic. */
enum class KeyFilter { All, Pure, Ideal };
std::vector<EKey> enumerate_keys(const OperadHandle& h, int p, int q, KeyFilter filt);

/* One structure-constant row of an (unshifted) multilinear map. */
struct MapRow {
    int mod_pos = -1;
    std::vector<int> in;
    int out = 0;
    Scalar coef;
};

/* Conjugation by the shift: turns the table of a degree-(2-n)-style
 * multilinear map on the plain spaces into the cochain on the shifted
 * spaces, inserting the Koszul signs of (shift^-1)^(x)n, and back. All rows
 * must share one internal degree q; the cochain has bidegree (arity, q). */
Cochain suspend_multilinear(HandlePtr h, int arity, const std::vector<MapRow>& rows);
std::vector<MapRow> desuspend_multilinear(const Cochain& x);

/* Operadic ideal. LinEndoCanonical is E*(V,W) inside E(V,W); Whole is the
 * improper ideal; GenericSub selects a coordinate sub-basis per arity. */
struct OperadIdeal {
    enum class Kind { LinEndoCanonical, Whole, GenericSub };
    Kind kind;
    HandlePtr parent;
    std::vector<std::vector<int>> selector; // GenericSub: indices per arity

    static OperadIdeal linendo_canonical(HandlePtr h);
    static OperadIdeal whole(HandlePtr h);
    static OperadIdeal generic_sub(HandlePtr h, std::vector<std::vector<int>> selector);

    bool contains(const Cochain& x) const;
};

struct IdealWitness {
    Cochain x0, x1, x2;
    Cochain value; // the nonzero brace
};

/* Exhaustive check of the associative-ideal condition over elementary basis
 * cochains with brace argument counts n = 2, 3, arities up to max_arity. */
struct AssociativityCheck {
    bool associative;
    std::optional<IdealWitness> witness;
};
AssociativityCheck is_associative_ideal(const OperadIdeal& ideal, int max_arity);

} // namespace gersten
