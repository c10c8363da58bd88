#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gersten/field.hpp"

namespace gersten {

/* Finite-support integer-graded vector space with a named, ordered basis. */
class GradedSpace {
public:
    GradedSpace() : field_(FieldSpec::rationals()) {}
    static GradedSpace make(FieldSpec f, std::vector<std::pair<std::string, int>> basis);

    const FieldSpec& field() const { return field_; }
    int dim() const { return (int)basis_.size(); }
    const std::string& label(int i) const { return basis_[i].first; }
    int degree(int i) const { return basis_[i].second; }
    const std::vector<std::pair<std::string, int>>& basis() const { return basis_; }

    int index_of(const std::string& label) const; // -1 when absent
    long dim_in_degree(int d) const;
    std::set<int> support() const;
    bool operator==(const GradedSpace&) const = default;

private:
    FieldSpec field_;
    std::vector<std::pair<std::string, int>> basis_;
    std::map<std::string, int> index_;
};

/* Degree d becomes d - n, so shift(v, 1) moves a degree-1 element to 0. */
GradedSpace shift(const GradedSpace& v, int n);

/* Finite truncation window for bigraded complexes. */
struct DegreeWindow {
    int p_min = 0, p_max = 0, q_min = 0, q_max = 0;
    static DegreeWindow make(int p_min, int p_max, int q_min, int q_max);
    bool contains(int p, int q) const {
        return p >= p_min && p <= p_max && q >= q_min && q <= q_max;
    }
};

/* Koszul sign of one transposition of adjacent blocks with the given total
 * degrees: (-1)^(deg_a * deg_b), which is 1 in characteristic 2. */
Scalar koszul_swap_sign(FieldSpec f, long deg_a, long deg_b);

/* Sign accumulated by an ordered sequence of adjacent block swaps;
 * swaps[i] = j means "swap blocks j and j+1" in the current arrangement. */
Scalar koszul_sign(FieldSpec f, std::vector<long> block_degrees, const std::vector<int>& swaps);

/* dim of the degree-q component of Hom(S_1 (x) ... (x) S_k, target). */
long hom_component_dim(const std::vector<const GradedSpace*>& sources,
                       const GradedSpace& target, int q);

/* Largest d with support contained in dZ; 0 encodes "every d" (support {0}
 * or empty), 1 means no sparsity. */
int sparsity_of(const std::set<int>& support);
int sparsity_of(const GradedSpace& v);

} // namespace gersten
