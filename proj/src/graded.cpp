#include "gersten/graded.hpp"

#include <numeric>

namespace gersten {

GradedSpace GradedSpace::make(FieldSpec f, std::vector<std::pair<std::string, int>> basis) {
    GradedSpace v;
    v.field_ = f;
    v.basis_ = std::move(basis);
    for (int i = 0; i < (int)v.basis_.size(); ++i) {
        const auto& lab = v.basis_[i].first;
        if (lab.empty()) throw input_error("empty basis label");
        if (!v.index_.emplace(lab, i).second)
            throw input_error("duplicate basis label '" + lab + "'");
    }
    return v;
}

int GradedSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : it->second;
}

long GradedSpace::dim_in_degree(int d) const {
    long n = 0;
    for (const auto& [lab, deg] : basis_)
        if (deg == d) ++n;
    return n;
}

std::set<int> GradedSpace::support() const {
    std::set<int> s;
    for (const auto& [lab, deg] : basis_) s.insert(deg);
    return s;
}

GradedSpace shift(const GradedSpace& v, int n) {
    std::vector<std::pair<std::string, int>> b = v.basis();
    for (auto& [lab, deg] : b) deg -= n;
    return GradedSpace::make(v.field(), std::move(b));
}

DegreeWindow DegreeWindow::make(int p_min, int p_max, int q_min, int q_max) {
    if (p_min < 0) throw input_error("window: p_min must be >= 0");
    if (p_min > p_max || q_min > q_max) throw input_error("window: empty range");
    return DegreeWindow{p_min, p_max, q_min, q_max};
}

Scalar koszul_swap_sign(FieldSpec f, long deg_a, long deg_b) {
    return sign_pow(f, deg_a * deg_b);
}

Scalar koszul_sign(FieldSpec f, std::vector<long> degs, const std::vector<int>& swaps) {
    Scalar s = Scalar::one(f);
    for (int i : swaps) {
        if (i < 0 || i + 1 >= (int)degs.size()) throw input_error("koszul_sign: swap index out of range");
        s = s * koszul_swap_sign(f, degs[i], degs[i + 1]);
        std::swap(degs[i], degs[i + 1]);
    }
    return s;
}

long hom_component_dim(const std::vector<const GradedSpace*>& sources,
                       const GradedSpace& target, int q) {
    /* convolve the source degree-dimension functions */
    std::map<int, long> conv;
    conv[0] = 1;
    for (const GradedSpace* s : sources) {
        std::map<int, long> next;
        for (const auto& [d, n] : conv)
            for (const auto& [lab, deg] : s->basis()) next[d + deg] += n;
        conv = std::move(next);
        if (conv.empty()) return 0;
    }
    long total = 0;
    for (const auto& [d, n] : conv) total += n * target.dim_in_degree(d + q);
    return total;
}

int sparsity_of(const std::set<int>& support) {
    long g = 0;
    for (int d : support) g = std::gcd(g, (long)d);
    return (int)g; // 0 when support is empty or {0}
}

int sparsity_of(const GradedSpace& v) { return sparsity_of(v.support()); }

} // namespace gersten
