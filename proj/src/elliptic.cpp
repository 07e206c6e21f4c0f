#include "gspin/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gspin {

namespace {

// Reduced row echelon form; returns the pivot column of each row.
std::vector<int> rref(std::vector<std::vector<Rat>>& mat) {
    std::vector<int> pivots;
    if (mat.empty()) return pivots;
    const size_t cols = mat[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < mat.size(); ++col) {
        size_t p = row;
        while (p < mat.size() && mat[p][col] == Rat(0)) ++p;
        if (p == mat.size()) continue;
        std::swap(mat[row], mat[p]);
        const Rat lead = mat[row][col];
        for (size_t c = col; c < cols; ++c) mat[row][c] /= lead;
        for (size_t rr = 0; rr < mat.size(); ++rr) {
            if (rr == row || mat[rr][col] == Rat(0)) continue;
            const Rat f = mat[rr][col];
            for (size_t c = col; c < cols; ++c) mat[rr][c] -= f * mat[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    mat.resize(pivots.size());
    return pivots;
}

// Kernel of a rational matrix, as an RREF-canonicalized basis.
FixedSpace kernel(std::vector<std::vector<Rat>> mat, int cols) {
    std::vector<int> pivots = rref(mat);
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = 1;
    FixedSpace out;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<size_t>(cols), Rat(0));
        v[static_cast<size_t>(free)] = Rat(1);
        for (size_t row = 0; row < pivots.size(); ++row)
            v[static_cast<size_t>(pivots[row])] = -mat[row][static_cast<size_t>(free)];
        out.basis.push_back(std::move(v));
    }
    rref(out.basis);
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

std::vector<std::vector<Rat>> minus_identity(std::vector<std::vector<Rat>> mat) {
    for (size_t i = 0; i < mat.size(); ++i) mat[i][i] -= Rat(1);
    return mat;
}

}  // namespace

FixedSpace fixed_space(const LeviSpec& levi, const WeylElement& w) {
    return kernel(minus_identity(action_matrix(levi, w)), levi.rank() + 1);
}

FixedSpace common_fixed_space(const LeviSpec& levi, const std::vector<WeylElement>& ws) {
    std::vector<std::vector<Rat>> stacked;
    for (const WeylElement& w : ws)
        for (auto& row : minus_identity(action_matrix(levi, w))) stacked.push_back(std::move(row));
    if (stacked.empty())
        stacked.emplace_back(static_cast<size_t>(levi.rank() + 1), Rat(0));
    return kernel(std::move(stacked), levi.rank() + 1);
}

FixedSpace center_line(const LeviSpec& levi) {
    // {(y/2,...,y/2,y)} with the basis vector in reduced echelon form.
    FixedSpace z;
    std::vector<Rat> v(static_cast<size_t>(levi.rank() + 1), Rat(1));
    v.back() = Rat(2);
    z.basis.push_back(std::move(v));
    z.dim = 1;
    return z;
}

std::vector<std::vector<long long>> primitive_basis(const FixedSpace& space) {
    std::vector<std::vector<long long>> out;
    for (const auto& v : space.basis) {
        long long denom = 1;
        for (const Rat& q : v) denom = std::lcm(denom, q.denominator());
        std::vector<long long> w;
        long long g = 0;
        for (const Rat& q : v) {
            long long x = q.numerator() * (denom / q.denominator());
            w.push_back(x);
            g = std::gcd(g, x);
        }
        if (g > 1)
            for (long long& x : w) x /= g;
        out.push_back(std::move(w));
    }
    return out;
}

namespace {

unsigned full_mask(int r) { return (1u << r) - 1u; }

std::optional<WeylElement> find_by_flips(const RGroup& r, unsigned mask) {
    for (const WeylElement& w : r.elements)
        if (w.flips == mask) return w;
    return std::nullopt;
}

// Closed-form elliptic condition per family and regime: every block must be
// tagged, and in family D case (i) the odd-block count must be even.
bool closed_form_elliptic(const LeviSpec& levi, const InertiaDatum& sigma, const RGroup& cf) {
    const int r = levi.rank();
    if (levi.family() == Family::B) return static_cast<int>(cf.omega.size()) == r;
    if (levi.m() == 0 || !sigma.cn_fixes_tau) {
        int tagged = static_cast<int>(cf.omega1.size() + cf.omega2.size());
        return tagged == r && cf.omega2.size() % 2 == 0;
    }
    return static_cast<int>(cf.omega.size()) == r;
}

}  // namespace

EllipticClass classify_elliptic(const LeviSpec& levi, const InertiaDatum& sigma) {
    EllipticClass out;
    out.r_group = r_group_bruteforce(levi, sigma);
    const FixedSpace z = center_line(levi);
    out.a_r = common_fixed_space(levi, out.r_group.elements);
    for (const WeylElement& w : out.r_group.elements) {
        FixedSpace a_w = fixed_space(levi, w);
        if (!out.elliptic_witness && a_w == z) out.elliptic_witness = w;
        if (!out.inducing_witness && a_w == out.a_r) out.inducing_witness = w;
    }
    out.has_elliptic = out.elliptic_witness.has_value();
    out.all_components_elliptic = out.has_elliptic;
    out.irreducibly_induced = out.inducing_witness.has_value();

    const RGroup cf = r_group_closed_form(levi, sigma);
    if (closed_form_elliptic(levi, sigma, cf) != out.has_elliptic)
        throw std::logic_error("ellipticity: fixed-space verdict disagrees with closed form");
    return out;
}

FormalOperator compose(const FormalOperator& a, const FormalOperator& b) {
    return {a.factors ^ b.factors, a.tau_flag != b.tau_flag};
}

std::vector<std::pair<WeylElement, FormalOperator>> splitting_section(const LeviSpec& levi,
                                                                      const InertiaDatum& sigma) {
    std::vector<std::pair<WeylElement, FormalOperator>> out;
    for (const WeylElement& w : r_group_closed_form(levi, sigma).elements)
        out.emplace_back(w, FormalOperator{w.flips, w.cn});
    return out;
}

WeylElement c0_element(const LeviSpec& levi, const RGroup& r) {
    std::optional<WeylElement> c0 = find_by_flips(r, full_mask(levi.rank()));
    if (!c0)
        throw std::invalid_argument(
            "c0_element: R contains no full sign change (no elliptic components)");
    return *c0;
}

std::vector<SignChar> sign_characters(const LeviSpec& levi, const RGroup& r) {
    const WeylElement c0 = c0_element(levi, r);
    // Express C_0 over the generator flip masks: xor basis indexed by top
    // bit, tracking which generators entered each basis vector.
    const int d = r.rank;
    const int bits_n = levi.rank();
    std::vector<unsigned> basis_mask(static_cast<size_t>(bits_n), 0);
    std::vector<unsigned> basis_combo(static_cast<size_t>(bits_n), 0);
    for (int k = 0; k < d; ++k) {
        unsigned m = r.generators[static_cast<size_t>(k)].flips;
        unsigned c = 1u << k;
        for (int bit = bits_n - 1; bit >= 0 && m != 0; --bit) {
            if (!(m >> bit & 1u)) continue;
            if (!basis_mask[static_cast<size_t>(bit)]) {
                basis_mask[static_cast<size_t>(bit)] = m;
                basis_combo[static_cast<size_t>(bit)] = c;
                m = 0;
            } else {
                m ^= basis_mask[static_cast<size_t>(bit)];
                c ^= basis_combo[static_cast<size_t>(bit)];
            }
        }
    }
    unsigned residue = c0.flips;
    unsigned coeffs = 0;
    for (int bit = bits_n - 1; bit >= 0; --bit) {
        if (!(residue >> bit & 1u)) continue;
        if (!basis_mask[static_cast<size_t>(bit)]) break;
        residue ^= basis_mask[static_cast<size_t>(bit)];
        coeffs ^= basis_combo[static_cast<size_t>(bit)];
    }
    if (residue != 0)
        throw std::logic_error("sign_characters: C_0 not in the span of the generators");

    std::vector<SignChar> out;
    for (unsigned bits = 0; bits < (1u << d); ++bits) {
        SignChar chi;
        chi.values.resize(static_cast<size_t>(d));
        int eps = 1;
        for (int k = 0; k < d; ++k) {
            chi.values[static_cast<size_t>(k)] = (bits >> k & 1u) ? -1 : 1;
            if ((coeffs >> k & 1u) && (bits >> k & 1u)) eps = -eps;
        }
        chi.epsilon = eps;
        out.push_back(std::move(chi));
    }
    return out;
}

}  // namespace gspin
