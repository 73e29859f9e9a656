#include "propcalc/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "propcalc/error.hpp"

namespace propcalc {

Perm perm_identity(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw Error(ErrorKind::ShapeMismatch, "perm size mismatch");
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm perm_inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int sign = 1;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Perm perm_block(const Perm& factor_perm, const std::vector<int>& sizes) {
    // factor_perm maps source factor i to target factor factor_perm[i];
    // the returned Perm maps source positions to target positions likewise.
    int nfac = static_cast<int>(sizes.size());
    std::vector<int> src_off(nfac, 0);
    for (int i = 1; i < nfac; ++i) src_off[i] = src_off[i - 1] + sizes[i - 1];
    // Offsets on the target side: factor occupying target slot t is
    // perm_inverse(factor_perm)[t].
    Perm inv = perm_inverse(factor_perm);
    std::vector<int> tgt_off(nfac, 0);
    int acc = 0;
    for (int t = 0; t < nfac; ++t) {
        tgt_off[t] = acc;
        acc += sizes[inv[t]];
    }
    int total = acc;
    Perm out(total);
    for (int i = 0; i < nfac; ++i)
        for (int k = 0; k < sizes[i]; ++k) out[src_off[i] + k] = tgt_off[factor_perm[i]] + k;
    return out;
}

int koszul_sign(const Perm& p, const std::vector<int>& degrees) {
    // Sign accumulated from transposing odd-degree factors past each other:
    // pairs (i, j) with i < j in the source that invert (p[i] > p[j]) and both
    // degrees odd contribute -1 each.
    int sign = 1;
    int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p[i] > p[j] && (degrees[i] % 2 != 0) && (degrees[j] % 2 != 0)) sign = -sign;
    return sign;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace propcalc
