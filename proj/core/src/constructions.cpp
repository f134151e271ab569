#include "ietflip/constructions.hpp"

namespace ietflip {

bool admissible_counts(int n, int k, int ell) {
    if (n < 1) return false;
    if (k == n && ell == 0) return true;
    return k >= 1 && ell >= 1 && k + 2 * ell <= n;
}

SignedPermutation theorem_c_permutation(int n, int k, int ell) {
    if (!admissible_counts(n, k, ell))
        throw InvalidCounts("no IET with flips realizes (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ", ell=" + std::to_string(ell) + ")");
    std::vector<int> p;
    p.reserve(n);
    if (k == n) {
        p.push_back(-n);
        for (int v = n - 1; v >= 1; --v) p.push_back(v);
        return SignedPermutation(p);
    }
    const int r = n - k - 2 * (ell - 1);
    p.push_back(-n);
    for (int v = n - 1; v >= n - k + 1; --v) p.push_back(v);
    int a = n - k - 1;
    for (int j = 0; j < ell - 1; ++j) {
        p.push_back(-a);
        p.push_back(-(a + 1));
        a -= 2;
    }
    for (int v = 1; v <= r; ++v) p.push_back(-v);
    return SignedPermutation(p);
}

SignedPermutation theorem_c_target(int n, int k, int ell) {
    if (!admissible_counts(n, k, ell))
        throw InvalidCounts("inadmissible counts");
    std::vector<int> q;
    q.reserve(n);
    if (k == n) {
        for (int v = 1; v <= n; ++v) q.push_back(-v);
        return SignedPermutation(q);
    }
    const int r = n - k - 2 * (ell - 1);
    for (int v = r; v >= 1; --v) q.push_back(v);
    int d = r;
    for (int j = 0; j < ell - 1; ++j) {
        q.push_back(d + 2);
        q.push_back(d + 1);
        d += 2;
    }
    for (int v = n - k + 1; v <= n; ++v) q.push_back(-v);
    return SignedPermutation(q);
}

LengthVector sample_mu(int n, Rng& rng) {
    static const BasisPtr basis = make_basis({2, 3});
    std::vector<Scalar> mu;
    mu.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto coeff = [&rng] { return make_rat(rng.uniform(1, 20), rng.uniform(1, 20)); };
        Scalar entry = Scalar(basis, coeff()) + Scalar::term(basis, 1, coeff()) +
                       Scalar::term(basis, 2, coeff());
        mu.push_back(std::move(entry));
    }
    return LengthVector(std::move(mu));
}

LengthVector cone_sample(const SignedPermutation& p, const std::vector<StepType>& word,
                         std::uint64_t seed) {
    const int n = p.n();
    IntMatrix m = IntMatrix::identity(n);
    SignedPermutation cur = p;
    for (StepType t : word) {
        if (!cur.in_p_star())
            throw WordInapplicable("word leaves the induction domain at " + cur.str());
        m = m * rauzy_matrix(cur, t);
        cur = rauzy_map(cur, t);
    }
    Rng rng(seed);
    LengthVector mu = sample_mu(n, rng);
    return LengthVector(m.apply(mu.values()));
}

Construction construct_theorem_c(const ConstructionSpec& spec) {
    if (!admissible_counts(spec.n, spec.k, spec.ell))
        throw InvalidCounts("no IET with flips realizes (n=" + std::to_string(spec.n) +
                            ", k=" + std::to_string(spec.k) +
                            ", ell=" + std::to_string(spec.ell) + ")");
    SignedPermutation p = theorem_c_permutation(spec.n, spec.k, spec.ell);
    SignedPermutation target = theorem_c_target(spec.n, spec.k, spec.ell);

    SignedPermutation image = p;
    for (int i = 0; i < spec.n - 1; ++i) {
        if (!image.in_p_star())
            throw TargetMismatch("b-word leaves the induction domain at " + image.str());
        image = rauzy_map(image, StepType::B);
    }
    if (image != target)
        throw TargetMismatch("b^(n-1) image " + image.str() + " does not match the target " +
                             target.str());
    if (spec.n > 1 && !p.irreducible())
        throw TargetMismatch("constructed permutation is reducible: " + p.str());

    std::vector<StepType> word(spec.n - 1, StepType::B);
    Construction out{cone_sample(p, word, spec.seed), p, target, word, spec.k, spec.ell};
    return out;
}

SignedPermutation random_irreducible_flip_permutation(int n, Rng& rng) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<int> vals(n);
        for (int i = 0; i < n; ++i) vals[i] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(vals[i], vals[static_cast<int>(rng.uniform(0, i))]);
        bool flip = false;
        for (int i = 0; i < n; ++i)
            if (rng.coin()) {
                vals[i] = -vals[i];
                flip = true;
            }
        if (!flip) continue;
        SignedPermutation p(vals);
        if (n == 1 || p.irreducible()) return p;
    }
    throw CapExceeded("failed to sample an irreducible flip permutation");
}

} // namespace ietflip
