#include "ietflip/rauzy.hpp"

#include <deque>

namespace ietflip {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

std::vector<Scalar> IntMatrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) {
        Scalar acc(v.front().basis());
        for (int j = 0; j < n_; ++j) {
            const Int& a = at(i, j);
            if (a != 0) acc = acc + v[j] * Rat(a);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Int IntMatrix::determinant() const {
    // Bareiss fraction-free elimination with partial pivoting by nonzero
    IntMatrix m = *this;
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n_; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n_; ++r)
                if (m.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n_; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i) {
            for (int j = k + 1; j < n_; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;   // divides exactly
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n_ - 1, n_ - 1) : Int(-m.at(n_ - 1, n_ - 1));
}

Int IntMatrix::column_sum(int j) const {
    Int s(0);
    for (int i = 0; i < n_; ++i) s += at(i, j);
    return s;
}

RauzyClass rauzy_type(const LengthVector& lambda, const SignedPermutation& p) {
    if (!p.in_p_star())
        throw NotInPStar("rauzy_type requires |p_n| != n, got " + p.str());
    const int n = p.n();
    const int k = p.pi_inverse(n);
    const int c = Scalar::cmp(lambda.at(k), lambda.at(n));
    if (c < 0) return RauzyClass::A;
    if (c > 0) return RauzyClass::B;
    return RauzyClass::Tie;
}

IntMatrix rauzy_matrix(const SignedPermutation& p, StepType type) {
    if (!p.in_p_star())
        throw NotInPStar("rauzy_matrix requires |p_n| != n, got " + p.str());
    const int n = p.n();
    const int k = p.pi_inverse(n);
    if (type == StepType::A) {
        IntMatrix m = IntMatrix::identity(n);
        m.at(n - 1, k - 1) += 1;
        return m;
    }
    IntMatrix m(n);
    for (int i = 1; i <= k; ++i) m.at(i - 1, i - 1) += 1;
    const int s = k + (1 + p.theta(k)) / 2;
    m.at(n - 1, s - 1) += 1;
    for (int i = k; i <= n - 1; ++i) m.at(i - 1, i) += 1;
    return m;
}

SignedPermutation rauzy_map(const SignedPermutation& p, StepType type) {
    if (!p.in_p_star())
        throw NotInPStar("rauzy_map requires |p_n| != n, got " + p.str());
    const int n = p.n();
    std::vector<int> out(n);
    if (type == StepType::A) {
        const int pin = p.pi(n);
        if (p.theta(n) > 0) {
            for (int i = 1; i <= n; ++i) {
                if (p.pi(i) <= pin) out[i - 1] = p.theta(i) * p.pi(i);
                else if (p.pi(i) == n) out[i - 1] = p.theta(i) * (pin + 1);
                else out[i - 1] = p.theta(i) * (p.pi(i) + 1);
            }
        } else {
            for (int i = 1; i <= n; ++i) {
                if (p.pi(i) <= pin - 1) out[i - 1] = p.theta(i) * p.pi(i);
                else if (p.pi(i) == n) out[i - 1] = -p.theta(i) * pin;
                else out[i - 1] = p.theta(i) * (p.pi(i) + 1);
            }
        }
        return SignedPermutation(out);
    }
    const int k = p.pi_inverse(n);
    if (p.theta(k) > 0) {
        for (int i = 1; i <= n; ++i) {
            if (i <= k) out[i - 1] = p.theta(i) * p.pi(i);
            else if (i == k + 1) out[i - 1] = p.theta(n) * p.pi(n);
            else out[i - 1] = p.theta(i - 1) * p.pi(i - 1);
        }
    } else {
        for (int i = 1; i <= n; ++i) {
            if (i <= k - 1) out[i - 1] = p.theta(i) * p.pi(i);
            else if (i == k) out[i - 1] = -p.theta(n) * p.pi(n);
            else out[i - 1] = p.theta(i - 1) * p.pi(i - 1);
        }
    }
    return SignedPermutation(out);
}

RauzyStep rauzy_step(const LengthVector& lambda, const SignedPermutation& p) {
    const RauzyClass cls = rauzy_type(lambda, p);
    if (cls == RauzyClass::Tie)
        throw TieEncountered("lambda_{pi^{-1}(n)} = lambda_n at " + p.str());
    const int n = p.n();
    const int k = p.pi_inverse(n);
    const StepType type = cls == RauzyClass::A ? StepType::A : StepType::B;

    // lambda' solves M lambda' = lambda; the matrices are sparse enough to
    // write the solution down directly
    std::vector<Scalar> next;
    next.reserve(n);
    Scalar xi(lambda.basis());
    if (type == StepType::A) {
        next = lambda.values();
        next[n - 1] = lambda.at(n) - lambda.at(k);
        xi = lambda.norm() - lambda.at(k);
    } else {
        for (int i = 1; i <= k - 1; ++i) next.push_back(lambda.at(i));
        if (p.theta(k) > 0) {
            next.push_back(lambda.at(k) - lambda.at(n));
            next.push_back(lambda.at(n));
        } else {
            next.push_back(lambda.at(n));
            next.push_back(lambda.at(k) - lambda.at(n));
        }
        for (int i = k + 1; i <= n - 1; ++i) next.push_back(lambda.at(i));
        xi = lambda.norm() - lambda.at(n);
    }

    RauzyStepRecord rec{type,          rauzy_matrix(p, type), p, rauzy_map(p, type),
                        lambda.values(), xi};
    return RauzyStep{LengthVector(std::move(next)), rec.p_after, std::move(rec)};
}

FiniteExpansion finite_expansion(const LengthVector& lambda, const SignedPermutation& p,
                                 int cap) {
    if (!p.has_flips())
        throw Error("finite_expansion requires a permutation with flips");
    if (cap < 1) throw OutOfRange("cap must be >= 1");

    RauzyTrajectory traj;
    traj.cumulative = IntMatrix::identity(p.n());
    LengthVector cur_lambda = lambda;
    SignedPermutation cur_p = p;
    for (int m = 0; m <= cap; ++m) {
        if (!cur_p.irreducible()) {
            traj.final_lambda = cur_lambda.values();
            traj.final_p = cur_p.entries();
            return FiniteExpansion{m, std::move(traj)};
        }
        if (m == cap) break;
        RauzyStep step = rauzy_step(cur_lambda, cur_p);
        traj.word += step_char(step.record.type);
        traj.cumulative = traj.cumulative * step.record.matrix;
        traj.records.push_back(std::move(step.record));
        cur_lambda = std::move(step.lambda);
        cur_p = std::move(step.p);
    }
    throw CapExceeded("no reducible permutation within " + std::to_string(cap) +
                      " induction steps");
}

std::set<SignedPermutation> forward_set(const SignedPermutation& p, int depth) {
    if (depth < 0) throw OutOfRange("depth must be >= 0");
    std::set<SignedPermutation> seen{p};
    std::deque<std::pair<SignedPermutation, int>> queue{{p, 0}};
    while (!queue.empty()) {
        auto [cur, d] = queue.front();
        queue.pop_front();
        if (d == depth || !cur.in_p_star()) continue;
        for (StepType t : {StepType::A, StepType::B}) {
            SignedPermutation next = rauzy_map(cur, t);
            if (seen.insert(next).second) queue.emplace_back(std::move(next), d + 1);
        }
    }
    return seen;
}

} // namespace ietflip
