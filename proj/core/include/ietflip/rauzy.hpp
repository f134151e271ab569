#pragma once

#include <set>
#include <string>
#include <vector>

#include "ietflip/iet.hpp"
#include "ietflip/permutation.hpp"
#include "ietflip/rational.hpp"

namespace ietflip {

enum class StepType { A, B };
enum class RauzyClass { A, B, Tie };

inline char step_char(StepType t) { return t == StepType::A ? 'a' : 'b'; }

// Dense integer matrix, big-integer entries (cumulative products grow).
class IntMatrix {
  public:
    explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, Int(0)) {}
    static IntMatrix identity(int n);

    int n() const { return n_; }
    Int& at(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    Int determinant() const;   // Bareiss, exact
    Int column_sum(int j) const;

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  private:
    int n_;
    std::vector<Int> data_;
};

// The comparison that drives the induction: A when lambda_{pi^{-1}(n)} < lambda_n,
// B when >, Tie on exact equality. Requires |p_n| != n.
RauzyClass rauzy_type(const LengthVector& lambda, const SignedPermutation& p);

// M_a = I + E_{n, pi^{-1}(n)};
// M_b = sum_{i<=k} E_{i,i} + E_{n,s} + sum_{k<=i<=n-1} E_{i,i+1},
//       k = pi^{-1}(n), s = k + (1+theta_k)/2.
IntMatrix rauzy_matrix(const SignedPermutation& p, StepType type);

// the combinatorial maps a and b, four sign cases transcribed verbatim
SignedPermutation rauzy_map(const SignedPermutation& p, StepType type);

struct RauzyStepRecord {
    StepType type;
    IntMatrix matrix;
    SignedPermutation p_before;
    SignedPermutation p_after;
    std::vector<Scalar> lambda_before;   // the intermediate data of the trajectory
    Scalar xi;                           // length of the induction interval = new norm
};

struct RauzyStep {
    LengthVector lambda;
    SignedPermutation p;
    RauzyStepRecord record;
};

// one induction step: lambda' = M^{-1} lambda (computed in solved form), p' = map(p)
RauzyStep rauzy_step(const LengthVector& lambda, const SignedPermutation& p);

struct RauzyTrajectory {
    std::string word;   // over {a, b}
    std::vector<RauzyStepRecord> records;
    std::vector<Scalar> final_lambda;
    std::vector<int> final_p;
    IntMatrix cumulative;

    RauzyTrajectory() : cumulative(1) {}
};

struct FiniteExpansion {
    int ell = 0;   // least m >= 0 with p^{(m)} reducible
    RauzyTrajectory trajectory;
};

// Iterate until the permutation goes reducible. Requires flips (flip-free
// inputs never reduce by this mechanism); a reducible input returns ell = 0.
FiniteExpansion finite_expansion(const LengthVector& lambda, const SignedPermutation& p,
                                 int cap);

// breadth-first closure of {p} under a and b, truncated at `depth`
// applications; members outside the induction domain are kept unexpanded
std::set<SignedPermutation> forward_set(const SignedPermutation& p, int depth);

} // namespace ietflip
