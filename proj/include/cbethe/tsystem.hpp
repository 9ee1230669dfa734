#pragma once

#include "cbethe/dvf.hpp"
#include "cbethe/evaluate.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>

namespace cbethe {

// Raised when a recursion step would divide by zero at the sampled point.
struct ZeroDivisor : std::domain_error {
    using std::domain_error::domain_error;
};

// Initial data shared by all evaluators of one rank: T_1^{(a)} and T_{-n}^{(1)}.
class TSystemData {
public:
    explicit TSystemData(int s) : s_(s) {}
    int s() const { return s_; }
    const QExpr& fundamental(int a);
    const QExpr& negative_row(int n);

private:
    int s_;
    std::map<int, QExpr> fund_, neg_;
};

// Pointwise values of T_n^{(a)} (2 <= a <= s) obtained from the T-system
// solved for the highest index, with T_0 = 1 and T_1^{(a)} the fundamental DVF.
template <class T>
class TSystem {
public:
    TSystem(std::shared_ptr<TSystemData> data, const BasicAssignment<T>& a) : d_(std::move(data)), a_(a) {}

    int s() const { return d_->s(); }

    T value(int a, int n, const T& u);
    // T^{(b)}_n for b >= 2, T^{(1)}_{-n} for b = 1.
    T left(int b, int n, const T& u);
    // Coupling term of the equation with index k for row a.
    T coupling(int a, int k, const T& u);
    // Half the spacing of the bilinear side: 1 for a = s, 1/2 otherwise.
    static Rational half_step(int s, int a) { return a == s ? Rational(1) : Rational(1, 2); }
    // prod - coupling for the step producing T_n^{(a)}; equals T_n T_{n-2}.
    T numerator(int a, int n, const T& u);

private:
    std::shared_ptr<TSystemData> d_;
    BasicAssignment<T> a_;
    std::map<std::tuple<int, int, std::string>, T> memo_;
};

extern template class TSystem<Rational>;
extern template class TSystem<Complex>;

}  // namespace cbethe
