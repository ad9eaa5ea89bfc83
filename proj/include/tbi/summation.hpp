#pragma once

namespace tbi {

// Neumaier-compensated accumulator. Adding terms in any order loses at most
// O(eps) of the final sum instead of O(n * eps * max|term|), which matters for
// the alternating series where terms can exceed the result by several orders
// of magnitude.
template <typename T>
class CompensatedSum {
  public:
    void add(T x) {
        T t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    T value() const { return sum_ + comp_; }

  private:
    T sum_ = 0;
    T comp_ = 0;
};

}  // namespace tbi
