#pragma once

#include <map>
#include <utility>
#include <vector>

namespace vhx {

template <class F>
using SparseVec = std::vector<std::pair<int, F>>;  // sorted by index, no zeros

/// Incremental row echelon form.  Vectors are reduced against existing
/// pivots by their leading entry; the first nonzero entry of a surviving
/// vector becomes its pivot.
template <class F>
class Echelon {
public:
    /// Returns true when v was independent of the vectors seen so far.
    bool insert(SparseVec<F> v) {
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) break;
            F f = v.front().second;
            v = axpy(v, it->second, f);
        }
        if (v.empty()) return false;
        F inv = F(1) / v.front().second;
        for (auto& e : v) e.second = e.second * inv;
        int lead = v.front().first;
        pivots_.emplace(lead, std::move(v));
        return true;
    }

    int rank() const { return static_cast<int>(pivots_.size()); }

private:
    // v - f * p
    static SparseVec<F> axpy(const SparseVec<F>& v, const SparseVec<F>& p, const F& f) {
        SparseVec<F> out;
        out.reserve(v.size() + p.size());
        std::size_t a = 0, b = 0;
        while (a < v.size() || b < p.size()) {
            if (b == p.size() || (a < v.size() && v[a].first < p[b].first)) {
                out.push_back(v[a++]);
            } else if (a == v.size() || p[b].first < v[a].first) {
                out.emplace_back(p[b].first, -(f * p[b].second));
                ++b;
            } else {
                F x = v[a].second - f * p[b].second;
                if (!(x == F(0))) out.emplace_back(v[a].first, std::move(x));
                ++a;
                ++b;
            }
        }
        return out;
    }

    std::map<int, SparseVec<F>> pivots_;
};

template <class F>
int sparse_rank(const std::vector<SparseVec<F>>& rows) {
    Echelon<F> e;
    for (auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace vhx
