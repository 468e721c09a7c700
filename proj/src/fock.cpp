#include "qhowe/fock.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace qhowe {

int TensorState::degree() const {
    int d = 0;
    for (std::uint8_t b : m) d += b;
    return d;
}

long TensorState::column_sum(int t) const {
    long s = 0;
    for (int r0 = 1; r0 <= rows; ++r0) s += at(r0, t);
    return s;
}

long TensorState::row_sum(int s) const {
    long acc = 0;
    for (int t = 1; t <= cols; ++t) acc += at(s, t);
    return acc;
}

bool TensorState::valid(const Epsilon& eps) const {
    for (int t = 1; t <= cols; ++t)
        if (eps.at(t) == 1)
            for (int s = 1; s <= rows; ++s)
                if (at(s, t) > 1) return false;
    return true;
}

std::vector<std::vector<int>> TensorState::matrix_view() const {
    std::vector<std::vector<int>> M(static_cast<std::size_t>(rows),
                                    std::vector<int>(static_cast<std::size_t>(cols), 0));
    for (int s = 1; s <= rows; ++s)
        for (int t = 1; t <= cols; ++t) M[s - 1][t - 1] = at(s, t);
    return M;
}

TensorState TensorState::from_matrix(const std::vector<std::vector<int>>& M) {
    TensorState x(static_cast<int>(M.size()), static_cast<int>(M.empty() ? 0 : M[0].size()));
    for (int s = 1; s <= x.rows; ++s)
        for (int t = 1; t <= x.cols; ++t) x.at(s, t) = static_cast<std::uint8_t>(M[s - 1][t - 1]);
    return x;
}

std::string TensorState::str() const {
    std::string out = "[";
    for (int s = 1; s <= rows; ++s) {
        if (s > 1) out += ";";
        for (int t = 1; t <= cols; ++t) {
            if (t > 1) out += ",";
            out += std::to_string(at(s, t));
        }
    }
    return out + "]";
}

Weight state_weight(const TensorState& x) {
    std::vector<long> m(static_cast<std::size_t>(x.cols));
    for (int t = 1; t <= x.cols; ++t) m[static_cast<std::size_t>(t - 1)] = x.column_sum(t);
    return Weight(x.rows, std::move(m));
}

namespace {

void enumerate_rec(const Epsilon& eps, int r, int pos, int remaining, TensorState& cur,
                   const std::optional<Weight>& w, std::vector<TensorState>& out) {
    int n = eps.n();
    int total = r * n;
    if (pos == total) {
        if (remaining != 0) return;
        if (w) {
            for (int t = 1; t <= n; ++t)
                if (cur.column_sum(t) != w->m[static_cast<std::size_t>(t - 1)]) return;
        }
        out.push_back(cur);
        return;
    }
    int slot = pos % n + 1; // 1-based column of this flat position
    int cap = eps.at(slot) == 1 ? 1 : remaining;
    cap = std::min(cap, remaining);
    if (w) cap = std::min<long>(cap, w->m[static_cast<std::size_t>(slot - 1)]);
    for (int v = 0; v <= cap; ++v) {
        cur.m[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(v);
        enumerate_rec(eps, r, pos + 1, remaining - v, cur, w, out);
    }
    cur.m[static_cast<std::size_t>(pos)] = 0;
}

} // namespace

SlicePtr enumerate_slice(const Epsilon& eps, int r, int d, std::optional<Weight> w) {
    assert(d >= 0 && r >= 1);
    auto slice = std::make_shared<Slice>(Slice{eps, r, d, w, {}, {}});
    if (!w || (w->s == r && w->degree() == d)) {
        TensorState cur(r, eps.n());
        enumerate_rec(eps, r, 0, d, cur, w, slice->states);
        std::sort(slice->states.begin(), slice->states.end());
    }
    slice->index.reserve(slice->states.size());
    for (std::size_t i = 0; i < slice->states.size(); ++i)
        slice->index.emplace(slice->states[i], static_cast<int>(i));
    return slice;
}

SlicePtr SliceCache::get(const Epsilon& eps, int r, int d, std::optional<Weight> w) {
    std::string key = eps.str() + "|" + std::to_string(r) + "|" + std::to_string(d);
    if (w) key += "|" + w->str();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    SlicePtr fresh = enumerate_slice(eps, r, d, w);
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = map_.emplace(key, fresh);
    return it->second; // first writer wins
}

SliceCache& SliceCache::global() {
    static SliceCache cache;
    return cache;
}

void SparseVec::add(const TensorState& s, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    for (const auto& [s, c] : o.entries_) add(s, c);
    return *this;
}

SparseVec& SparseVec::axpy(const Scalar& a, const SparseVec& o) {
    if (a.is_zero()) return *this;
    for (const auto& [s, c] : o.entries_) add(s, a * c);
    return *this;
}

SparseVec SparseVec::scaled(const Scalar& a) const {
    SparseVec out;
    if (a.is_zero()) return out;
    for (const auto& [s, c] : entries_) out.entries_.emplace(s, a * c);
    return out;
}

SparseVec SparseVec::operator+(const SparseVec& o) const {
    SparseVec out = *this;
    out += o;
    return out;
}

SparseVec SparseVec::operator-(const SparseVec& o) const {
    SparseVec out = *this;
    out.axpy(Scalar(-1), o);
    return out;
}

Scalar SparseVec::coeff(const TensorState& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Scalar() : it->second;
}

Scalar state_norm(const TensorState& s) {
    LaurentPoly acc(1);
    int qexp = 0;
    for (std::uint8_t b : s.m) {
        int m = b;
        qexp += m * (m - 1) / 2;
        if (m >= 2) acc *= q_factorial(m);
    }
    return Scalar(acc * LaurentPoly::q_power(qexp));
}

Scalar pairing(const SparseVec& u, const SparseVec& w) {
    Scalar acc;
    const auto& a = u.entries();
    const auto& b = w.entries();
    if (!a.empty() && !b.empty()) {
        const TensorState& x = a.begin()->first;
        const TensorState& y = b.begin()->first;
        if (x.rows != y.rows || x.cols != y.cols)
            throw std::invalid_argument("pairing: mixed configurations");
    }
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            acc += ia->second * ib->second * state_norm(ia->first);
            ++ia;
            ++ib;
        }
    }
    return acc;
}

std::vector<Scalar> gram_diagonal(const Slice& slice) {
    std::vector<Scalar> out;
    out.reserve(slice.states.size());
    for (const auto& s : slice.states) out.push_back(state_norm(s));
    return out;
}

} // namespace qhowe
