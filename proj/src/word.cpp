#include "qhowe/word.hpp"

#include <cassert>

namespace qhowe {

WordPtr WordExpr::gen(GenSym s) {
    auto w = std::shared_ptr<WordExpr>(new WordExpr());
    w->kind_ = Kind::Gen;
    w->sym_ = std::move(s);
    return w;
}

WordPtr WordExpr::scalar(Scalar c) {
    auto w = std::shared_ptr<WordExpr>(new WordExpr());
    w->kind_ = Kind::Sum;
    w->is_scalar_leaf_ = true;
    w->coeff_ = std::move(c);
    return w;
}

WordPtr WordExpr::prod(std::vector<WordPtr> factors) {
    assert(!factors.empty());
    if (factors.size() == 1) return factors[0];
    auto w = std::shared_ptr<WordExpr>(new WordExpr());
    w->kind_ = Kind::Prod;
    w->factors_ = std::move(factors);
    return w;
}

WordPtr WordExpr::sum(std::vector<std::pair<Scalar, WordPtr>> terms) {
    auto w = std::shared_ptr<WordExpr>(new WordExpr());
    w->kind_ = Kind::Sum;
    w->terms_ = std::move(terms);
    return w;
}

WordPtr WordExpr::bracket(const WordPtr& u, const WordPtr& v, const Scalar& t) {
    return sum({{Scalar(1), prod(u, v)}, {-t, prod(v, u)}});
}

WordPtr WordExpr::power(const WordPtr& u, int k) {
    assert(k >= 1);
    std::vector<WordPtr> fs(static_cast<std::size_t>(k), u);
    return prod(std::move(fs));
}

WordShape WordShape::of(const WordPtr& w, const Engine& eng) {
    switch (w->kind()) {
        case WordExpr::Kind::Gen: {
            DegInterval d = eng.deg_shift(w->sym());
            return {d, std::max(0, d.hi)};
        }
        case WordExpr::Kind::Prod: {
            // rightmost factor applied first
            WordShape acc{{0, 0}, 0};
            for (auto it = w->factors().rbegin(); it != w->factors().rend(); ++it) {
                WordShape f = WordShape::of(*it, eng);
                acc.max_rise = std::max(acc.max_rise, acc.shift.hi + f.max_rise);
                acc.shift = acc.shift + f.shift;
                acc.max_rise = std::max(acc.max_rise, acc.shift.hi);
            }
            return acc;
        }
        case WordExpr::Kind::Sum: {
            if (w->terms().empty()) return {{0, 0}, 0};
            bool first = true;
            WordShape acc{{0, 0}, 0};
            for (const auto& [c, t] : w->terms()) {
                WordShape f = WordShape::of(t, eng);
                if (first) {
                    acc = f;
                    first = false;
                } else {
                    acc.shift = acc.shift.hull(f.shift);
                    acc.max_rise = std::max(acc.max_rise, f.max_rise);
                }
            }
            return acc;
        }
    }
    return {{0, 0}, 0};
}

const SparseVec& WordEvaluator::eval(const WordPtr& w, const TensorState& x) {
    {
        auto& slot = memo_[w.get()];
        if (!slot.first) slot.first = w;
        auto it = slot.second.find(x);
        if (it != slot.second.end()) return it->second;
    }

    SparseVec result;
    switch (w->kind()) {
        case WordExpr::Kind::Gen:
            result = eng_.apply(w->sym(), x);
            break;
        case WordExpr::Kind::Prod: {
            SparseVec cur = SparseVec::unit(x);
            for (auto f = w->factors().rbegin(); f != w->factors().rend(); ++f) cur = apply(*f, cur);
            result = std::move(cur);
            break;
        }
        case WordExpr::Kind::Sum: {
            if (w->is_scalar_leaf_) {
                result.add(x, w->coeff_);
                break;
            }
            for (const auto& [c, t] : w->terms()) result.axpy(c, eval(t, x));
            break;
        }
    }
    // re-find: recursion may have rehashed the node's map
    return memo_[w.get()].second.emplace(x, std::move(result)).first->second;
}

SparseVec WordEvaluator::apply(const WordPtr& w, const SparseVec& v) {
    SparseVec out;
    for (const auto& [s, c] : v.entries()) out.axpy(c, eval(w, s));
    return out;
}

LinOp word_op(std::shared_ptr<const Engine> eng, WordPtr w) {
    WordShape sh = WordShape::of(w, *eng);
    // weight shift is uniform only for single-generator words; composites
    // report one when every term agrees
    std::optional<Weight> ws;
    std::function<std::optional<Weight>(const WordPtr&)> shift_of =
        [&](const WordPtr& node) -> std::optional<Weight> {
        switch (node->kind()) {
            case WordExpr::Kind::Gen: return eng->weight_shift(node->sym());
            case WordExpr::Kind::Prod: {
                Weight acc = Weight::zero(eng->cfg().n());
                for (const auto& f : node->factors()) {
                    auto s = shift_of(f);
                    if (!s) return std::nullopt;
                    acc = acc + *s;
                }
                return acc;
            }
            case WordExpr::Kind::Sum: {
                std::optional<Weight> acc;
                for (const auto& [c, t] : node->terms()) {
                    auto s = shift_of(t);
                    if (!s) return std::nullopt;
                    if (!acc)
                        acc = s;
                    else if (*acc != *s)
                        return std::nullopt;
                }
                if (!acc) acc = Weight::zero(eng->cfg().n()); // scalar leaf
                return acc;
            }
        }
        return std::nullopt;
    };
    ws = shift_of(w);
    return LinOp{[eng, w](const TensorState& x) {
                     WordEvaluator ev(*eng);
                     return ev.eval(w, x);
                 },
                 sh.shift, ws};
}

} // namespace qhowe
