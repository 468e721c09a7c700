#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "qhowe/operators.hpp"

namespace qhowe {

class WordExpr;
using WordPtr = std::shared_ptr<const WordExpr>;

// Formal Scalar-linear combination of words in generator symbols, kept as an
// expression tree so that repeated subwords are evaluated once.
class WordExpr {
  public:
    enum class Kind { Gen, Sum, Prod };

    static WordPtr gen(GenSym s);
    static WordPtr scalar(Scalar c); // c * empty word
    // product u1 u2 ... uk, rightmost factor applied first
    static WordPtr prod(std::vector<WordPtr> factors);
    static WordPtr prod(WordPtr a, WordPtr b) { return prod(std::vector<WordPtr>{std::move(a), std::move(b)}); }
    static WordPtr sum(std::vector<std::pair<Scalar, WordPtr>> terms);
    static WordPtr add(const WordPtr& a, const WordPtr& b) { return sum({{Scalar(1), a}, {Scalar(1), b}}); }
    static WordPtr sub(const WordPtr& a, const WordPtr& b) { return sum({{Scalar(1), a}, {Scalar(-1), b}}); }
    static WordPtr scale(Scalar c, const WordPtr& a) { return sum({{std::move(c), a}}); }
    // [u, v]_t = uv - t vu
    static WordPtr bracket(const WordPtr& u, const WordPtr& v, const Scalar& t);
    static WordPtr commutator(const WordPtr& u, const WordPtr& v) { return bracket(u, v, Scalar(1)); }
    static WordPtr power(const WordPtr& u, int k);

    Kind kind() const { return kind_; }
    const GenSym& sym() const { return sym_; }
    const std::vector<WordPtr>& factors() const { return factors_; }
    const std::vector<std::pair<Scalar, WordPtr>>& terms() const { return terms_; }

  private:
    WordExpr() = default;
    Kind kind_ = Kind::Gen;
    GenSym sym_{GenSym::Type::E, 0, {}};
    std::vector<WordPtr> factors_;
    std::vector<std::pair<Scalar, WordPtr>> terms_;
    Scalar coeff_{1}; // for scalar leaves (empty word scaled)
    bool is_scalar_leaf_ = false;

    friend class WordEvaluator;
    friend struct WordShape;
};

// Degree bookkeeping for truncation safety: total shift interval plus the
// largest intermediate rise above the input degree while applying the word.
struct WordShape {
    DegInterval shift;
    int max_rise = 0;

    static WordShape of(const WordPtr& w, const Engine& eng);
};

// Packages a word as a standalone LinOp; the engine is shared by the closure.
LinOp word_op(std::shared_ptr<const Engine> eng, WordPtr w);

// Symbol-by-symbol evaluator with per-node memoization. Memoized results are
// shared between basis states of one batch; call clear() between batches to
// bound memory.
class WordEvaluator {
  public:
    explicit WordEvaluator(const Engine& eng) : eng_(eng) {}

    const SparseVec& eval(const WordPtr& w, const TensorState& x);
    SparseVec apply(const WordPtr& w, const SparseVec& v);
    void clear() { memo_.clear(); }

  private:
    using StateMap = std::unordered_map<TensorState, SparseVec, TensorStateHash>;
    const Engine& eng_;
    // each entry keeps its node alive so recycled addresses cannot alias
    std::unordered_map<const WordExpr*, std::pair<WordPtr, StateMap>> memo_;
};

} // namespace qhowe
