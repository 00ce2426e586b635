#include <braidtrees/angular_algebra.hpp>

#include <braidtrees/linalg.hpp>
#include <braidtrees/permutation.hpp>

#include <map>
#include <string>
#include <utility>

namespace braidtrees {

namespace {

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw DomainError("expected a rational as a string or integer");
}

AngElem decorate_shapes(const LinComb<AngTree>& shapes,
                        const TensorWord& word) {
    AngElem out;
    for (const auto& t : shapes.terms())
        out += t.coeff * AngElem::single(DecAng{t.elem, word});
    return out;
}

LinComb<AngTree> ang_shape_prec(const AngTree& l, const AngTree& r);
LinComb<AngTree> ang_shape_succ(const AngTree& l, const AngTree& r);
LinComb<AngTree> ang_shape_dot(const AngTree& l, const AngTree& r);

LinComb<AngTree> ang_shape_star(const AngTree& l, const AngTree& r) {
    if (l.is_leaf()) return LinComb<AngTree>::single(r);
    if (r.is_leaf()) return LinComb<AngTree>::single(l);
    return ang_shape_prec(l, r) + ang_shape_succ(l, r) + ang_shape_dot(l, r);
}

LinComb<AngTree> ang_shape_prec(const AngTree& l, const AngTree& r) {
    if (r.is_leaf()) {
        if (l.is_leaf()) throw DomainError("| < | is undefined");
        return LinComb<AngTree>::single(l);
    }
    if (l.is_leaf()) return LinComb<AngTree>::zero();
    static std::map<std::pair<std::string, std::string>, LinComb<AngTree>>
        memo;
    auto key = std::make_pair(canonical_key(l), canonical_key(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::vector<AngTree>& bs = l.branches();
    LinComb<AngTree> out;
    const LinComb<AngTree> tail = ang_shape_star(bs.back(), r);
    for (const auto& t : tail.terms()) {
        std::vector<AngTree> next(bs.begin(), bs.end() - 1);
        next.push_back(t.elem);
        out += t.coeff * LinComb<AngTree>::single(angular(std::move(next)));
    }
    memo.emplace(std::move(key), out);
    return out;
}

LinComb<AngTree> ang_shape_succ(const AngTree& l, const AngTree& r) {
    if (l.is_leaf()) {
        if (r.is_leaf()) throw DomainError("| > | is undefined");
        return LinComb<AngTree>::single(r);
    }
    if (r.is_leaf()) return LinComb<AngTree>::zero();
    static std::map<std::pair<std::string, std::string>, LinComb<AngTree>>
        memo;
    auto key = std::make_pair(canonical_key(l), canonical_key(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::vector<AngTree>& bs = r.branches();
    LinComb<AngTree> out;
    const LinComb<AngTree> head = ang_shape_star(l, bs.front());
    for (const auto& t : head.terms()) {
        std::vector<AngTree> next;
        next.push_back(t.elem);
        next.insert(next.end(), bs.begin() + 1, bs.end());
        out += t.coeff * LinComb<AngTree>::single(angular(std::move(next)));
    }
    memo.emplace(std::move(key), out);
    return out;
}

LinComb<AngTree> ang_shape_dot(const AngTree& l, const AngTree& r) {
    if (l.is_leaf() && r.is_leaf()) throw DomainError("| . | is undefined");
    if (l.is_leaf() || r.is_leaf()) return LinComb<AngTree>::zero();
    static std::map<std::pair<std::string, std::string>, LinComb<AngTree>>
        memo;
    auto key = std::make_pair(canonical_key(l), canonical_key(r));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::vector<AngTree>& lb = l.branches();
    const std::vector<AngTree>& rb = r.branches();
    LinComb<AngTree> out;
    const LinComb<AngTree> middle = ang_shape_star(lb.back(), rb.front());
    for (const auto& t : middle.terms()) {
        std::vector<AngTree> next(lb.begin(), lb.end() - 1);
        next.push_back(t.elem);
        next.insert(next.end(), rb.begin() + 1, rb.end());
        out += t.coeff * LinComb<AngTree>::single(angular(std::move(next)));
    }
    memo.emplace(std::move(key), out);
    return out;
}

template <class Op>
AngElem bilinear(const AngElem& a, const AngElem& b, Op&& op) {
    AngElem out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out += ta.coeff * tb.coeff * op(ta.elem, tb.elem);
    return out;
}

}  // namespace

DecAng ang_unit() { return DecAng{AngTree{}, {}}; }

DecAng ang_vertex(std::int32_t letter) {
    return DecAng{angular({AngTree{}, AngTree{}}), {letter}};
}

DecAng ang_graft(const std::vector<DecAng>& branches,
                 const std::vector<std::int32_t>& letters) {
    if (branches.size() < 2 || branches.size() != letters.size() + 1)
        throw DomainError(
            "grafting takes at least two branches, one more than letters");
    std::vector<AngTree> shapes;
    TensorWord word;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        shapes.push_back(branches[i].shape);
        word.insert(word.end(), branches[i].word.begin(),
                    branches[i].word.end());
        if (i < letters.size()) word.push_back(letters[i]);
    }
    return DecAng{angular(std::move(shapes)), std::move(word)};
}

int root_angles(const DecAng& d) {
    if (d.shape.is_leaf()) return 0;
    return static_cast<int>(d.shape.branches().size()) - 1;
}

std::vector<DecAng> ang_branches(const DecAng& d) {
    std::vector<DecAng> out;
    if (d.shape.is_leaf()) return out;
    const std::vector<AngTree>& bs = d.shape.branches();
    int offset = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (i > 0) ++offset;  // the angle letter before this branch
        const int len = bs[i].angles();
        out.emplace_back(bs[i], TensorWord(d.word.begin() + offset,
                                           d.word.begin() + offset + len));
        offset += len;
    }
    return out;
}

std::vector<std::int32_t> ang_angle_letters(const DecAng& d) {
    std::vector<std::int32_t> out;
    if (d.shape.is_leaf()) return out;
    const std::vector<AngTree>& bs = d.shape.branches();
    int offset = 0;
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) {
        offset += bs[i].angles();
        out.push_back(d.word[offset]);
        ++offset;
    }
    return out;
}

AngElem at_prec(const DecAng& a, const DecAng& b) {
    return decorate_shapes(ang_shape_prec(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

AngElem at_succ(const DecAng& a, const DecAng& b) {
    return decorate_shapes(ang_shape_succ(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

AngElem at_dot(const DecAng& a, const DecAng& b) {
    return decorate_shapes(ang_shape_dot(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

AngElem at_star(const DecAng& a, const DecAng& b) {
    return decorate_shapes(ang_shape_star(a.shape, b.shape),
                           word_concat(a.word, b.word));
}

AngElem at_prec(const AngElem& a, const AngElem& b) {
    return bilinear(a, b, [](const DecAng& x, const DecAng& y) {
        return at_prec(x, y);
    });
}

AngElem at_succ(const AngElem& a, const AngElem& b) {
    return bilinear(a, b, [](const DecAng& x, const DecAng& y) {
        return at_succ(x, y);
    });
}

AngElem at_dot(const AngElem& a, const AngElem& b) {
    return bilinear(a, b, [](const DecAng& x, const DecAng& y) {
        return at_dot(x, y);
    });
}

AngElem at_star(const AngElem& a, const AngElem& b) {
    return bilinear(a, b, [](const DecAng& x, const DecAng& y) {
        return at_star(x, y);
    });
}

FiniteAlgebra::FiniteAlgebra(int dim, const std::vector<AlgebraEntry>& entries,
                             Braiding sigma)
    : dim_(dim),
      table_(static_cast<std::size_t>(dim > 0 ? dim * dim : 0),
             std::vector<Rational>(dim > 0 ? dim : 0, Rational(0))),
      sigma_(std::move(sigma)) {
    if (dim_ < 1) throw DomainError("algebra dimension must be at least 1");
    if (sigma_.dim() != dim_)
        throw DomainError("algebra dimension " + std::to_string(dim_) +
                          " does not match braiding dimension " +
                          std::to_string(sigma_.dim()));
    for (const AlgebraEntry& e : entries) {
        if (e.i < 1 || e.i > dim_ || e.j < 1 || e.j > dim_ || e.k < 1 ||
            e.k > dim_)
            throw DomainError("structure constant index outside basis range");
        table_[(e.i - 1) * dim_ + (e.j - 1)][e.k - 1] += e.c;
    }

    // Associativity on every basis triple.
    for (std::int32_t i = 1; i <= dim_; ++i)
        for (std::int32_t j = 1; j <= dim_; ++j)
            for (std::int32_t k = 1; k <= dim_; ++k) {
                std::vector<Rational> lhs(dim_, Rational(0));
                std::vector<Rational> rhs(dim_, Rational(0));
                const std::vector<Rational>& ij = product(i, j);
                for (std::int32_t m = 1; m <= dim_; ++m) {
                    if (ij[m - 1] == Rational(0)) continue;
                    const std::vector<Rational>& mk = product(m, k);
                    for (std::int32_t l = 1; l <= dim_; ++l)
                        lhs[l - 1] += ij[m - 1] * mk[l - 1];
                }
                const std::vector<Rational>& jk = product(j, k);
                for (std::int32_t m = 1; m <= dim_; ++m) {
                    if (jk[m - 1] == Rational(0)) continue;
                    const std::vector<Rational>& im = product(i, m);
                    for (std::int32_t l = 1; l <= dim_; ++l)
                        rhs[l - 1] += jk[m - 1] * im[l - 1];
                }
                if (lhs != rhs)
                    throw DomainError(
                        "multiplication is not associative on basis triple "
                        "(" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
            }

    // Compatibility with the braiding, both directions, on basis triples.
    auto multiply_at = [this](const LinComb<TensorWord>& v, int pos) {
        LinComb<TensorWord> out;
        for (const auto& t : v.terms()) {
            const std::vector<Rational>& cs =
                product(t.elem[pos - 1], t.elem[pos]);
            for (std::int32_t m = 1; m <= dim_; ++m) {
                if (cs[m - 1] == Rational(0)) continue;
                TensorWord w(t.elem.begin(), t.elem.begin() + (pos - 1));
                w.push_back(m);
                w.insert(w.end(), t.elem.begin() + pos + 1, t.elem.end());
                out += t.coeff * cs[m - 1] *
                       LinComb<TensorWord>::single(std::move(w));
            }
        }
        return out;
    };
    for (std::int32_t i = 1; i <= dim_; ++i)
        for (std::int32_t j = 1; j <= dim_; ++j)
            for (std::int32_t k = 1; k <= dim_; ++k) {
                const LinComb<TensorWord> start =
                    LinComb<TensorWord>::single({i, j, k});
                // (mul (x) id) sigma_2 sigma_1 = sigma (id (x) mul)
                const LinComb<TensorWord> lhs = multiply_at(
                    sigma_.apply_adjacent(sigma_.apply_adjacent(start, 1), 2),
                    1);
                LinComb<TensorWord> rhs;
                const std::vector<Rational>& jk = product(j, k);
                for (std::int32_t m = 1; m <= dim_; ++m)
                    if (jk[m - 1] != Rational(0))
                        rhs += jk[m - 1] * sigma_.pair(i, m);
                if (lhs != rhs)
                    throw DomainError(
                        "multiplication is not compatible with the braiding "
                        "on basis triple (" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
                // (id (x) mul) sigma_1 sigma_2 = sigma (mul (x) id)
                const LinComb<TensorWord> mlhs = multiply_at(
                    sigma_.apply_adjacent(sigma_.apply_adjacent(start, 2), 1),
                    2);
                LinComb<TensorWord> mrhs;
                const std::vector<Rational>& ij = product(i, j);
                for (std::int32_t m = 1; m <= dim_; ++m)
                    if (ij[m - 1] != Rational(0))
                        mrhs += ij[m - 1] * sigma_.pair(m, k);
                if (mlhs != mrhs)
                    throw DomainError(
                        "multiplication is not compatible with the braiding "
                        "on basis triple (" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
            }
}

FiniteAlgebra FiniteAlgebra::componentwise(int dim, Braiding sigma) {
    std::vector<AlgebraEntry> entries;
    for (std::int32_t i = 1; i <= dim; ++i)
        entries.push_back({i, i, i, Rational(1)});
    return FiniteAlgebra(dim, entries, std::move(sigma));
}

FiniteAlgebra FiniteAlgebra::zero(int dim, Braiding sigma) {
    return FiniteAlgebra(dim, {}, std::move(sigma));
}

FiniteAlgebra FiniteAlgebra::from_json(const nlohmann::json& j) {
    try {
        int dim = j.at("dim").get<int>();
        std::vector<AlgebraEntry> entries;
        for (const auto& ej : j.at("mult")) {
            AlgebraEntry e;
            e.i = ej.at("i").get<std::int32_t>();
            e.j = ej.at("j").get<std::int32_t>();
            e.k = ej.at("k").get<std::int32_t>();
            e.c = rational_from_json(ej.at("c"));
            entries.push_back(std::move(e));
        }
        Braiding sigma = Braiding::from_json(j.at("braiding"));
        return FiniteAlgebra(dim, entries, std::move(sigma));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid algebra JSON: ") + e.what());
    }
}

nlohmann::json FiniteAlgebra::to_json() const {
    nlohmann::json j;
    j["dim"] = dim_;
    nlohmann::json mult = nlohmann::json::array();
    for (std::int32_t i = 1; i <= dim_; ++i)
        for (std::int32_t jj = 1; jj <= dim_; ++jj) {
            const std::vector<Rational>& cs = product(i, jj);
            for (std::int32_t k = 1; k <= dim_; ++k) {
                if (cs[k - 1] == Rational(0)) continue;
                nlohmann::json e;
                e["i"] = i;
                e["j"] = jj;
                e["k"] = k;
                e["c"] = rational_to_string(cs[k - 1]);
                mult.push_back(std::move(e));
            }
        }
    j["mult"] = std::move(mult);
    j["braiding"] = sigma_.to_json();
    return j;
}

const std::vector<Rational>& FiniteAlgebra::product(std::int32_t i,
                                                    std::int32_t j) const {
    if (i < 1 || i > dim_ || j < 1 || j > dim_)
        throw DomainError("basis index outside range");
    return table_[(i - 1) * dim_ + (j - 1)];
}

namespace {

AngElem lush_star_dec(const FiniteAlgebra& alg, const DecAng& a,
                      const DecAng& b);

AngElem lush_prec_dec(const FiniteAlgebra& alg, const DecAng& a,
                      const DecAng& b) {
    if (b.degree() == 0) {
        if (a.degree() == 0) throw DomainError("| < | is undefined");
        return AngElem::single(a);
    }
    if (a.degree() == 0) return AngElem::zero();
    const std::vector<DecAng> branches = ang_branches(a);
    const std::vector<std::int32_t> letters = ang_angle_letters(a);
    AngElem out;
    const AngElem tail = lush_star_dec(alg, branches.back(), b);
    for (const auto& t : tail.terms()) {
        std::vector<DecAng> next(branches.begin(), branches.end() - 1);
        next.push_back(t.elem);
        out += t.coeff * AngElem::single(ang_graft(next, letters));
    }
    return out;
}

AngElem lush_succ_dec(const FiniteAlgebra& alg, const DecAng& a,
                      const DecAng& b) {
    if (a.degree() == 0) {
        if (b.degree() == 0) throw DomainError("| > | is undefined");
        return AngElem::single(b);
    }
    if (b.degree() == 0) return AngElem::zero();
    const std::vector<DecAng> branches = ang_branches(b);
    const std::vector<std::int32_t> letters = ang_angle_letters(b);
    AngElem out;
    const AngElem head = lush_star_dec(alg, a, branches.front());
    for (const auto& t : head.terms()) {
        std::vector<DecAng> next;
        next.push_back(t.elem);
        next.insert(next.end(), branches.begin() + 1, branches.end());
        out += t.coeff * AngElem::single(ang_graft(next, letters));
    }
    return out;
}

AngElem lush_dot_dec(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b) {
    if (a.degree() == 0 && b.degree() == 0)
        throw DomainError("| . | is undefined");
    if (a.degree() == 0 || b.degree() == 0) return AngElem::zero();
    const std::vector<DecAng> lb = ang_branches(a);
    const std::vector<std::int32_t> ll = ang_angle_letters(a);
    const std::vector<DecAng> rb = ang_branches(b);
    const std::vector<std::int32_t> rl = ang_angle_letters(b);
    AngElem out;
    if (lb.back().degree() == 0 && rb.front().degree() == 0) {
        // Leaf meets leaf at the root: the adjacent angle letters multiply
        // through the algebra.
        const std::vector<Rational>& cs = alg.product(ll.back(), rl.front());
        std::vector<DecAng> next(lb.begin(), lb.end() - 1);
        next.insert(next.end(), rb.begin() + 1, rb.end());
        for (std::int32_t c = 1; c <= alg.dim(); ++c) {
            if (cs[c - 1] == Rational(0)) continue;
            std::vector<std::int32_t> ls(ll.begin(), ll.end() - 1);
            ls.push_back(c);
            ls.insert(ls.end(), rl.begin() + 1, rl.end());
            out += cs[c - 1] * AngElem::single(ang_graft(next, ls));
        }
        return out;
    }
    const AngElem middle = lush_star_dec(alg, lb.back(), rb.front());
    std::vector<std::int32_t> ls = ll;
    ls.insert(ls.end(), rl.begin(), rl.end());
    for (const auto& t : middle.terms()) {
        std::vector<DecAng> next(lb.begin(), lb.end() - 1);
        next.push_back(t.elem);
        next.insert(next.end(), rb.begin() + 1, rb.end());
        out += t.coeff * AngElem::single(ang_graft(next, ls));
    }
    return out;
}

AngElem lush_star_dec(const FiniteAlgebra& alg, const DecAng& a,
                      const DecAng& b) {
    if (a.degree() == 0) return AngElem::single(b);
    if (b.degree() == 0) return AngElem::single(a);
    return lush_prec_dec(alg, a, b) + lush_succ_dec(alg, a, b) +
           lush_dot_dec(alg, a, b);
}

template <class Op>
AngElem bilinear_alg(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b, Op&& op) {
    AngElem out;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            out += ta.coeff * tb.coeff * op(alg, ta.elem, tb.elem);
    return out;
}

// The carrier of the quotient operations, for evaluating trees through
// their structure map onto the span of lush trees.
struct LushModel {
    const FiniteAlgebra* alg;
    using Elem = AngElem;
    Elem gen(std::int32_t x) const { return AngElem::single(ang_vertex(x)); }
    Elem prec(const Elem& a, const Elem& b) const {
        return at_prec_lush(*alg, a, b);
    }
    Elem succ(const Elem& a, const Elem& b) const {
        return at_succ_lush(*alg, a, b);
    }
    Elem dot(const Elem& a, const Elem& b) const {
        return at_dot_lush(*alg, a, b);
    }
};

}  // namespace

AngElem at_prec_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b) {
    return lush_prec_dec(alg, a, b);
}

AngElem at_succ_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b) {
    return lush_succ_dec(alg, a, b);
}

AngElem at_dot_lush(const FiniteAlgebra& alg, const DecAng& a,
                    const DecAng& b) {
    return lush_dot_dec(alg, a, b);
}

AngElem at_star_lush(const FiniteAlgebra& alg, const DecAng& a,
                     const DecAng& b) {
    return lush_star_dec(alg, a, b);
}

AngElem at_prec_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b) {
    return bilinear_alg(alg, a, b,
                        [](const FiniteAlgebra& f, const DecAng& x,
                           const DecAng& y) { return lush_prec_dec(f, x, y); });
}

AngElem at_succ_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b) {
    return bilinear_alg(alg, a, b,
                        [](const FiniteAlgebra& f, const DecAng& x,
                           const DecAng& y) { return lush_succ_dec(f, x, y); });
}

AngElem at_dot_lush(const FiniteAlgebra& alg, const AngElem& a,
                    const AngElem& b) {
    return bilinear_alg(alg, a, b,
                        [](const FiniteAlgebra& f, const DecAng& x,
                           const DecAng& y) { return lush_dot_dec(f, x, y); });
}

AngElem at_star_lush(const FiniteAlgebra& alg, const AngElem& a,
                     const AngElem& b) {
    return bilinear_alg(alg, a, b,
                        [](const FiniteAlgebra& f, const DecAng& x,
                           const DecAng& y) { return lush_star_dec(f, x, y); });
}

AngElem reduce_mod_ideal(const FiniteAlgebra& alg, const DecAng& d) {
    if (d.degree() == 0) return AngElem::single(ang_unit());
    LushModel model{&alg};
    return universal_tridendriform(model, d);
}

AngElem reduce_mod_ideal(const FiniteAlgebra& alg, const AngElem& e) {
    return e.map([&](const DecAng& d) { return reduce_mod_ideal(alg, d); });
}

int ideal_dimension(const FiniteAlgebra& alg, int degree) {
    if (degree < 0) throw DomainError("degree must be nonnegative");
    std::vector<AngElem> images;
    for (const AngTree& shape : angular_shapes(degree)) {
        TensorWord word(degree, 1);
        while (true) {
            DecAng d{shape, word};
            images.push_back(AngElem::single(d) - reduce_mod_ideal(alg, d));
            int i = degree - 1;
            while (i >= 0 && word[i] == alg.dim()) word[i--] = 1;
            if (i < 0) break;
            ++word[i];
        }
        if (degree == 0) break;
    }
    std::map<std::string, std::size_t> columns;
    for (const AngElem& img : images)
        for (const auto& term : img.terms())
            columns.try_emplace(term.key, columns.size());
    if (columns.empty()) return 0;
    std::vector<std::vector<Rational>> rows;
    for (const AngElem& img : images) {
        std::vector<Rational> row(columns.size(), Rational(0));
        for (const auto& term : img.terms())
            row[columns.at(term.key)] = term.coeff;
        rows.push_back(std::move(row));
    }
    return matrix_rank(std::move(rows));
}

AngularHopf::AngularHopf(Braiding sigma) : sigma_(std::move(sigma)) {}

AngPair AngularHopf::braid_pair(const DecAng& a, const DecAng& b) const {
    LegRow<AngTree> row{{a.shape, b.shape}, word_concat(a.word, b.word)};
    AngPair out;
    const LinComb<LegRow<AngTree>> swapped = swap_legs(row, 1, sigma_);
    for (const auto& t : swapped.terms())
        out += t.coeff *
               AngPair::single({leg_dec(t.elem, 1), leg_dec(t.elem, 2)});
    return out;
}

AngPair AngularHopf::coproduct(const DecAng& d) const {
    if (d.degree() == 0) return AngPair::single({ang_unit(), ang_unit()});
    std::string key = canonical_key(d);
    auto it = coproduct_memo_.find(key);
    if (it != coproduct_memo_.end()) return it->second;

    const std::vector<DecAng> branches = ang_branches(d);
    const std::vector<std::int32_t> letters = ang_angle_letters(d);
    const int k = static_cast<int>(letters.size());

    // Sweep schedule: for each branch beyond the first, carry its left
    // coproduct leg from its slot down to just after the left legs already
    // collected.  Branch i's left leg starts at position 3i + 1 and walks
    // to position i + 1.
    std::vector<int> schedule;
    for (int i = 1; i <= k; ++i)
        for (int p = 3 * i; p >= i + 1; --p) schedule.push_back(p);

    std::vector<AngPair> branch_cops;
    branch_cops.reserve(branches.size());
    for (const DecAng& b : branches) branch_cops.push_back(coproduct(b));

    AngPair out = AngPair::single({d, ang_unit()});
    std::vector<std::size_t> idx(branch_cops.size(), 0);
    while (true) {
        Rational coeff(1);
        LegRow<AngTree> row;
        for (int i = 0; i <= k; ++i) {
            const auto& term = branch_cops[i].terms()[idx[i]];
            coeff *= term.coeff;
            row.legs.emplace_back(term.elem.left.shape);
            row.word.insert(row.word.end(), term.elem.left.word.begin(),
                            term.elem.left.word.end());
            row.legs.emplace_back(term.elem.right.shape);
            row.word.insert(row.word.end(), term.elem.right.word.begin(),
                            term.elem.right.word.end());
            if (i < k) {
                row.legs.emplace_back(std::nullopt);
                row.word.push_back(letters[i]);
            }
        }
        const LinComb<LegRow<AngTree>> rows =
            apply_schedule(row, schedule, sigma_);
        for (const auto& t : rows.terms()) {
            // Legs 1 .. k+1 hold the collected left parts; multiply them.
            AngElem star = AngElem::single(leg_dec(t.elem, 1));
            for (int i = 2; i <= k + 1; ++i)
                star = at_star(star, AngElem::single(leg_dec(t.elem, i)));
            // Legs k+2 .. 3k+2 alternate right parts and angle letters.
            std::vector<DecAng> parts;
            std::vector<std::int32_t> ls;
            for (int p = k + 2; p <= 3 * k + 2; ++p) {
                if ((p - (k + 2)) % 2 == 0)
                    parts.push_back(leg_dec(t.elem, p));
                else
                    ls.push_back(leg_letter(t.elem, p));
            }
            const DecAng grafted = ang_graft(parts, ls);
            out += coeff * t.coeff *
                   tensor_combine(star, AngElem::single(grafted));
        }
        int i = k;
        while (i >= 0 && ++idx[i] >= branch_cops[i].terms().size()) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    coproduct_memo_.emplace(std::move(key), out);
    return out;
}

AngPair AngularHopf::coproduct(const AngElem& e) const {
    return e.map([&](const DecAng& d) { return coproduct(d); });
}

AngPair AngularHopf::coproduct_cuts(const DecAng& d) const {
    const int n = d.degree();
    AngPair out;
    for (const AngCut& cut : angular_cuts(d.shape)) {
        Perm w = shuffle_from_positions(n, cut.positions);
        LinComb<TensorWord> words =
            sigma_.lift(perm_inverse(w), LinComb<TensorWord>::single(d.word));
        const int taken = static_cast<int>(cut.positions.size());
        for (const auto& tw : words.terms()) {
            AngElem left = AngElem::single(ang_unit());
            int offset = 0;
            for (const AngTree& part : cut.parts) {
                DecAng piece{part,
                             TensorWord(tw.elem.begin() + offset,
                                        tw.elem.begin() + offset +
                                            part.angles())};
                left = at_star(left, AngElem::single(piece));
                offset += part.angles();
            }
            DecAng right{cut.quotient,
                         TensorWord(tw.elem.begin() + taken, tw.elem.end())};
            out += tw.coeff * tensor_combine(left, AngElem::single(right));
        }
    }
    return out;
}

Rational AngularHopf::counit(const AngElem& e) const {
    return e.coeff_of_key("|");
}

AngElem AngularHopf::antipode(const DecAng& d) const {
    if (d.degree() == 0) return AngElem::single(ang_unit());
    std::string key = canonical_key(d);
    auto it = antipode_memo_.find(key);
    if (it != antipode_memo_.end()) return it->second;
    AngElem out = -AngElem::single(d);
    const AngPair cop = coproduct(d);
    for (const auto& t : cop.terms()) {
        if (t.elem.left.degree() == 0 || t.elem.right.degree() == 0) continue;
        out -= t.coeff * at_star(antipode(t.elem.left),
                                 AngElem::single(t.elem.right));
    }
    antipode_memo_.emplace(std::move(key), out);
    return out;
}

AngElem AngularHopf::antipode(const AngElem& e) const {
    return e.map([&](const DecAng& d) { return antipode(d); });
}

}  // namespace braidtrees
