#include <braidtrees/checks.hpp>

#include <braidtrees/binary_algebra.hpp>
#include <braidtrees/forest_algebra.hpp>
#include <braidtrees/legs.hpp>
#include <braidtrees/sequences.hpp>
#include <braidtrees/trees.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace braidtrees {

bool SuiteReport::all_pass() const {
    for (const IdentityResult& r : identities)
        if (!r.pass) return false;
    return true;
}

const IdentityResult* SuiteReport::find(const std::string& name) const {
    for (const IdentityResult& r : identities)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

// Accumulates the first counterexample of one identity.
class Identity {
  public:
    explicit Identity(std::string name) {
        result_.name = std::move(name);
    }
    bool ok() const { return result_.pass; }
    void fail(const std::string& witness) {
        if (result_.pass) {
            result_.pass = false;
            result_.counterexample = witness;
        }
    }
    IdentityResult take() { return std::move(result_); }

  private:
    IdentityResult result_;
};

std::vector<TensorWord> all_words(int len, int dim) {
    std::vector<TensorWord> out;
    TensorWord w(static_cast<std::size_t>(len), 1);
    if (len == 0) {
        out.push_back(w);
        return out;
    }
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == dim) {
            w[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

template <class S>
std::vector<Dec<S>> decorate_all(const std::vector<S>& shapes, int dim) {
    std::vector<Dec<S>> out;
    for (const S& s : shapes) {
        const std::vector<TensorWord> words = all_words(slot_count(s), dim);
        for (const TensorWord& w : words) out.push_back(Dec<S>{s, w});
    }
    return out;
}

std::vector<DecBin> all_binary(int degree, int dim) {
    return decorate_all(binary_shapes(degree), dim);
}

std::vector<DecForest> all_forest(int degree, int dim) {
    return decorate_all(forest_shapes(degree), dim);
}

std::vector<DecAng> all_angular(int degree, int dim) {
    return decorate_all(angular_shapes(degree), dim);
}

std::vector<DecAng> all_lush(int degree, int dim) {
    return decorate_all(lush_shapes(degree), dim);
}

template <class A>
std::string witness1(const char* na, const A& a) {
    return std::string(na) + " = " + canonical_key(a);
}

template <class A, class B>
std::string witness2(const char* na, const A& a, const char* nb, const B& b) {
    return witness1(na, a) + ", " + witness1(nb, b);
}

template <class A, class B, class C>
std::string witness3(const char* na, const A& a, const char* nb, const B& b,
                     const char* nc, const C& c) {
    return witness2(na, a, nb, b) + ", " + witness1(nc, c);
}

template <class A, class B, class C>
std::string key3(const A& a, const B& b, const C& c) {
    return canonical_key(a) + " (x) " + canonical_key(b) + " (x) " +
           canonical_key(c);
}

IdentityResult yang_baxter_identity(const Braiding& sigma) {
    Identity id("yang-baxter");
    const std::vector<std::string> failures = sigma.yang_baxter_failures();
    if (!failures.empty()) {
        std::string witness = failures.front();
        if (failures.size() > 1) {
            witness += " (and " + std::to_string(failures.size() - 1) +
                       " further failures)";
        }
        id.fail(witness);
    }
    return id.take();
}

// ------------------------------------------------------------------
// Shared identity drivers, generic over the shape family.

// sigma . (id (x) op) = (op (x) id) . sigma_2 . sigma_1 and the mirror
// sigma . (op (x) id) = (id (x) op) . sigma_1 . sigma_2, on basis triples.
template <class S>
IdentityResult braided_op_compat(
    const std::string& name, const Braiding& sigma,
    const std::function<LinComb<Pair2<Dec<S>, Dec<S>>>(const Dec<S>&,
                                                       const Dec<S>&)>& braid,
    const std::function<LinComb<Dec<S>>(const Dec<S>&, const Dec<S>&)>& op,
    const std::function<const std::vector<Dec<S>>&(int)>& basis, int max_deg) {
    using Pair = LinComb<Pair2<Dec<S>, Dec<S>>>;
    Identity id(name);
    for (int dx = 1; dx <= max_deg - 2 && id.ok(); ++dx)
        for (int dy = 1; dx + dy <= max_deg - 1 && id.ok(); ++dy)
            for (int dz = 1; dx + dy + dz <= max_deg && id.ok(); ++dz)
                for (const Dec<S>& x : basis(dx)) {
                    if (!id.ok()) break;
                    for (const Dec<S>& y : basis(dy)) {
                        if (!id.ok()) break;
                        for (const Dec<S>& z : basis(dz)) {
                            TensorWord word = x.word;
                            word.insert(word.end(), y.word.begin(),
                                        y.word.end());
                            word.insert(word.end(), z.word.begin(),
                                        z.word.end());
                            LegRow<S> row{{x.shape, y.shape, z.shape}, word};
                            const auto first_then_second =
                                apply_schedule(row, {1, 2}, sigma);
                            const auto second_then_first =
                                apply_schedule(row, {2, 1}, sigma);

                            Pair lhs, rhs;
                            const LinComb<Dec<S>> yz = op(y, z);
                            for (const auto& term : yz.terms())
                                lhs += term.coeff * braid(x, term.elem);
                            for (const auto& term : first_then_second.terms()) {
                                const LinComb<Dec<S>> prod =
                                    op(leg_dec(term.elem, 1),
                                       leg_dec(term.elem, 2));
                                for (const auto& p : prod.terms())
                                    rhs += term.coeff * p.coeff *
                                           Pair::single(
                                               {p.elem, leg_dec(term.elem, 3)});
                            }
                            if (lhs != rhs) {
                                id.fail(witness3("x", x, "y", y, "z", z) +
                                        " (product on the right)");
                                break;
                            }

                            Pair mlhs, mrhs;
                            const LinComb<Dec<S>> xy = op(x, y);
                            for (const auto& term : xy.terms())
                                mlhs += term.coeff * braid(term.elem, z);
                            for (const auto& term : second_then_first.terms()) {
                                const LinComb<Dec<S>> prod =
                                    op(leg_dec(term.elem, 2),
                                       leg_dec(term.elem, 3));
                                for (const auto& p : prod.terms())
                                    mrhs += term.coeff * p.coeff *
                                            Pair::single(
                                                {leg_dec(term.elem, 1),
                                                 p.elem});
                            }
                            if (mlhs != mrhs) {
                                id.fail(witness3("x", x, "y", y, "z", z) +
                                        " (product on the left)");
                                break;
                            }
                        }
                    }
                }
    return id.take();
}

// Crossing the unit over anything (and anything over the unit) only
// relabels the legs.
template <class S>
IdentityResult unit_crossing_identity(
    const std::function<LinComb<Pair2<Dec<S>, Dec<S>>>(const Dec<S>&,
                                                       const Dec<S>&)>& braid,
    const Dec<S>& unit,
    const std::function<const std::vector<Dec<S>>&(int)>& basis, int max_deg) {
    using Pair = LinComb<Pair2<Dec<S>, Dec<S>>>;
    Identity id("unit-crossing");
    for (int n = 0; n <= max_deg && id.ok(); ++n)
        for (const Dec<S>& x : basis(n)) {
            if (braid(unit, x) != Pair::single({x, unit})) {
                id.fail(witness1("x", x) + " (unit on the left)");
                break;
            }
            if (braid(x, unit) != Pair::single({unit, x})) {
                id.fail(witness1("x", x) + " (unit on the right)");
                break;
            }
        }
    return id.take();
}

// Everything the Hopf level shares between the three algebras: the two
// coproduct routes, coassociativity, counit laws, the product-coproduct
// law, the coalgebra and counit crossings, the antipode, and grading.
template <class S>
struct HopfApi {
    const Braiding* sigma = nullptr;
    std::function<const std::vector<Dec<S>>&(int)> basis;
    Dec<S> unit;
    std::function<LinComb<Dec<S>>(const LinComb<Dec<S>>&,
                                  const LinComb<Dec<S>>&)>
        mul;
    std::function<LinComb<Pair2<Dec<S>, Dec<S>>>(const Dec<S>&)> cop;
    std::function<LinComb<Pair2<Dec<S>, Dec<S>>>(const Dec<S>&)> cop_alt;
    std::function<Rational(const LinComb<Dec<S>>&)> counit;
    std::function<LinComb<Dec<S>>(const Dec<S>&)> antipode;
    std::function<LinComb<Pair2<Dec<S>, Dec<S>>>(const Dec<S>&, const Dec<S>&)>
        braid;
};

template <class S>
std::vector<IdentityResult> hopf_identities(const HopfApi<S>& api,
                                            int max_deg) {
    using DecS = Dec<S>;
    using Elem = LinComb<DecS>;
    using Pair = LinComb<Pair2<DecS, DecS>>;
    using Triple = LinComb<std::string>;
    std::vector<IdentityResult> out;

    const auto cop_elem = [&api](const Elem& e) {
        Pair acc;
        for (const auto& t : e.terms()) acc += t.coeff * api.cop(t.elem);
        return acc;
    };

    {
        Identity id("coproduct-route-agreement");
        for (int n = 0; n <= max_deg && id.ok(); ++n)
            for (const DecS& x : api.basis(n))
                if (api.cop(x) != api.cop_alt(x)) {
                    id.fail(witness1("x", x));
                    break;
                }
        out.push_back(id.take());
    }

    {
        Identity id("coassociativity");
        for (int n = 0; n <= max_deg && id.ok(); ++n)
            for (const DecS& x : api.basis(n)) {
                Triple lhs, rhs;
                const Pair cx = api.cop(x);
                for (const auto& term : cx.terms()) {
                    const Pair left_again = api.cop(term.elem.left);
                    for (const auto& inner : left_again.terms())
                        lhs += term.coeff * inner.coeff *
                               Triple::single(key3(inner.elem.left,
                                                   inner.elem.right,
                                                   term.elem.right));
                    const Pair right_again = api.cop(term.elem.right);
                    for (const auto& inner : right_again.terms())
                        rhs += term.coeff * inner.coeff *
                               Triple::single(key3(term.elem.left,
                                                   inner.elem.left,
                                                   inner.elem.right));
                }
                if (lhs != rhs) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        out.push_back(id.take());
    }

    {
        Identity id("counit-laws");
        for (int n = 0; n <= max_deg && id.ok(); ++n)
            for (const DecS& x : api.basis(n)) {
                Elem left, right;
                const Pair cx = api.cop(x);
                for (const auto& term : cx.terms()) {
                    left += term.coeff *
                            api.counit(Elem::single(term.elem.left)) *
                            Elem::single(term.elem.right);
                    right += term.coeff *
                             api.counit(Elem::single(term.elem.right)) *
                             Elem::single(term.elem.left);
                }
                if (left != Elem::single(x) || right != Elem::single(x)) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        out.push_back(id.take());
    }

    {
        Identity id("product-compatibility");
        for (int dx = 0; dx <= max_deg && id.ok(); ++dx)
            for (int dy = 0; dx + dy <= max_deg && id.ok(); ++dy)
                for (const DecS& x : api.basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecS& y : api.basis(dy)) {
                        const Elem prod =
                            api.mul(Elem::single(x), Elem::single(y));
                        const Pair lhs = cop_elem(prod);
                        Pair rhs;
                        const Pair cx = api.cop(x);
                        const Pair cy = api.cop(y);
                        for (const auto& tx : cx.terms())
                            for (const auto& ty : cy.terms()) {
                                LegRow<S> row;
                                row.legs = {tx.elem.left.shape,
                                            tx.elem.right.shape,
                                            ty.elem.left.shape,
                                            ty.elem.right.shape};
                                TensorWord word = tx.elem.left.word;
                                auto append = [&word](const TensorWord& w) {
                                    word.insert(word.end(), w.begin(),
                                                w.end());
                                };
                                append(tx.elem.right.word);
                                append(ty.elem.left.word);
                                append(ty.elem.right.word);
                                row.word = word;
                                const auto crossed =
                                    swap_legs(row, 2, *api.sigma);
                                for (const auto& cr : crossed.terms()) {
                                    const Elem a = api.mul(
                                        Elem::single(leg_dec(cr.elem, 1)),
                                        Elem::single(leg_dec(cr.elem, 2)));
                                    const Elem b = api.mul(
                                        Elem::single(leg_dec(cr.elem, 3)),
                                        Elem::single(leg_dec(cr.elem, 4)));
                                    rhs += tx.coeff * ty.coeff * cr.coeff *
                                           tensor_combine(a, b);
                                }
                            }
                        if (lhs != rhs) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        out.push_back(id.take());
    }

    {
        Identity id("coalgebra-crossing");
        for (int dx = 0; dx <= max_deg && id.ok(); ++dx)
            for (int dy = 0; dx + dy <= max_deg && id.ok(); ++dy)
                for (const DecS& x : api.basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecS& y : api.basis(dy)) {
                        const Pair bxy = api.braid(x, y);

                        // Split the left factor, then cross it leg by leg.
                        Triple lhs, rhs;
                        const Pair cx = api.cop(x);
                        for (const auto& tx : cx.terms()) {
                            LegRow<S> row;
                            row.legs = {tx.elem.left.shape,
                                        tx.elem.right.shape, y.shape};
                            TensorWord word = tx.elem.left.word;
                            word.insert(word.end(),
                                        tx.elem.right.word.begin(),
                                        tx.elem.right.word.end());
                            word.insert(word.end(), y.word.begin(),
                                        y.word.end());
                            row.word = word;
                            const auto moved =
                                apply_schedule(row, {2, 1}, *api.sigma);
                            for (const auto& m : moved.terms())
                                lhs += tx.coeff * m.coeff *
                                       Triple::single(
                                           key3(leg_dec(m.elem, 1),
                                                leg_dec(m.elem, 2),
                                                leg_dec(m.elem, 3)));
                        }
                        for (const auto& tb : bxy.terms()) {
                            const Pair cr = api.cop(tb.elem.right);
                            for (const auto& inner : cr.terms())
                                rhs += tb.coeff * inner.coeff *
                                       Triple::single(key3(tb.elem.left,
                                                           inner.elem.left,
                                                           inner.elem.right));
                        }
                        if (lhs != rhs) {
                            id.fail(witness2("x", x, "y", y) +
                                    " (splitting the left factor)");
                            break;
                        }

                        // Split the right factor, mirrored.
                        Triple mlhs, mrhs;
                        const Pair cy = api.cop(y);
                        for (const auto& ty : cy.terms()) {
                            LegRow<S> row;
                            row.legs = {x.shape, ty.elem.left.shape,
                                        ty.elem.right.shape};
                            TensorWord word = x.word;
                            word.insert(word.end(), ty.elem.left.word.begin(),
                                        ty.elem.left.word.end());
                            word.insert(word.end(),
                                        ty.elem.right.word.begin(),
                                        ty.elem.right.word.end());
                            row.word = word;
                            const auto moved =
                                apply_schedule(row, {1, 2}, *api.sigma);
                            for (const auto& m : moved.terms())
                                mlhs += ty.coeff * m.coeff *
                                        Triple::single(
                                            key3(leg_dec(m.elem, 1),
                                                 leg_dec(m.elem, 2),
                                                 leg_dec(m.elem, 3)));
                        }
                        for (const auto& tb : bxy.terms()) {
                            const Pair cl = api.cop(tb.elem.left);
                            for (const auto& inner : cl.terms())
                                mrhs += tb.coeff * inner.coeff *
                                        Triple::single(key3(inner.elem.left,
                                                            inner.elem.right,
                                                            tb.elem.right));
                        }
                        if (mlhs != mrhs) {
                            id.fail(witness2("x", x, "y", y) +
                                    " (splitting the right factor)");
                            break;
                        }
                    }
                }
        out.push_back(id.take());
    }

    {
        Identity id("counit-crossing");
        for (int dx = 0; dx <= max_deg && id.ok(); ++dx)
            for (int dy = 0; dx + dy <= max_deg && id.ok(); ++dy)
                for (const DecS& x : api.basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecS& y : api.basis(dy)) {
                        const Pair bxy = api.braid(x, y);
                        Elem first, second;
                        for (const auto& tb : bxy.terms()) {
                            first += tb.coeff *
                                     api.counit(Elem::single(tb.elem.left)) *
                                     Elem::single(tb.elem.right);
                            second += tb.coeff *
                                      api.counit(Elem::single(tb.elem.right)) *
                                      Elem::single(tb.elem.left);
                        }
                        const Rational ex = api.counit(Elem::single(x));
                        const Rational ey = api.counit(Elem::single(y));
                        if (first != ey * Elem::single(x) ||
                            second != ex * Elem::single(y)) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        out.push_back(id.take());
    }

    {
        Identity id("antipode-convolution");
        for (int n = 0; n <= max_deg && id.ok(); ++n)
            for (const DecS& x : api.basis(n)) {
                Elem left, right;
                const Pair cx = api.cop(x);
                for (const auto& term : cx.terms()) {
                    left += term.coeff *
                            api.mul(api.antipode(term.elem.left),
                                    Elem::single(term.elem.right));
                    right += term.coeff *
                             api.mul(Elem::single(term.elem.left),
                                     api.antipode(term.elem.right));
                }
                const Elem expected =
                    api.counit(Elem::single(x)) * Elem::single(api.unit);
                if (left != expected || right != expected) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        out.push_back(id.take());
    }

    {
        Identity id("coproduct-grading");
        for (int n = 0; n <= max_deg && id.ok(); ++n)
            for (const DecS& x : api.basis(n)) {
                if (!id.ok()) break;
                const Pair cx = api.cop(x);
                for (const auto& term : cx.terms())
                    if (term.elem.left.degree() + term.elem.right.degree() !=
                        n) {
                        id.fail(witness1("x", x));
                        break;
                    }
            }
        out.push_back(id.take());
    }

    return out;
}

}  // namespace

// ------------------------------------------------------------------

SuiteReport check_yang_baxter(const Braiding& sigma) {
    SuiteReport report;
    report.suite = "yang-baxter";
    report.identities.push_back(yang_baxter_identity(sigma));
    return report;
}

// ------------------------------------------------------------------

SuiteReport check_dendriform_suite(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "dendriform";
    const int dim = sigma.dim();
    report.identities.push_back(yang_baxter_identity(sigma));

    std::vector<std::vector<DecBin>> bas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        bas[static_cast<std::size_t>(n)] = all_binary(n, dim);
    const auto basis = [&bas](int n) -> const std::vector<DecBin>& {
        return bas[static_cast<std::size_t>(n)];
    };

    const DecBin unit = bin_unit();
    const BinElem unit_elem = BinElem::single(unit);

    {
        Identity id("unit-rules");
        if (bt_star(unit, unit) != unit_elem)
            id.fail("star of two bare leaves");
        bool threw = false;
        try {
            bt_prec(unit, unit);
        } catch (const DomainError&) {
            threw = true;
        }
        if (!threw) id.fail("prec accepted two bare leaves");
        threw = false;
        try {
            bt_succ(unit, unit);
        } catch (const DomainError&) {
            threw = true;
        }
        if (!threw) id.fail("succ accepted two bare leaves");
        for (int n = 1; n <= max_degree && id.ok(); ++n)
            for (const DecBin& x : basis(n)) {
                const BinElem e = BinElem::single(x);
                if (bt_prec(x, unit) != e || !bt_prec(unit, x).is_zero() ||
                    bt_succ(unit, x) != e || !bt_succ(x, unit).is_zero() ||
                    bt_star(unit, x) != e || bt_star(x, unit) != e) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        report.identities.push_back(id.take());
    }

    struct Axiom {
        const char* name;
        std::function<BinElem(const BinElem&, const BinElem&, const BinElem&)>
            lhs;
        std::function<BinElem(const BinElem&, const BinElem&, const BinElem&)>
            rhs;
    };
    const std::vector<Axiom> axioms = {
        {"prec-axiom",
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_prec(bt_prec(x, y), z);
         },
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_prec(x, bt_star(y, z));
         }},
        {"middle-axiom",
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_prec(bt_succ(x, y), z);
         },
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_succ(x, bt_prec(y, z));
         }},
        {"succ-axiom",
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_succ(x, bt_succ(y, z));
         },
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_succ(bt_star(x, y), z);
         }},
        {"star-associativity",
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_star(bt_star(x, y), z);
         },
         [](const BinElem& x, const BinElem& y, const BinElem& z) {
             return bt_star(x, bt_star(y, z));
         }}};
    for (const Axiom& axiom : axioms) {
        Identity id(axiom.name);
        for (int dx = 1; dx <= max_degree - 2 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_degree - 1 && id.ok(); ++dy)
                for (int dz = 1; dx + dy + dz <= max_degree && id.ok(); ++dz)
                    for (const DecBin& x : basis(dx)) {
                        if (!id.ok()) break;
                        for (const DecBin& y : basis(dy)) {
                            if (!id.ok()) break;
                            for (const DecBin& z : basis(dz)) {
                                const BinElem ex = BinElem::single(x);
                                const BinElem ey = BinElem::single(y);
                                const BinElem ez = BinElem::single(z);
                                if (axiom.lhs(ex, ey, ez) !=
                                    axiom.rhs(ex, ey, ez)) {
                                    id.fail(witness3("x", x, "y", y, "z", z));
                                    break;
                                }
                            }
                        }
                    }
        report.identities.push_back(id.take());
    }

    BinaryHopf hopf(sigma);
    const auto braid = [&hopf](const DecBin& a, const DecBin& b) {
        return hopf.braid_pair(a, b);
    };
    const std::function<const std::vector<DecBin>&(int)> basis_fn = basis;
    report.identities.push_back(braided_op_compat<BinTree>(
        "braided-prec-compat", sigma, braid,
        [](const DecBin& a, const DecBin& b) { return bt_prec(a, b); },
        basis_fn, max_degree));
    report.identities.push_back(braided_op_compat<BinTree>(
        "braided-succ-compat", sigma, braid,
        [](const DecBin& a, const DecBin& b) { return bt_succ(a, b); },
        basis_fn, max_degree));
    report.identities.push_back(braided_op_compat<BinTree>(
        "braided-star-compat", sigma, braid,
        [](const DecBin& a, const DecBin& b) { return bt_star(a, b); },
        basis_fn, max_degree));
    report.identities.push_back(
        unit_crossing_identity<BinTree>(braid, unit, basis_fn, max_degree));

    {
        // Crossing a grafted tree over a partner: the root letter and the
        // two subtrees cross one leg at a time, last leg first, and the
        // graft reassembles on the right.
        Identity id("graft-crossing-left");
        for (int dl = 0; dl <= max_degree - 1 && id.ok(); ++dl)
            for (int dr = 0; dl + dr <= max_degree - 1 && id.ok(); ++dr)
                for (int du = 0; dl + dr + 1 + du <= max_degree && id.ok();
                     ++du)
                    for (const DecBin& l : basis(dl)) {
                        if (!id.ok()) break;
                        for (const DecBin& r : basis(dr)) {
                            if (!id.ok()) break;
                            for (std::int32_t v = 1; v <= dim && id.ok(); ++v)
                                for (const DecBin& u : basis(du)) {
                                    const DecBin grafted =
                                        bin_graft(l, v, r);
                                    LegRow<BinTree> row;
                                    row.legs = {l.shape, std::nullopt,
                                                r.shape, u.shape};
                                    TensorWord word = l.word;
                                    word.push_back(v);
                                    word.insert(word.end(), r.word.begin(),
                                                r.word.end());
                                    word.insert(word.end(), u.word.begin(),
                                                u.word.end());
                                    row.word = word;
                                    const auto moved = apply_schedule(
                                        row, {3, 2, 1}, sigma);
                                    BinPair rhs;
                                    for (const auto& m : moved.terms())
                                        rhs += m.coeff *
                                               BinPair::single(
                                                   {leg_dec(m.elem, 1),
                                                    bin_graft(
                                                        leg_dec(m.elem, 2),
                                                        leg_letter(m.elem, 3),
                                                        leg_dec(m.elem, 4))});
                                    if (hopf.braid_pair(grafted, u) != rhs) {
                                        id.fail(witness2("x", grafted, "y",
                                                         u));
                                        break;
                                    }
                                }
                        }
                    }
        report.identities.push_back(id.take());
    }

    {
        Identity id("graft-crossing-right");
        for (int dl = 0; dl <= max_degree - 1 && id.ok(); ++dl)
            for (int dr = 0; dl + dr <= max_degree - 1 && id.ok(); ++dr)
                for (int du = 0; dl + dr + 1 + du <= max_degree && id.ok();
                     ++du)
                    for (const DecBin& l : basis(dl)) {
                        if (!id.ok()) break;
                        for (const DecBin& r : basis(dr)) {
                            if (!id.ok()) break;
                            for (std::int32_t v = 1; v <= dim && id.ok(); ++v)
                                for (const DecBin& u : basis(du)) {
                                    const DecBin grafted =
                                        bin_graft(l, v, r);
                                    LegRow<BinTree> row;
                                    row.legs = {u.shape, l.shape,
                                                std::nullopt, r.shape};
                                    TensorWord word = u.word;
                                    word.insert(word.end(), l.word.begin(),
                                                l.word.end());
                                    word.push_back(v);
                                    word.insert(word.end(), r.word.begin(),
                                                r.word.end());
                                    row.word = word;
                                    const auto moved = apply_schedule(
                                        row, {1, 2, 3}, sigma);
                                    BinPair rhs;
                                    for (const auto& m : moved.terms())
                                        rhs += m.coeff *
                                               BinPair::single(
                                                   {bin_graft(
                                                        leg_dec(m.elem, 1),
                                                        leg_letter(m.elem, 2),
                                                        leg_dec(m.elem, 3)),
                                                    leg_dec(m.elem, 4)});
                                    if (hopf.braid_pair(u, grafted) != rhs) {
                                        id.fail(witness2("x", u, "y",
                                                         grafted));
                                        break;
                                    }
                                }
                        }
                    }
        report.identities.push_back(id.take());
    }

    {
        Identity id("grading");
        for (int dx = 1; dx <= max_degree - 1 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecBin& x : basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecBin& y : basis(dy)) {
                        bool good = true;
                        const BinElem products[] = {
                            bt_prec(x, y), bt_succ(x, y), bt_star(x, y)};
                        for (const BinElem& p : products)
                            for (const auto& term : p.terms())
                                if (term.elem.degree() != dx + dy) good = false;
                        const BinPair crossed = hopf.braid_pair(x, y);
                        for (const auto& term : crossed.terms())
                            if (term.elem.left.degree() != dy ||
                                term.elem.right.degree() != dx)
                                good = false;
                        if (!good) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    return report;
}

// ------------------------------------------------------------------

SuiteReport check_binary_hopf_suite(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "hopf-bt";
    report.identities.push_back(yang_baxter_identity(sigma));

    const int dim = sigma.dim();
    std::vector<std::vector<DecBin>> bas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        bas[static_cast<std::size_t>(n)] = all_binary(n, dim);

    BinaryHopf hopf(sigma);
    HopfApi<BinTree> api;
    api.sigma = &sigma;
    api.basis = [&bas](int n) -> const std::vector<DecBin>& {
        return bas[static_cast<std::size_t>(n)];
    };
    api.unit = bin_unit();
    api.mul = [](const BinElem& a, const BinElem& b) { return bt_star(a, b); };
    api.cop = [&hopf](const DecBin& d) { return hopf.coproduct(d); };
    api.cop_alt = [&hopf](const DecBin& d) { return hopf.coproduct_cuts(d); };
    api.counit = [&hopf](const BinElem& e) { return hopf.counit(e); };
    api.antipode = [&hopf](const DecBin& d) { return hopf.antipode(d); };
    api.braid = [&hopf](const DecBin& a, const DecBin& b) {
        return hopf.braid_pair(a, b);
    };

    std::vector<IdentityResult> rest = hopf_identities(api, max_degree);
    for (IdentityResult& r : rest) report.identities.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------------

SuiteReport check_forest_hopf_suite(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "hopf-rt";
    report.identities.push_back(yang_baxter_identity(sigma));

    const int dim = sigma.dim();
    std::vector<std::vector<DecForest>> bas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        bas[static_cast<std::size_t>(n)] = all_forest(n, dim);

    ForestHopf hopf(sigma);
    HopfApi<Forest> api;
    api.sigma = &sigma;
    api.basis = [&bas](int n) -> const std::vector<DecForest>& {
        return bas[static_cast<std::size_t>(n)];
    };
    api.unit = forest_unit();
    api.mul = [](const ForestElem& a, const ForestElem& b) {
        return forest_concat(a, b);
    };
    api.cop = [&hopf](const DecForest& d) { return hopf.coproduct(d); };
    api.cop_alt = [&hopf](const DecForest& d) {
        return hopf.coproduct_cocycle(d);
    };
    api.counit = [&hopf](const ForestElem& e) { return hopf.counit(e); };
    api.antipode = [&hopf](const DecForest& d) { return hopf.antipode(d); };
    api.braid = [&hopf](const DecForest& a, const DecForest& b) {
        return hopf.braid_pair(a, b);
    };

    std::vector<IdentityResult> shared = hopf_identities(api, max_degree);
    for (IdentityResult& r : shared) report.identities.push_back(std::move(r));

    {
        // Grafting under a fresh root inserts one group-like term and
        // crosses the root letter over the left coproduct leg.
        Identity id("root-graft-recursion");
        for (int n = 0; n <= max_degree - 1 && id.ok(); ++n)
            for (const DecForest& f : api.basis(n)) {
                if (!id.ok()) break;
                for (std::int32_t v = 1; v <= dim; ++v) {
                    const DecForest tree = bplus(v, f);
                    ForestPair rhs =
                        ForestPair::single({tree, forest_unit()});
                    const ForestPair cf = hopf.coproduct(f);
                    for (const auto& term : cf.terms()) {
                        LegRow<Forest> row;
                        row.legs = {std::nullopt, term.elem.left.shape,
                                    term.elem.right.shape};
                        TensorWord word;
                        word.push_back(v);
                        word.insert(word.end(), term.elem.left.word.begin(),
                                    term.elem.left.word.end());
                        word.insert(word.end(), term.elem.right.word.begin(),
                                    term.elem.right.word.end());
                        row.word = word;
                        const auto moved = apply_schedule(row, {1}, sigma);
                        for (const auto& m : moved.terms())
                            rhs += term.coeff * m.coeff *
                                   ForestPair::single(
                                       {leg_dec(m.elem, 1),
                                        bplus(leg_letter(m.elem, 2),
                                              leg_dec(m.elem, 3))});
                    }
                    if (hopf.coproduct(tree) != rhs) {
                        id.fail(witness2("v", std::string("e") +
                                                  std::to_string(v),
                                         "F", f));
                        break;
                    }
                }
            }
        report.identities.push_back(id.take());
    }

    {
        // Crossing a grafted factor: the root letter and the grafted
        // forest cross the partner one leg at a time.
        Identity id("graft-crossing");
        for (int nf = 0; nf <= max_degree - 1 && id.ok(); ++nf)
            for (int ng = 0; nf + 1 + ng <= max_degree && id.ok(); ++ng)
                for (const DecForest& f : api.basis(nf)) {
                    if (!id.ok()) break;
                    for (const DecForest& g : api.basis(ng)) {
                        if (!id.ok()) break;
                        for (std::int32_t v = 1; v <= dim; ++v) {
                            const DecForest tree = bplus(v, f);

                            LegRow<Forest> row;
                            row.legs = {std::nullopt, f.shape, g.shape};
                            TensorWord word;
                            word.push_back(v);
                            word.insert(word.end(), f.word.begin(),
                                        f.word.end());
                            word.insert(word.end(), g.word.begin(),
                                        g.word.end());
                            row.word = word;
                            const auto moved =
                                apply_schedule(row, {2, 1}, sigma);
                            ForestPair rhs;
                            for (const auto& m : moved.terms())
                                rhs += m.coeff *
                                       ForestPair::single(
                                           {leg_dec(m.elem, 1),
                                            bplus(leg_letter(m.elem, 2),
                                                  leg_dec(m.elem, 3))});
                            if (hopf.braid_pair(tree, g) != rhs) {
                                id.fail(witness2("x", tree, "y", g) +
                                        " (grafted factor on the left)");
                                break;
                            }

                            LegRow<Forest> mrow;
                            mrow.legs = {g.shape, std::nullopt, f.shape};
                            TensorWord mword = g.word;
                            mword.push_back(v);
                            mword.insert(mword.end(), f.word.begin(),
                                         f.word.end());
                            mrow.word = mword;
                            const auto mmoved =
                                apply_schedule(mrow, {1, 2}, sigma);
                            ForestPair mrhs;
                            for (const auto& m : mmoved.terms())
                                mrhs += m.coeff *
                                        ForestPair::single(
                                            {bplus(leg_letter(m.elem, 1),
                                                   leg_dec(m.elem, 2)),
                                             leg_dec(m.elem, 3)});
                            if (hopf.braid_pair(g, tree) != mrhs) {
                                id.fail(witness2("x", g, "y", tree) +
                                        " (grafted factor on the right)");
                                break;
                            }
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    return report;
}

// ------------------------------------------------------------------

SuiteReport check_theta_iso(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "theta";
    report.identities.push_back(yang_baxter_identity(sigma));

    const int dim = sigma.dim();
    std::vector<std::vector<DecBin>> bbas(
        static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::vector<DecForest>> fbas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        bbas[static_cast<std::size_t>(n)] = all_binary(n, dim);
        fbas[static_cast<std::size_t>(n)] = all_forest(n, dim);
    }
    BinaryHopf bhopf(sigma);
    ForestHopf fhopf(sigma);

    {
        Identity id("mutual-inverses");
        for (int n = 0; n <= max_degree && id.ok(); ++n) {
            for (const DecBin& x : bbas[static_cast<std::size_t>(n)])
                if (theta_inverse(theta(x)) != BinElem::single(x)) {
                    id.fail(witness1("x", x));
                    break;
                }
            if (!id.ok()) break;
            for (const DecForest& f : fbas[static_cast<std::size_t>(n)])
                if (theta(theta_inverse(f)) != ForestElem::single(f)) {
                    id.fail(witness1("F", f));
                    break;
                }
        }
        report.identities.push_back(id.take());
    }

    {
        Identity id("product-morphism");
        for (int dx = 0; dx <= max_degree && id.ok(); ++dx)
            for (int dy = 0; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecBin& x : bbas[static_cast<std::size_t>(dx)]) {
                    if (!id.ok()) break;
                    for (const DecBin& y :
                         bbas[static_cast<std::size_t>(dy)]) {
                        const BinElem prod = bt_star(BinElem::single(x),
                                                     BinElem::single(y));
                        if (theta(prod) !=
                            forest_concat(theta(x), theta(y))) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("coproduct-intertwining");
        for (int n = 0; n <= max_degree && id.ok(); ++n)
            for (const DecBin& x : bbas[static_cast<std::size_t>(n)]) {
                ForestPair lhs;
                const BinPair cx = bhopf.coproduct(x);
                for (const auto& term : cx.terms())
                    lhs += term.coeff * tensor_combine(theta(term.elem.left),
                                                       theta(term.elem.right));
                const ForestElem tx = theta(x);
                ForestPair rhs;
                for (const auto& term : tx.terms())
                    rhs += term.coeff * fhopf.coproduct(term.elem);
                if (lhs != rhs) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        report.identities.push_back(id.take());
    }

    {
        Identity id("counit-intertwining");
        for (int n = 0; n <= max_degree && id.ok(); ++n)
            for (const DecBin& x : bbas[static_cast<std::size_t>(n)])
                if (fhopf.counit(theta(x)) !=
                    bhopf.counit(BinElem::single(x))) {
                    id.fail(witness1("x", x));
                    break;
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("antipode-intertwining");
        for (int n = 0; n <= max_degree && id.ok(); ++n)
            for (const DecBin& x : bbas[static_cast<std::size_t>(n)])
                if (theta(bhopf.antipode(x)) != fhopf.antipode(theta(x))) {
                    id.fail(witness1("x", x));
                    break;
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("braiding-intertwining");
        for (int dx = 0; dx <= max_degree && id.ok(); ++dx)
            for (int dy = 0; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecBin& x : bbas[static_cast<std::size_t>(dx)]) {
                    if (!id.ok()) break;
                    for (const DecBin& y :
                         bbas[static_cast<std::size_t>(dy)]) {
                        ForestPair lhs;
                        const BinPair bxy = bhopf.braid_pair(x, y);
                        for (const auto& term : bxy.terms())
                            lhs += term.coeff *
                                   tensor_combine(theta(term.elem.left),
                                                  theta(term.elem.right));
                        ForestPair rhs;
                        const ForestElem tx = theta(x);
                        const ForestElem ty = theta(y);
                        for (const auto& a : tx.terms())
                            for (const auto& b : ty.terms())
                                rhs += a.coeff * b.coeff *
                                       fhopf.braid_pair(a.elem, b.elem);
                        if (lhs != rhs) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("grading");
        for (int n = 0; n <= max_degree && id.ok(); ++n) {
            for (const DecBin& x : bbas[static_cast<std::size_t>(n)]) {
                if (!id.ok()) break;
                const ForestElem tx = theta(x);
                for (const auto& term : tx.terms())
                    if (term.elem.degree() != n) {
                        id.fail(witness1("x", x));
                        break;
                    }
            }
            if (!id.ok()) break;
            for (const DecForest& f : fbas[static_cast<std::size_t>(n)]) {
                if (!id.ok()) break;
                const BinElem tf = theta_inverse(f);
                for (const auto& term : tf.terms())
                    if (term.elem.degree() != n) {
                        id.fail(witness1("F", f));
                        break;
                    }
            }
        }
        report.identities.push_back(id.take());
    }

    {
        Identity id("dimension-count");
        for (int n = 0; n <= 6 && id.ok(); ++n) {
            const Int expected = catalan(n);
            if (Int(binary_shapes(n).size()) != expected ||
                Int(forest_shapes(n).size()) != expected)
                id.fail("degree " + std::to_string(n));
        }
        report.identities.push_back(id.take());
    }

    return report;
}

// ------------------------------------------------------------------

namespace {

// The seven splitting axioms of the three-product structure plus the
// associativity of their sum, over any implementation of the operations.
struct TriOps {
    std::function<AngElem(const AngElem&, const AngElem&)> prec;
    std::function<AngElem(const AngElem&, const AngElem&)> succ;
    std::function<AngElem(const AngElem&, const AngElem&)> dot;
    std::function<AngElem(const AngElem&, const AngElem&)> star;
};

void append_tridendriform_axioms(
    std::vector<IdentityResult>& out, const std::string& prefix,
    const TriOps& ops,
    const std::function<const std::vector<DecAng>&(int)>& basis,
    int max_deg) {
    struct Axiom {
        const char* name;
        std::function<AngElem(const TriOps&, const AngElem&, const AngElem&,
                              const AngElem&)>
            lhs;
        std::function<AngElem(const TriOps&, const AngElem&, const AngElem&,
                              const AngElem&)>
            rhs;
    };
    const std::vector<Axiom> axioms = {
        {"prec-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.prec(o.prec(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.prec(x, o.star(y, z)); }},
        {"succ-prec-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.prec(o.succ(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.succ(x, o.prec(y, z)); }},
        {"succ-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.succ(x, o.succ(y, z)); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.succ(o.star(x, y), z); }},
        {"dot-prec-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.prec(o.dot(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(x, o.prec(y, z)); }},
        {"prec-dot-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(o.prec(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(x, o.succ(y, z)); }},
        {"succ-dot-axiom",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(o.succ(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.succ(x, o.dot(y, z)); }},
        {"dot-associativity",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(o.dot(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.dot(x, o.dot(y, z)); }},
        {"star-associativity",
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.star(o.star(x, y), z); },
         [](const TriOps& o, const AngElem& x, const AngElem& y,
            const AngElem& z) { return o.star(x, o.star(y, z)); }}};
    for (const Axiom& axiom : axioms) {
        Identity id(prefix + axiom.name);
        for (int dx = 1; dx <= max_deg - 2 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_deg - 1 && id.ok(); ++dy)
                for (int dz = 1; dx + dy + dz <= max_deg && id.ok(); ++dz)
                    for (const DecAng& x : basis(dx)) {
                        if (!id.ok()) break;
                        for (const DecAng& y : basis(dy)) {
                            if (!id.ok()) break;
                            for (const DecAng& z : basis(dz)) {
                                const AngElem ex = AngElem::single(x);
                                const AngElem ey = AngElem::single(y);
                                const AngElem ez = AngElem::single(z);
                                if (axiom.lhs(ops, ex, ey, ez) !=
                                    axiom.rhs(ops, ex, ey, ez)) {
                                    id.fail(witness3("x", x, "y", y, "z", z));
                                    break;
                                }
                            }
                        }
                    }
        out.push_back(id.take());
    }
}

}  // namespace

SuiteReport check_tridendriform_suite(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "tridendriform";
    const int dim = sigma.dim();
    report.identities.push_back(yang_baxter_identity(sigma));

    std::vector<std::vector<DecAng>> bas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        bas[static_cast<std::size_t>(n)] = all_angular(n, dim);
    const std::function<const std::vector<DecAng>&(int)> basis =
        [&bas](int n) -> const std::vector<DecAng>& {
        return bas[static_cast<std::size_t>(n)];
    };

    const DecAng unit = ang_unit();
    const AngElem unit_elem = AngElem::single(unit);

    {
        Identity id("unit-rules");
        if (at_star(unit, unit) != unit_elem)
            id.fail("star of two bare leaves");
        const std::vector<std::pair<const char*,
                                    AngElem (*)(const DecAng&, const DecAng&)>>
            augmented = {{"prec", &at_prec}, {"succ", &at_succ},
                         {"dot", &at_dot}};
        for (const auto& [name, op] : augmented) {
            bool threw = false;
            try {
                op(unit, unit);
            } catch (const DomainError&) {
                threw = true;
            }
            if (!threw)
                id.fail(std::string(name) + " accepted two bare leaves");
        }
        for (int n = 1; n <= max_degree && id.ok(); ++n)
            for (const DecAng& x : basis(n)) {
                const AngElem e = AngElem::single(x);
                if (at_prec(x, unit) != e || !at_prec(unit, x).is_zero() ||
                    at_succ(unit, x) != e || !at_succ(x, unit).is_zero() ||
                    !at_dot(unit, x).is_zero() ||
                    !at_dot(x, unit).is_zero() || at_star(unit, x) != e ||
                    at_star(x, unit) != e) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        report.identities.push_back(id.take());
    }

    TriOps free_ops;
    free_ops.prec = [](const AngElem& a, const AngElem& b) {
        return at_prec(a, b);
    };
    free_ops.succ = [](const AngElem& a, const AngElem& b) {
        return at_succ(a, b);
    };
    free_ops.dot = [](const AngElem& a, const AngElem& b) {
        return at_dot(a, b);
    };
    free_ops.star = [](const AngElem& a, const AngElem& b) {
        return at_star(a, b);
    };
    append_tridendriform_axioms(report.identities, "", free_ops, basis,
                                max_degree);

    AngularHopf hopf(sigma);
    const auto braid = [&hopf](const DecAng& a, const DecAng& b) {
        return hopf.braid_pair(a, b);
    };
    report.identities.push_back(braided_op_compat<AngTree>(
        "braided-prec-compat", sigma, braid,
        [](const DecAng& a, const DecAng& b) { return at_prec(a, b); }, basis,
        max_degree));
    report.identities.push_back(braided_op_compat<AngTree>(
        "braided-succ-compat", sigma, braid,
        [](const DecAng& a, const DecAng& b) { return at_succ(a, b); }, basis,
        max_degree));
    report.identities.push_back(braided_op_compat<AngTree>(
        "braided-dot-compat", sigma, braid,
        [](const DecAng& a, const DecAng& b) { return at_dot(a, b); }, basis,
        max_degree));
    report.identities.push_back(braided_op_compat<AngTree>(
        "braided-star-compat", sigma, braid,
        [](const DecAng& a, const DecAng& b) { return at_star(a, b); }, basis,
        max_degree));
    report.identities.push_back(
        unit_crossing_identity<AngTree>(braid, unit, basis, max_degree));

    {
        // Crossing a grafted tree over a partner works branch by branch:
        // split into branches and angle letters, cross each leg, regraft.
        Identity id("graft-crossing-left");
        for (int dt = 1; dt <= max_degree && id.ok(); ++dt)
            for (int du = 0; dt + du <= max_degree && id.ok(); ++du)
                for (const DecAng& t : basis(dt)) {
                    if (!id.ok()) break;
                    for (const DecAng& u : basis(du)) {
                        const std::vector<DecAng> branches = ang_branches(t);
                        const std::vector<std::int32_t> letters =
                            ang_angle_letters(t);
                        const int k = static_cast<int>(letters.size());
                        LegRow<AngTree> row;
                        TensorWord word;
                        for (int i = 0; i <= k; ++i) {
                            row.legs.emplace_back(
                                branches[static_cast<std::size_t>(i)].shape);
                            const TensorWord& bw =
                                branches[static_cast<std::size_t>(i)].word;
                            word.insert(word.end(), bw.begin(), bw.end());
                            if (i < k) {
                                row.legs.emplace_back(std::nullopt);
                                word.push_back(
                                    letters[static_cast<std::size_t>(i)]);
                            }
                        }
                        row.legs.emplace_back(u.shape);
                        word.insert(word.end(), u.word.begin(), u.word.end());
                        row.word = word;
                        std::vector<int> descending;
                        for (int p = 2 * k + 1; p >= 1; --p)
                            descending.push_back(p);
                        const auto moved =
                            apply_schedule(row, descending, sigma);
                        AngPair rhs;
                        for (const auto& m : moved.terms()) {
                            std::vector<DecAng> parts;
                            std::vector<std::int32_t> ls;
                            for (int i = 2; i <= 2 * k + 2; ++i) {
                                if (i % 2 == 0)
                                    parts.push_back(leg_dec(m.elem, i));
                                else
                                    ls.push_back(leg_letter(m.elem, i));
                            }
                            rhs += m.coeff *
                                   AngPair::single({leg_dec(m.elem, 1),
                                                    ang_graft(parts, ls)});
                        }
                        if (hopf.braid_pair(t, u) != rhs) {
                            id.fail(witness2("x", t, "y", u));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("graft-crossing-right");
        for (int dt = 1; dt <= max_degree && id.ok(); ++dt)
            for (int du = 0; dt + du <= max_degree && id.ok(); ++du)
                for (const DecAng& t : basis(dt)) {
                    if (!id.ok()) break;
                    for (const DecAng& u : basis(du)) {
                        const std::vector<DecAng> branches = ang_branches(t);
                        const std::vector<std::int32_t> letters =
                            ang_angle_letters(t);
                        const int k = static_cast<int>(letters.size());
                        LegRow<AngTree> row;
                        TensorWord word = u.word;
                        row.legs.emplace_back(u.shape);
                        for (int i = 0; i <= k; ++i) {
                            row.legs.emplace_back(
                                branches[static_cast<std::size_t>(i)].shape);
                            const TensorWord& bw =
                                branches[static_cast<std::size_t>(i)].word;
                            word.insert(word.end(), bw.begin(), bw.end());
                            if (i < k) {
                                row.legs.emplace_back(std::nullopt);
                                word.push_back(
                                    letters[static_cast<std::size_t>(i)]);
                            }
                        }
                        row.word = word;
                        std::vector<int> ascending;
                        for (int p = 1; p <= 2 * k + 1; ++p)
                            ascending.push_back(p);
                        const auto moved =
                            apply_schedule(row, ascending, sigma);
                        AngPair rhs;
                        for (const auto& m : moved.terms()) {
                            std::vector<DecAng> parts;
                            std::vector<std::int32_t> ls;
                            for (int i = 1; i <= 2 * k + 1; ++i) {
                                if (i % 2 == 1)
                                    parts.push_back(leg_dec(m.elem, i));
                                else
                                    ls.push_back(leg_letter(m.elem, i));
                            }
                            rhs += m.coeff *
                                   AngPair::single(
                                       {ang_graft(parts, ls),
                                        leg_dec(m.elem, 2 * k + 2)});
                        }
                        if (hopf.braid_pair(u, t) != rhs) {
                            id.fail(witness2("x", u, "y", t));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("grading");
        for (int dx = 1; dx <= max_degree - 1 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecAng& x : basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecAng& y : basis(dy)) {
                        bool good = true;
                        const AngElem products[] = {
                            at_prec(x, y), at_succ(x, y), at_dot(x, y),
                            at_star(x, y)};
                        for (const AngElem& p : products)
                            for (const auto& term : p.terms())
                                if (term.elem.degree() != dx + dy)
                                    good = false;
                        const AngPair crossed = hopf.braid_pair(x, y);
                        for (const auto& term : crossed.terms())
                            if (term.elem.left.degree() != dy ||
                                term.elem.right.degree() != dx)
                                good = false;
                        if (!good) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    return report;
}

// ------------------------------------------------------------------

SuiteReport check_angular_hopf_suite(const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "hopf-at";
    report.identities.push_back(yang_baxter_identity(sigma));

    const int dim = sigma.dim();
    std::vector<std::vector<DecAng>> bas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n)
        bas[static_cast<std::size_t>(n)] = all_angular(n, dim);

    AngularHopf hopf(sigma);
    HopfApi<AngTree> api;
    api.sigma = &sigma;
    api.basis = [&bas](int n) -> const std::vector<DecAng>& {
        return bas[static_cast<std::size_t>(n)];
    };
    api.unit = ang_unit();
    api.mul = [](const AngElem& a, const AngElem& b) { return at_star(a, b); };
    api.cop = [&hopf](const DecAng& d) { return hopf.coproduct(d); };
    api.cop_alt = [&hopf](const DecAng& d) { return hopf.coproduct_cuts(d); };
    api.counit = [&hopf](const AngElem& e) { return hopf.counit(e); };
    api.antipode = [&hopf](const DecAng& d) { return hopf.antipode(d); };
    api.braid = [&hopf](const DecAng& a, const DecAng& b) {
        return hopf.braid_pair(a, b);
    };

    std::vector<IdentityResult> rest = hopf_identities(api, max_degree);
    for (IdentityResult& r : rest) report.identities.push_back(std::move(r));
    return report;
}

// ------------------------------------------------------------------

SuiteReport check_lush_quotient_suite(int dim,
                                      const std::vector<AlgebraEntry>& entries,
                                      const Braiding& sigma, int max_degree) {
    SuiteReport report;
    report.suite = "lush-quotient";

    // Constructing the finite algebra validates associativity and its
    // compatibility with the braiding; report that validation as the
    // suite's first identity and stop when it fails, because every
    // later identity needs the algebra.
    std::vector<FiniteAlgebra> holder;
    {
        Identity id("algebra-validates");
        try {
            holder.push_back(FiniteAlgebra(dim, entries, sigma));
        } catch (const DomainError& e) {
            id.fail(e.what());
        }
        report.identities.push_back(id.take());
    }
    if (holder.empty()) return report;
    const FiniteAlgebra& alg = holder.front();

    std::vector<std::vector<DecAng>> abas(
        static_cast<std::size_t>(max_degree) + 1);
    std::vector<std::vector<DecAng>> lbas(
        static_cast<std::size_t>(max_degree) + 1);
    for (int n = 0; n <= max_degree; ++n) {
        abas[static_cast<std::size_t>(n)] = all_angular(n, dim);
        lbas[static_cast<std::size_t>(n)] = all_lush(n, dim);
    }
    const std::function<const std::vector<DecAng>&(int)> angular_basis =
        [&abas](int n) -> const std::vector<DecAng>& {
        return abas[static_cast<std::size_t>(n)];
    };
    const std::function<const std::vector<DecAng>&(int)> lush_basis =
        [&lbas](int n) -> const std::vector<DecAng>& {
        return lbas[static_cast<std::size_t>(n)];
    };

    TriOps lush_ops;
    lush_ops.prec = [&alg](const AngElem& a, const AngElem& b) {
        return at_prec_lush(alg, a, b);
    };
    lush_ops.succ = [&alg](const AngElem& a, const AngElem& b) {
        return at_succ_lush(alg, a, b);
    };
    lush_ops.dot = [&alg](const AngElem& a, const AngElem& b) {
        return at_dot_lush(alg, a, b);
    };
    lush_ops.star = [&alg](const AngElem& a, const AngElem& b) {
        return at_star_lush(alg, a, b);
    };

    {
        Identity id("lush-closure");
        for (int dx = 1; dx <= max_degree - 1 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecAng& x : lush_basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecAng& y : lush_basis(dy)) {
                        const AngElem ex = AngElem::single(x);
                        const AngElem ey = AngElem::single(y);
                        const AngElem images[] = {
                            lush_ops.prec(ex, ey), lush_ops.succ(ex, ey),
                            lush_ops.dot(ex, ey), lush_ops.star(ex, ey)};
                        bool good = true;
                        for (const AngElem& image : images)
                            for (const auto& term : image.terms())
                                if (!is_lush(term.elem.shape)) good = false;
                        if (!good) {
                            id.fail(witness2("x", x, "y", y));
                            break;
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    append_tridendriform_axioms(report.identities, "quotient-", lush_ops,
                                lush_basis, max_degree);

    {
        Identity id("reduce-idempotent");
        for (int n = 0; n <= max_degree && id.ok(); ++n)
            for (const DecAng& x : angular_basis(n)) {
                const AngElem once = reduce_mod_ideal(alg, x);
                if (reduce_mod_ideal(alg, once) != once) {
                    id.fail(witness1("x", x));
                    break;
                }
            }
        report.identities.push_back(id.take());
    }

    {
        Identity id("reduce-fixes-lush");
        for (int n = 0; n <= max_degree && id.ok(); ++n)
            for (const DecAng& x : lush_basis(n))
                if (reduce_mod_ideal(alg, x) != AngElem::single(x)) {
                    id.fail(witness1("x", x));
                    break;
                }
        report.identities.push_back(id.take());
    }

    {
        Identity id("reduce-morphism");
        const std::vector<
            std::pair<AngElem (*)(const DecAng&, const DecAng&),
                      std::function<AngElem(const AngElem&, const AngElem&)>>>
            op_pairs = {{&at_prec, lush_ops.prec},
                        {&at_succ, lush_ops.succ},
                        {&at_dot, lush_ops.dot},
                        {&at_star, lush_ops.star}};
        for (int dx = 1; dx <= max_degree - 1 && id.ok(); ++dx)
            for (int dy = 1; dx + dy <= max_degree && id.ok(); ++dy)
                for (const DecAng& x : angular_basis(dx)) {
                    if (!id.ok()) break;
                    for (const DecAng& y : angular_basis(dy)) {
                        if (!id.ok()) break;
                        const AngElem rx = reduce_mod_ideal(alg, x);
                        const AngElem ry = reduce_mod_ideal(alg, y);
                        for (const auto& [free_op, lush_op] : op_pairs) {
                            if (reduce_mod_ideal(alg, free_op(x, y)) !=
                                lush_op(rx, ry)) {
                                id.fail(witness2("x", x, "y", y));
                                break;
                            }
                        }
                    }
                }
        report.identities.push_back(id.take());
    }

    {
        // The ideal is generated by "dot of two vertices minus its value
        // in the finite algebra"; reduce kills the generators and their
        // products with anything.
        Identity id("reduce-kills-generators");
        for (std::int32_t a = 1; a <= dim && id.ok(); ++a)
            for (std::int32_t b = 1; b <= dim && id.ok(); ++b) {
                AngElem gen = at_dot(ang_vertex(a), ang_vertex(b));
                const std::vector<Rational>& coeffs = alg.product(a, b);
                for (std::int32_t c = 1; c <= dim; ++c)
                    gen -= coeffs[static_cast<std::size_t>(c - 1)] *
                           AngElem::single(ang_vertex(c));
                if (!reduce_mod_ideal(alg, gen).is_zero()) {
                    id.fail("letters e" + std::to_string(a) + ", e" +
                            std::to_string(b));
                    break;
                }
                if (max_degree < 3) continue;
                for (std::int32_t c = 1; c <= dim; ++c) {
                    const AngElem v = AngElem::single(ang_vertex(c));
                    const AngElem products[] = {
                        at_prec(gen, v), at_succ(v, gen), at_dot(gen, v),
                        at_star(v, gen)};
                    for (const AngElem& p : products)
                        if (!reduce_mod_ideal(alg, p).is_zero()) {
                            id.fail("letters e" + std::to_string(a) + ", e" +
                                    std::to_string(b) + " against e" +
                                    std::to_string(c));
                            break;
                        }
                    if (!id.ok()) break;
                }
            }
        report.identities.push_back(id.take());
    }

    {
        Identity id("ideal-dimension-count");
        const int rank_cap = dim == 1 ? 4 : 3;
        for (int n = 0; n <= std::min(max_degree, rank_cap) && id.ok(); ++n) {
            int expected = static_cast<int>(angular_shapes(n).size()) -
                           static_cast<int>(lush_shapes(n).size());
            for (int i = 0; i < n; ++i) expected *= dim;
            if (ideal_dimension(alg, n) != expected)
                id.fail("degree " + std::to_string(n));
        }
        report.identities.push_back(id.take());
    }

    {
        // The ideal is also a coideal: both-side reduction of the
        // coproduct kills the generators and their products.
        Identity id("biideal-containment");
        AngularHopf hopf(alg.braiding());
        const auto reduced_cop = [&](const AngElem& e) {
            AngPair out;
            for (const auto& term : e.terms()) {
                const AngPair cop = hopf.coproduct(term.elem);
                for (const auto& p : cop.terms()) {
                    const AngElem left = reduce_mod_ideal(alg, p.elem.left);
                    const AngElem right = reduce_mod_ideal(alg, p.elem.right);
                    out += term.coeff * p.coeff * tensor_combine(left, right);
                }
            }
            return out;
        };
        for (std::int32_t a = 1; a <= dim && id.ok(); ++a)
            for (std::int32_t b = 1; b <= dim && id.ok(); ++b) {
                AngElem gen = at_dot(ang_vertex(a), ang_vertex(b));
                const std::vector<Rational>& coeffs = alg.product(a, b);
                for (std::int32_t c = 1; c <= dim; ++c)
                    gen -= coeffs[static_cast<std::size_t>(c - 1)] *
                           AngElem::single(ang_vertex(c));
                if (!reduced_cop(gen).is_zero()) {
                    id.fail("letters e" + std::to_string(a) + ", e" +
                            std::to_string(b));
                    break;
                }
                if (max_degree < 3) continue;
                for (std::int32_t c = 1; c <= dim; ++c) {
                    const AngElem v = AngElem::single(ang_vertex(c));
                    const AngElem products[] = {
                        at_prec(gen, v), at_succ(v, gen), at_dot(gen, v),
                        at_star(v, gen)};
                    for (const AngElem& p : products)
                        if (!reduced_cop(p).is_zero()) {
                            id.fail("letters e" + std::to_string(a) + ", e" +
                                    std::to_string(b) + " against e" +
                                    std::to_string(c));
                            break;
                        }
                    if (!id.ok()) break;
                }
            }
        report.identities.push_back(id.take());
    }

    return report;
}

}  // namespace braidtrees
