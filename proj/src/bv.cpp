#include "logcurves/bv.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "logcurves/betti.hpp"

namespace logcurves {

namespace {

Rational ksign(i64 e) { return (e & 1) ? Rational(-1) : Rational(1); }

int word_degree(const BlockWord& w) {
    int d = static_cast<int>(w.size()) - 1;
    for (const auto& g : w) d += g.dec ? 1 : 0;
    return d;
}

int word_min_gen(const BlockWord& w) {
    int m = INT_MAX;
    for (const auto& g : w) m = std::min(m, g.gen);
    return m;
}

// sort blocks by minimal generator, tracking the Koszul sign of the shuffle
Rational sort_blocks(std::vector<BlockWord>& blocks) {
    Rational sign = 1;
    for (size_t i = 1; i < blocks.size(); ++i)
        for (size_t j = i; j > 0 && word_min_gen(blocks[j - 1]) > word_min_gen(blocks[j]); --j) {
            sign *= ksign(static_cast<i64>(word_degree(blocks[j - 1])) * word_degree(blocks[j]));
            std::swap(blocks[j - 1], blocks[j]);
        }
    return sign;
}

BVElement word_elem(BlockWord w, const Rational& c) {
    BVMonomial m;
    m.blocks.push_back(std::move(w));
    BVElement e;
    e.add_term(std::move(m), c);
    return e;
}

// append a letter to every (single-block) word of an element: left-normed
// bracketing with a letter whose index exceeds the head needs no rewriting
BVElement append_letter(const BVElement& words, DecGen g) {
    BVElement out;
    for (const auto& [m, c] : words.terms) {
        if (m.blocks.size() != 1) throw consistency_error("append_letter expects single-block monomials");
        BlockWord w = m.blocks[0];
        w.push_back(g);
        out = out + word_elem(std::move(w), c);
    }
    return out;
}

// bracket of two basis words, rewritten into basis words
BVElement bracket_words(const BlockWord& a, const BlockWord& b) {
    const int da = word_degree(a), db = word_degree(b);
    if (word_min_gen(b) < word_min_gen(a))
        return bracket_words(b, a).scaled(-ksign(static_cast<i64>(da + 1) * (db + 1)));
    if (b.size() == 1) return append_letter(word_elem(a, 1), b[0]);
    BlockWord u(b.begin(), b.end() - 1);
    DecGen g = b.back();
    // [a,[u,g]] = [[a,u],g] + (-1)^{(|a|+1)(|u|+1)} [u,[a,g]]
    BVElement t1 = append_letter(bracket_words(a, u), g);
    BlockWord ag = a;
    ag.push_back(g);
    BVElement t2 = bracket_words(u, ag).scaled(ksign(static_cast<i64>(da + 1) * (word_degree(u) + 1)));
    return t1 + t2;
}

BVElement mono_elem(const BVMonomial& m, const Rational& c) {
    BVElement e;
    e.add_term(m, c);
    return e;
}

BVMonomial tail_mono(const BVMonomial& m) {
    BVMonomial r;
    r.blocks.assign(m.blocks.begin() + 1, m.blocks.end());
    return r;
}

BVElement bracket_mono(const BVMonomial& m1, const BVMonomial& m2);

BVElement delta_word(const BlockWord& w) {
    if (w.size() == 1) {
        if (w[0].dec) return BVElement::zero();
        return word_elem({{w[0].gen, true}}, 1);
    }
    BlockWord u(w.begin(), w.end() - 1);
    DecGen g = w.back();
    // D[u,g] = [Du,g] - (-1)^{|u|} [u,Dg]
    BVElement out = append_letter(delta_word(u), g);
    if (!g.dec) {
        BlockWord udg = u;
        udg.push_back({g.gen, true});
        out = out + word_elem(std::move(udg), -ksign(word_degree(u)));
    }
    return out;
}

BVElement delta_mono(const BVMonomial& m) {
    if (m.blocks.empty()) return BVElement::zero();
    if (m.blocks.size() == 1) return delta_word(m.blocks[0]);
    const BlockWord& a = m.blocks[0];
    BVMonomial rest = tail_mono(m);
    const int da = word_degree(a);
    BVMonomial amono;
    amono.blocks.push_back(a);
    // D(a r) = Da r + (-1)^{|a|} a Dr + (-1)^{|a|} [a, r]
    BVElement out = bv_mul(delta_word(a), mono_elem(rest, 1));
    out = out + bv_mul(mono_elem(amono, 1), delta_mono(rest)).scaled(ksign(da));
    out = out + bracket_mono(amono, rest).scaled(ksign(da));
    return out;
}

BVElement bracket_mono(const BVMonomial& m1, const BVMonomial& m2) {
    const int d1 = m1.degree(), d2 = m2.degree();
    if (m1.blocks.empty() || m2.blocks.empty()) return BVElement::zero(); // bracket with a scalar
    if (m1.blocks.size() == 1 && m2.blocks.size() == 1) return bracket_words(m1.blocks[0], m2.blocks[0]);
    if (m2.blocks.size() == 1)
        return bracket_mono(m2, m1).scaled(-ksign(static_cast<i64>(d1 + 1) * (d2 + 1)));
    // [a, bc] = [a,b] c + (-1)^{(|a|+1)|b|} b [a,c]
    BVMonomial b;
    b.blocks.push_back(m2.blocks[0]);
    BVMonomial c = tail_mono(m2);
    const int db = word_degree(m2.blocks[0]);
    BVElement t1 = bv_mul(bracket_mono(m1, b), mono_elem(c, 1));
    BVElement t2 = bv_mul(mono_elem(b, 1), bracket_mono(m1, c)).scaled(ksign(static_cast<i64>(d1 + 1) * db));
    return t1 + t2;
}

std::vector<int> mono_support(const BVMonomial& m) { return m.support(); }

void check_disjoint(const BVMonomial& a, const BVMonomial& b) {
    auto sa = mono_support(a), sb = mono_support(b);
    std::vector<int> inter;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
    if (!inter.empty()) throw std::invalid_argument("operands share generator x" + std::to_string(inter[0]));
}

} // namespace

int BVMonomial::degree() const {
    int d = 0;
    for (const auto& b : blocks) d += word_degree(b);
    return d;
}

std::vector<int> BVMonomial::support() const {
    std::vector<int> s;
    for (const auto& b : blocks)
        for (const auto& g : b) s.push_back(g.gen);
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw consistency_error("monomial repeats a generator");
    return s;
}

std::string BVMonomial::str() const {
    if (blocks.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) os << "*";
        const auto& b = blocks[i];
        auto letter = [](const DecGen& g) {
            return std::string(g.dec ? "d" : "") + "x" + std::to_string(g.gen);
        };
        if (b.size() == 1) os << letter(b[0]);
        else {
            os << "[";
            for (size_t j = 0; j < b.size(); ++j) {
                if (j) os << ",";
                os << letter(b[j]);
            }
            os << "]";
        }
    }
    return os.str();
}

BVElement BVElement::generator(int i) {
    if (i < 1) throw std::invalid_argument("generator index must be >= 1");
    return word_elem({{i, false}}, 1);
}

BVElement BVElement::monomial(BVMonomial m, const Rational& c) { return mono_elem(m, c); }

void BVElement::add_term(BVMonomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

BVElement BVElement::operator+(const BVElement& o) const {
    BVElement r = *this;
    for (const auto& [m, c] : o.terms) r.add_term(m, c);
    return r;
}

BVElement BVElement::operator-(const BVElement& o) const { return *this + o.scaled(-1); }

BVElement BVElement::scaled(const Rational& c) const {
    BVElement r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms) r.terms.emplace(m, k * c);
    return r;
}

std::string BVElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a.str() << "*";
        os << m.str();
        first = false;
    }
    return os.str();
}

BVElement bv_mul(const BVElement& a, const BVElement& b) {
    BVElement out;
    for (const auto& [m1, c1] : a.terms)
        for (const auto& [m2, c2] : b.terms) {
            check_disjoint(m1, m2);
            std::vector<BlockWord> blocks = m1.blocks;
            blocks.insert(blocks.end(), m2.blocks.begin(), m2.blocks.end());
            Rational sign = sort_blocks(blocks);
            BVMonomial m;
            m.blocks = std::move(blocks);
            out.add_term(std::move(m), c1 * c2 * sign);
        }
    return out;
}

BVElement bv_bracket(const BVElement& a, const BVElement& b) {
    BVElement out;
    for (const auto& [m1, c1] : a.terms)
        for (const auto& [m2, c2] : b.terms) {
            check_disjoint(m1, m2);
            out = out + bracket_mono(m1, m2).scaled(c1 * c2);
        }
    return out;
}

BVElement bv_delta(const BVElement& a) {
    BVElement out;
    for (const auto& [m, c] : a.terms) out = out + delta_mono(m).scaled(c);
    return out;
}

BVElement bv_sigma(const std::vector<int>& sigma, const BVElement& a) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> seen(n + 1, 0);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v]++) throw std::invalid_argument("not a permutation");
    }
    BVElement out;
    for (const auto& [m, c] : a.terms) {
        BVElement value = mono_elem(BVMonomial{}, 1);
        for (const auto& block : m.blocks) {
            BVElement bval;
            bool first = true;
            for (const auto& g : block) {
                if (g.gen < 1 || g.gen > n) throw std::invalid_argument("generator outside permutation range");
                BVElement letter = word_elem({{sigma[g.gen - 1], g.dec}}, 1);
                bval = first ? letter : bv_bracket(bval, letter);
                first = false;
            }
            value = bv_mul(value, bval);
        }
        out = out + value.scaled(c);
    }
    return out;
}

namespace {

int element_arity(const BVElement& e, const char* what) {
    if (e.is_zero()) return 0;
    std::vector<int> support = e.terms.begin()->first.support();
    const int n = static_cast<int>(support.size());
    for (int k = 0; k < n; ++k)
        if (support[k] != k + 1)
            throw std::invalid_argument(std::string(what) + " must be supported on generators 1..n");
    for (const auto& [m, c] : e.terms)
        if (m.support() != support)
            throw std::invalid_argument(std::string(what) + " mixes multilinear components");
    return n;
}

BVElement relabel_monotone(const BVElement& e, const std::vector<int>& image) {
    // image is strictly increasing on the support, so canonical form is
    // preserved letter by letter
    BVElement out;
    for (const auto& [m, c] : e.terms) {
        BVMonomial r = m;
        for (auto& b : r.blocks)
            for (auto& g : b) g.gen = image[g.gen];
        out.add_term(std::move(r), c);
    }
    return out;
}

} // namespace

BVElement bv_compose(const BVElement& a, const BVElement& b, int i) {
    if (a.is_zero()) return BVElement::zero();
    const int n = element_arity(a, "outer element");
    if (i < 1 || i > n) throw std::invalid_argument("composition slot out of range");
    if (b.is_zero()) return BVElement::zero();
    const int m = element_arity(b, "inner element");

    std::vector<int> outer_image(n + 1, 0);
    for (int j = 1; j <= n; ++j) outer_image[j] = j < i ? j : (j == i ? i : j + m - 1);
    std::vector<int> inner_image(m + 1, 0);
    for (int k = 1; k <= m; ++k) inner_image[k] = i + k - 1;

    BVElement A = relabel_monotone(a, outer_image);
    BVElement B = relabel_monotone(b, inner_image);
    BVElement DB = bv_delta(B);

    BVElement out;
    for (const auto& [mono, c] : A.terms) {
        BVElement value = mono_elem(BVMonomial{}, 1);
        for (const auto& block : mono.blocks) {
            bool has_slot = false;
            for (const auto& g : block)
                if (g.gen == i) has_slot = true;
            BVElement bval;
            if (!has_slot) {
                bval = word_elem(block, 1);
            } else {
                bool first = true;
                for (const auto& g : block) {
                    BVElement letter =
                        g.gen == i ? (g.dec ? DB : B) : word_elem({{g.gen, g.dec}}, 1);
                    bval = first ? letter : bv_bracket(bval, letter);
                    first = false;
                }
            }
            value = bv_mul(value, bval);
        }
        out = out + value.scaled(c);
    }
    return out;
}

namespace {

void set_partitions(const std::vector<int>& gens, size_t idx, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (idx == gens.size()) {
        out.push_back(current);
        return;
    }
    // index loop: the recursion grows and shrinks `current`, so references
    // into it do not survive the call
    const size_t fixed = current.size();
    for (size_t b = 0; b < fixed; ++b) {
        current[b].push_back(gens[idx]);
        set_partitions(gens, idx + 1, current, out);
        current[b].pop_back();
    }
    current.push_back({gens[idx]});
    set_partitions(gens, idx + 1, current, out);
    current.pop_back();
}

std::vector<BlockWord> words_on_block(const std::vector<int>& block, bool with_decorations) {
    std::vector<BlockWord> out;
    std::vector<int> rest(block.begin() + 1, block.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> order;
        order.push_back(block[0]);
        order.insert(order.end(), rest.begin(), rest.end());
        const int k = static_cast<int>(order.size());
        const int masks = with_decorations ? (1 << k) : 1;
        for (int mask = 0; mask < masks; ++mask) {
            BlockWord w;
            for (int j = 0; j < k; ++j) w.push_back({order[j], (mask >> j & 1) != 0});
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<BVMonomial> basis_on(const std::vector<int>& gens, bool with_decorations) {
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> current;
    set_partitions(gens, 0, current, partitions);

    std::vector<BVMonomial> out;
    for (auto& part : partitions) {
        for (auto& block : part) std::sort(block.begin(), block.end());
        std::sort(part.begin(), part.end(),
                  [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
        std::vector<std::vector<BlockWord>> options;
        for (const auto& block : part) options.push_back(words_on_block(block, with_decorations));
        std::vector<size_t> pick(options.size(), 0);
        while (true) {
            BVMonomial m;
            for (size_t j = 0; j < options.size(); ++j) m.blocks.push_back(options[j][pick[j]]);
            out.push_back(std::move(m));
            size_t pos = options.size();
            while (pos > 0 && ++pick[pos - 1] == options[pos - 1].size()) pick[--pos] = 0;
            if (pos == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> range_gens(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return g;
}

} // namespace

std::vector<BVMonomial> bv_basis(int n) {
    if (n < 1) throw std::invalid_argument("basis needs arity >= 1");
    return basis_on(range_gens(n), true);
}

std::vector<i64> bv_dims(int n) {
    std::vector<i64> dims(2 * n, 0);
    for (const auto& m : bv_basis(n)) dims[m.degree()] += 1;
    return dims;
}

std::vector<i64> ger_dims(int n) {
    if (n < 1) throw std::invalid_argument("basis needs arity >= 1");
    std::vector<i64> dims(n, 0);
    for (const auto& m : basis_on(range_gens(n), false)) dims[m.degree()] += 1;
    return dims;
}

CircleElement circle_classes(const BVElement& e, int n) {
    CircleElement out;
    for (const auto& [m, c] : e.terms) {
        bool flat = true;
        for (const auto& b : m.blocks)
            if (b.size() != 1) flat = false;
        if (!flat) continue;
        std::vector<int> eps(n, 0);
        for (const auto& b : m.blocks) {
            if (b[0].gen < 1 || b[0].gen > n) throw std::invalid_argument("generator outside arity range");
            eps[b[0].gen - 1] = b[0].dec ? 1 : 0;
        }
        out[eps] += c;
        if (out[eps] == 0) out.erase(eps);
    }
    return out;
}

CircleElement circle_insert(const CircleElement& a, const CircleElement& b, int i) {
    CircleElement out;
    auto add = [&out](std::vector<int> key, const Rational& c) {
        if (c == 0) return;
        auto it = out.emplace(std::move(key), 0).first;
        it->second += c;
        if (it->second == 0) out.erase(it);
    };
    for (const auto& [eps, c1] : a) {
        if (i < 1 || i > static_cast<int>(eps.size())) throw std::invalid_argument("slot out of range");
        for (const auto& [phi, c2] : b) {
            const int m = static_cast<int>(phi.size());
            std::vector<int> head(eps.begin(), eps.begin() + i - 1);
            std::vector<int> tail(eps.begin() + i, eps.end());
            if (eps[i - 1] == 0) {
                std::vector<int> key = head;
                key.insert(key.end(), phi.begin(), phi.end());
                key.insert(key.end(), tail.begin(), tail.end());
                add(std::move(key), c1 * c2);
            } else {
                int below = 0;
                for (int k = 0; k < m; ++k) {
                    if (phi[k] == 0) {
                        std::vector<int> key = head;
                        std::vector<int> mid = phi;
                        mid[k] = 1;
                        key.insert(key.end(), mid.begin(), mid.end());
                        key.insert(key.end(), tail.begin(), tail.end());
                        add(std::move(key), c1 * c2 * ksign(below));
                    }
                    below += phi[k];
                }
            }
        }
    }
    return out;
}

FormalModel assemble_formal_model(int n) {
    if (n < 1) throw std::invalid_argument("model needs arity >= 1");
    FormalModel fm;
    fm.arity = n;
    fm.dims = bv_dims(n);
    fm.expected = poincare_fld(n).coeffs();
    fm.lie_dims = ger_dims(n);
    fm.lie_expected = poincare_ld(n).coeffs();
    fm.matches = fm.dims == fm.expected && fm.lie_dims == fm.lie_expected;
    bool square_zero = true;
    for (const auto& m : bv_basis(n))
        if (!bv_delta(bv_delta(mono_elem(m, 1))).is_zero()) square_zero = false;
    fm.zero_differential = fm.matches && square_zero;
    fm.certificate_level = "consistency-level certificate";
    return fm;
}

PushoutReport ld_pushout(int n) {
    // the cross-check route reads the (n+1)-mark open table, so one mark
    // is below the floor
    if (n < 2) throw std::invalid_argument("pushout needs arity >= 2");
    PushoutReport r;
    r.n = n;
    r.ld = poincare_ld(n);
    r.from_framed = poincare_fld(n).divide_exact(Poly::binomial_power(1, n));
    r.from_open = Poly::binomial_power(1, 1) * betti_open(n + 1);
    r.exact = r.from_framed == r.ld && r.from_open == r.ld;
    return r;
}

namespace {

void ordered_splits(int k, int parts, std::vector<std::vector<std::vector<int>>>& out) {
    // all assignments of generators 1..k onto `parts` labeled nonempty sets
    std::vector<int> assign(k, 0);
    while (true) {
        std::vector<std::vector<int>> split(parts);
        for (int g = 0; g < k; ++g) split[assign[g]].push_back(g + 1);
        bool all_nonempty = true;
        for (const auto& s : split)
            if (s.empty()) all_nonempty = false;
        if (all_nonempty) out.push_back(split);
        int pos = k - 1;
        while (pos >= 0 && assign[pos] == parts - 1) assign[pos--] = 0;
        if (pos < 0) break;
        ++assign[pos];
    }
}

} // namespace

AxiomReport check_bv_relations(int max_arity) {
    if (max_arity < 2) throw std::invalid_argument("relation sweep needs max_arity >= 2");
    AxiomReport rep;
    auto fail = [&rep](const std::string& s) {
        if (rep.failures.size() < 32) rep.failures.push_back(s);
    };

    for (int k = 2; k <= max_arity; ++k) {
        std::vector<std::vector<std::vector<int>>> pairs;
        ordered_splits(k, 2, pairs);
        for (const auto& split : pairs) {
            for (const auto& ma : basis_on(split[0], true))
                for (const auto& mb : basis_on(split[1], true)) {
                    BVElement a = mono_elem(ma, 1), b = mono_elem(mb, 1);
                    const int da = ma.degree(), db = mb.degree();

                    rep.cases++;
                    if (!(bv_mul(a, b) == bv_mul(b, a).scaled(ksign(static_cast<i64>(da) * db))))
                        fail("graded commutativity fails for " + ma.str() + ", " + mb.str());

                    rep.cases++;
                    if (!(bv_bracket(a, b) ==
                          bv_bracket(b, a).scaled(-ksign(static_cast<i64>(da + 1) * (db + 1)))))
                        fail("shifted antisymmetry fails for " + ma.str() + ", " + mb.str());

                    rep.cases++;
                    BVElement bv_lhs = bv_delta(bv_mul(a, b));
                    BVElement bv_rhs = bv_mul(bv_delta(a), b) + bv_mul(a, bv_delta(b)).scaled(ksign(da)) +
                                       bv_bracket(a, b).scaled(ksign(da));
                    if (!(bv_lhs == bv_rhs))
                        fail("odd-operator product relation fails for " + ma.str() + ", " + mb.str());

                    rep.cases++;
                    BVElement der_lhs = bv_delta(bv_bracket(a, b));
                    BVElement der_rhs =
                        bv_bracket(bv_delta(a), b) + bv_bracket(a, bv_delta(b)).scaled(-ksign(da));
                    if (!(der_lhs == der_rhs))
                        fail("odd-operator bracket derivation fails for " + ma.str() + ", " + mb.str());
                }
        }

        std::vector<std::vector<std::vector<int>>> triples;
        ordered_splits(k, 3, triples);
        for (const auto& split : triples) {
            for (const auto& ma : basis_on(split[0], true))
                for (const auto& mb : basis_on(split[1], true))
                    for (const auto& mc : basis_on(split[2], true)) {
                        BVElement a = mono_elem(ma, 1), b = mono_elem(mb, 1), c = mono_elem(mc, 1);
                        const int da = ma.degree(), db = mb.degree();

                        rep.cases++;
                        BVElement jac_lhs = bv_bracket(a, bv_bracket(b, c));
                        BVElement jac_rhs =
                            bv_bracket(bv_bracket(a, b), c) +
                            bv_bracket(b, bv_bracket(a, c)).scaled(ksign(static_cast<i64>(da + 1) * (db + 1)));
                        if (!(jac_lhs == jac_rhs))
                            fail("graded Jacobi fails for " + ma.str() + ", " + mb.str() + ", " + mc.str());

                        rep.cases++;
                        BVElement lei_lhs = bv_bracket(a, bv_mul(b, c));
                        BVElement lei_rhs =
                            bv_mul(bv_bracket(a, b), c) +
                            bv_mul(b, bv_bracket(a, c)).scaled(ksign(static_cast<i64>(da + 1) * db));
                        if (!(lei_lhs == lei_rhs))
                            fail("bracket Leibniz fails for " + ma.str() + ", " + mb.str() + ", " + mc.str());

                        rep.cases++;
                        BVElement sev_lhs = bv_delta(bv_mul(bv_mul(a, b), c));
                        BVElement sev_rhs = bv_mul(bv_delta(bv_mul(a, b)), c) +
                                            bv_mul(a, bv_delta(bv_mul(b, c))).scaled(ksign(da)) +
                                            bv_mul(b, bv_delta(bv_mul(a, c)))
                                                .scaled(ksign(static_cast<i64>(da + 1) * db)) -
                                            bv_mul(bv_delta(a), bv_mul(b, c)) -
                                            bv_mul(a, bv_mul(bv_delta(b), c)).scaled(ksign(da)) -
                                            bv_mul(bv_mul(a, b), bv_delta(c)).scaled(ksign(da + db));
                        if (!(sev_lhs == sev_rhs))
                            fail("seven-term identity fails for " + ma.str() + ", " + mb.str() + ", " +
                                 mc.str());
                    }
        }

        for (const auto& m : basis_on(range_gens(k), true)) {
            rep.cases++;
            if (!bv_delta(bv_delta(mono_elem(m, 1))).is_zero())
                fail("odd operator does not square to zero on " + m.str());
        }
    }
    return rep;
}

BVExprPtr make_gen(int i) {
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::gen;
    e->gen = i;
    return e;
}

BVExprPtr make_prod(std::vector<BVExprPtr> args) {
    if (args.empty()) throw std::invalid_argument("empty product");
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::prod;
    e->args = std::move(args);
    return e;
}

BVExprPtr make_bracket(BVExprPtr a, BVExprPtr b) {
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::bracket;
    e->args = {std::move(a), std::move(b)};
    return e;
}

BVExprPtr make_delta(BVExprPtr a) {
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::delta;
    e->args = {std::move(a)};
    return e;
}

BVExprPtr make_sum(std::vector<BVExprPtr> args) {
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::sum;
    e->args = std::move(args);
    return e;
}

BVExprPtr make_scale(const Rational& c, BVExprPtr a) {
    auto e = std::make_shared<BVExpr>();
    e->kind = BVExpr::Kind::scale;
    e->coef = c;
    e->args = {std::move(a)};
    return e;
}

BVElement bv_eval(const BVExprPtr& e) {
    if (!e) throw std::invalid_argument("null expression");
    switch (e->kind) {
        case BVExpr::Kind::gen: return BVElement::generator(e->gen);
        case BVExpr::Kind::prod: {
            BVElement r = bv_eval(e->args[0]);
            for (size_t i = 1; i < e->args.size(); ++i) r = bv_mul(r, bv_eval(e->args[i]));
            return r;
        }
        case BVExpr::Kind::bracket: return bv_bracket(bv_eval(e->args[0]), bv_eval(e->args[1]));
        case BVExpr::Kind::delta: return bv_delta(bv_eval(e->args[0]));
        case BVExpr::Kind::sum: {
            BVElement r;
            for (const auto& a : e->args) r = r + bv_eval(a);
            return r;
        }
        case BVExpr::Kind::scale: return bv_eval(e->args[0]).scaled(e->coef);
    }
    throw std::invalid_argument("unknown expression kind");
}

} // namespace logcurves
