#include "z3q/algebra.hpp"

#include <random>

namespace z3q {

namespace {

struct GenInfo {
    std::string_view symbol;
    int grade;
};

constexpr std::array<GenInfo, gen::count> kGens{{
    {"xi", 0},  {"x", 0},    {"th", 1},  {"dx", 1}, {"dth", 2},
    {"d2x", 2}, {"d2th", 0}, {"phi", 1}, {"y", 2},  {"a", 0},
    {"be", 2},  {"ga", 1},   {"dd", 0},  {"px", 0}, {"pth", 2},
}};

}  // namespace

int generator_grade(char g) { return kGens[static_cast<unsigned char>(g)].grade; }

std::string_view generator_symbol(char g) { return kGens[static_cast<unsigned char>(g)].symbol; }

int generator_from_symbol(std::string_view name) {
    for (int i = 0; i < gen::count; ++i)
        if (kGens[i].symbol == name) return i;
    return -1;
}

int word_grade(const Word& w) {
    int s = 0;
    for (char g : w) s += generator_grade(g);
    return s % 3;
}

/* ---------------- Element ---------------- */

const Presentation* Element::join(const Presentation* l, const Presentation* r) {
    if (l == nullptr) return r;
    if (r == nullptr) return l;
    if (l != r)
        throw Error("presentation mismatch: cannot combine elements of '" + l->name() +
                    "' and '" + r->name() + "'");
    return l;
}

Element Element::zero(const Presentation& p) {
    Element e;
    e.pres_ = &p;
    return e;
}

Element Element::unit(const Presentation& p) { return from_word(p, Word{}); }

Element Element::gen(const Presentation& p, char g) { return from_word(p, Word(1, g)); }

Element Element::from_word(const Presentation& p, Word w, Scalar c) {
    for (char g : w)
        if (!p.has(g))
            throw Error("generator '" + std::string(generator_symbol(g)) +
                        "' is not part of presentation '" + p.name() + "'");
    Element e;
    e.pres_ = &p;
    if (!c.is_zero()) e.terms_.emplace(std::move(w), std::move(c));
    return e;
}

std::optional<int> Element::grade() const {
    std::optional<int> g;
    for (auto& [w, c] : terms_) {
        int wg = word_grade(w);
        if (!g) g = wg;
        else if (*g != wg) return std::nullopt;
    }
    return g ? g : std::optional<int>(0);
}

void Element::add_term(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r;
    r.pres_ = pres_;
    for (auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    pres_ = join(pres_, o.pres_);
    for (auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    pres_ = join(pres_, o.pres_);
    for (auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element Element::operator*(const Element& o) const {
    const Presentation* p = join(pres_, o.pres_);
    Element r;
    r.pres_ = p;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) r.add_term(w1 + w2, c1 * c2);
    return r;
}

bool Element::operator==(const Element& o) const {
    if (pres_ && o.pres_ && pres_ != o.pres_) return false;
    return terms_ == o.terms_;
}

Element operator*(const Scalar& s, const Element& e) {
    Element r;
    r.pres_ = e.pres_;
    if (s.is_zero()) return r;
    for (auto& [w, c] : e.terms_) {
        Scalar p = s * c;
        if (!p.is_zero()) r.terms_.emplace(w, std::move(p));
    }
    return r;
}

Element multiply(const Element& a, const Element& b) { return a * b; }

Element graded_commutator(const Element& a, const Element& b) {
    auto ga = a.grade(), gb = b.grade();
    if (!ga || !gb)
        throw Error("graded_commutator requires grade-homogeneous factors");
    return a * b - Scalar::j(*ga * *gb) * (b * a);
}

Element grade_twist(const Element& e) {
    Element r = e.pres() ? Element::zero(*e.pres()) : Element();
    for (auto& [w, c] : e.terms()) r.add_term(w, Scalar::j(word_grade(w)) * c);
    return r;
}

/* ---------------- Presentation ---------------- */

Presentation::Presentation(std::string name, std::vector<char> gens, std::vector<int> weights)
    : name_(std::move(name)), gens_(std::move(gens)) {
    rank_.fill(-1);
    weight_.fill(1);
    nilp_.fill(0);
    if (!weights.empty() && weights.size() != gens_.size())
        throw Error("presentation '" + name_ + "': weight list does not match generator list");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        unsigned char g = static_cast<unsigned char>(gens_[i]);
        if (rank_[g] >= 0) throw Error("presentation '" + name_ + "': duplicate generator");
        rank_[g] = static_cast<int>(i);
        if (!weights.empty()) weight_[g] = weights[i];
    }
}

void Presentation::check_word(const Word& w) const {
    for (char g : w)
        if (!has(g))
            throw Error("presentation '" + name_ + "': rule uses foreign generator '" +
                        std::string(generator_symbol(g)) + "'");
}

long Presentation::word_weight(const Word& w) const {
    long s = 0;
    for (char g : w) s += weight(g);
    return s;
}

bool Presentation::term_less(const Word& a, const Word& b) const {
    long wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb;
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return rank(a[i]) < rank(b[i]);
    return false;
}

void Presentation::add_pair_rule(char g1, char g2, std::vector<std::pair<Word, Scalar>> rhs) {
    Word lhs{g1, g2};
    check_word(lhs);
    int lg = word_grade(lhs);
    for (auto& [w, c] : rhs) {
        check_word(w);
        if (word_grade(w) != lg && !c.is_zero())
            throw Error("presentation '" + name_ + "': rule for " +
                        std::string(generator_symbol(g1)) + "*" +
                        std::string(generator_symbol(g2)) + " is not grade-homogeneous");
        if (!term_less(w, lhs))
            throw Error("presentation '" + name_ + "': rule for " +
                        std::string(generator_symbol(g1)) + "*" +
                        std::string(generator_symbol(g2)) +
                        " does not decrease the termination order");
    }
    auto [it, fresh] = pair_rules_.emplace(std::make_pair(g1, g2), Rule{lhs, std::move(rhs)});
    if (!fresh) throw Error("presentation '" + name_ + "': duplicate rule");
}

void Presentation::add_power_rule(char g, int n) {
    if (!has(g) || n < 2) throw Error("presentation '" + name_ + "': bad power rule");
    nilp_[static_cast<unsigned char>(g)] = n;
}

const Rule* Presentation::pair_rule(char g1, char g2) const {
    auto it = pair_rules_.find(std::make_pair(g1, g2));
    return it == pair_rules_.end() ? nullptr : &it->second;
}

/* ---------------- Rewriting ---------------- */

namespace {

struct Redex {
    std::size_t pos;
    bool power;        // true: word dies (g^n -> 0)
    const Rule* rule;  // pair rule when power is false
};

bool power_at(const Presentation& p, const Word& w, std::size_t i) {
    int n = p.nilpotency(w[i]);
    if (n == 0 || i + static_cast<std::size_t>(n) > w.size()) return false;
    for (int k = 1; k < n; ++k)
        if (w[i + k] != w[i]) return false;
    return true;
}

std::optional<Redex> find_redex(const Presentation& p, const Word& w, Strategy st) {
    const std::size_t n = w.size();
    if (st == Strategy::Leftmost) {
        for (std::size_t i = 0; i < n; ++i) {
            if (power_at(p, w, i)) return Redex{i, true, nullptr};
            if (i + 1 < n)
                if (const Rule* r = p.pair_rule(w[i], w[i + 1])) return Redex{i, false, r};
        }
    } else {
        for (std::size_t i = n; i-- > 0;) {
            if (power_at(p, w, i)) return Redex{i, true, nullptr};
            if (i + 1 < n)
                if (const Rule* r = p.pair_rule(w[i], w[i + 1])) return Redex{i, false, r};
        }
    }
    return std::nullopt;
}

}  // namespace

Element normal_form(const Element& e, Strategy strategy, std::size_t budget) {
    if (e.pres() == nullptr || e.is_zero()) return e;
    const Presentation& p = *e.pres();
    std::map<Word, Scalar> pending(e.terms());
    Element done = Element::zero(p);
    std::size_t steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = it->first;
        Scalar c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;
        auto rd = find_redex(p, w, strategy);
        if (!rd) {
            done.add_term(std::move(w), c);
            continue;
        }
        if (++steps > budget) throw BudgetExceeded(budget);
        if (rd->power) continue;
        for (auto& [rw, rc] : rd->rule->rhs) {
            Word nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.append(w, 0, rd->pos).append(rw).append(w, rd->pos + 2, Word::npos);
            Scalar nc = c * rc;
            if (nc.is_zero()) continue;
            auto slot = pending.find(nw);
            if (slot == pending.end()) {
                pending.emplace(std::move(nw), std::move(nc));
            } else {
                slot->second += nc;
                if (slot->second.is_zero()) pending.erase(slot);
            }
        }
    }
    return done;
}

std::vector<Word> all_words(const std::vector<char>& letters, int min_len, int max_len) {
    std::vector<Word> out;
    if (min_len <= 0) out.emplace_back();
    for (int len = std::max(min_len, 1); len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            Word w;
            w.reserve(len);
            for (int i = 0; i < len; ++i) w.push_back(letters[idx[i]]);
            out.push_back(std::move(w));
            int pos = len - 1;
            while (pos >= 0 && ++idx[pos] == letters.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return out;
}

std::vector<Element> relation_elements(const Presentation& p) {
    std::vector<Element> out;
    for (char g1 : p.gens())
        for (char g2 : p.gens())
            if (const Rule* r = p.pair_rule(g1, g2)) {
                Element rel = Element::from_word(p, r->lhs);
                for (auto& [w, c] : r->rhs) rel -= Element::from_word(p, w, c);
                out.push_back(std::move(rel));
            }
    for (char g : p.gens())
        if (int n = p.nilpotency(g))
            out.push_back(Element::from_word(p, Word(static_cast<std::size_t>(n), g)));
    return out;
}

/* ---------------- Confluence ---------------- */

namespace {

bool word_joins(const Presentation& p, const Word& w) {
    Element e = Element::from_word(p, w);
    return normal_form(e, Strategy::Leftmost) == normal_form(e, Strategy::Rightmost);
}

}  // namespace

ConfluenceReport check_local_confluence(const Presentation& p, int max_len) {
    ConfluenceReport rep;
    const auto& gens = p.gens();
    Word w;
    // odometer over all words of each length
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> idx(len, 0);
        for (;;) {
            w.clear();
            for (int i = 0; i < len; ++i) w.push_back(gens[idx[i]]);
            ++rep.checked;
            if (!word_joins(p, w)) {
                rep.confluent = false;
                rep.witness = w;
                return rep;
            }
            int pos = len - 1;
            while (pos >= 0 && ++idx[pos] == gens.size()) idx[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return rep;
}

ConfluenceReport check_confluence_random(const Presentation& p, std::size_t count,
                                         int word_len, std::uint64_t seed) {
    ConfluenceReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, p.gens().size() - 1);
    for (std::size_t i = 0; i < count; ++i) {
        Word w;
        w.reserve(word_len);
        for (int k = 0; k < word_len; ++k) w.push_back(p.gens()[pick(rng)]);
        ++rep.checked;
        if (!word_joins(p, w)) {
            rep.confluent = false;
            rep.witness = w;
            return rep;
        }
    }
    return rep;
}

}  // namespace z3q
