#pragma once

/*
 * Finitely presented graded algebras over the Scalar ring.
 *
 * A Word is a string of generator ids; an Element is a sparse Scalar
 * combination of words.  A Presentation fixes an ordered generator set
 * and a terminating rewrite system: adjacent-pair rules g*h -> sum of
 * smaller words, plus nilpotency rules g^n -> 0.  "Smaller" means the
 * order (letter weight sum, length, rank-lexicographic), which every
 * installed rule is checked against, so rewriting always terminates.
 *
 * Every generator carries a Z3 grade shared by all presentations;
 * rules must be grade-homogeneous.
 */

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z3q/scalar.hpp"

namespace z3q {

namespace gen {
inline constexpr char xi = 0;    // x^-1
inline constexpr char x = 1;
inline constexpr char th = 2;    // theta
inline constexpr char dx = 3;
inline constexpr char dth = 4;
inline constexpr char d2x = 5;
inline constexpr char d2th = 6;
inline constexpr char phi = 7;   // dual odd generator
inline constexpr char y = 8;     // dual even generator
inline constexpr char a = 9;     // 2x2 matrix entries
inline constexpr char be = 10;
inline constexpr char ga = 11;
inline constexpr char dd = 12;
inline constexpr char px = 13;   // partial derivative along x
inline constexpr char pth = 14;  // partial derivative along theta
inline constexpr int count = 15;
}  // namespace gen

using Word = std::string;

int generator_grade(char g);
std::string_view generator_symbol(char g);
/* -1 when the name is not a generator symbol. */
int generator_from_symbol(std::string_view name);
/* Sum of letter grades mod 3. */
int word_grade(const Word& w);

inline Word make_word(std::initializer_list<char> letters) { return Word(letters); }

enum class Strategy { Leftmost, Rightmost };

inline constexpr std::size_t kDefaultBudget = 1'000'000;

class Presentation;

class Element {
public:
    Element() = default;

    static Element zero(const Presentation& p);
    static Element unit(const Presentation& p);
    static Element gen(const Presentation& p, char g);
    static Element from_word(const Presentation& p, Word w, Scalar c = Scalar::one());

    bool is_zero() const { return terms_.empty(); }
    const Presentation* pres() const { return pres_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    /* Common Z3 grade of all words, or nullopt if inhomogeneous; 0 for zero. */
    std::optional<int> grade() const;

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    /* Free product: words concatenate, no reduction happens here. */
    Element operator*(const Element& o) const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    friend Element operator*(const Scalar& s, const Element& e);
    Element operator*(const Scalar& s) const { return s * *this; }

    void add_term(Word w, const Scalar& c);

private:
    const Presentation* pres_ = nullptr;  // null only for a bare zero
    std::map<Word, Scalar> terms_;

    static const Presentation* join(const Presentation* l, const Presentation* r);
};

Element operator*(const Scalar& s, const Element& e);

struct Rule {
    Word lhs;
    std::vector<std::pair<Word, Scalar>> rhs;
};

class Presentation {
public:
    /* weights: per-generator letter weight for the termination order;
       empty means every letter weighs 1 (plain deglex). */
    Presentation(std::string name, std::vector<char> gens, std::vector<int> weights = {});
    Presentation(const Presentation&) = delete;
    Presentation& operator=(const Presentation&) = delete;
    Presentation(Presentation&&) = default;

    const std::string& name() const { return name_; }
    const std::vector<char>& gens() const { return gens_; }
    bool has(char g) const { return rank_[static_cast<unsigned char>(g)] >= 0; }
    int rank(char g) const { return rank_[static_cast<unsigned char>(g)]; }
    int weight(char g) const { return weight_[static_cast<unsigned char>(g)]; }

    /* Install g1*g2 -> rhs; throws unless every rhs word is strictly smaller
       than the pair in the termination order and has the same grade. */
    void add_pair_rule(char g1, char g2, std::vector<std::pair<Word, Scalar>> rhs);
    /* Install g^n -> 0. */
    void add_power_rule(char g, int n);

    const Rule* pair_rule(char g1, char g2) const;
    int nilpotency(char g) const { return nilp_[static_cast<unsigned char>(g)]; }

    /* Strict comparison in (weight, length, rank-lex). */
    bool term_less(const Word& lhs, const Word& rhs) const;

private:
    std::string name_;
    std::vector<char> gens_;
    std::array<int, gen::count> rank_;
    std::array<int, gen::count> weight_;
    std::array<int, gen::count> nilp_;
    std::map<std::pair<char, char>, Rule> pair_rules_;

    long word_weight(const Word& w) const;
    void check_word(const Word& w) const;
};

Element normal_form(const Element& e, Strategy strategy = Strategy::Leftmost,
                    std::size_t budget = kDefaultBudget);

/* Free product with the same-presentation requirement of operator*. */
Element multiply(const Element& a, const Element& b);

/* [a, b] = a b - j^{grade(a) grade(b)} b a; both factors must be homogeneous. */
Element graded_commutator(const Element& a, const Element& b);

/* j^{grade(w)} w termwise (the grade-twist map). */
Element grade_twist(const Element& e);

/* Every word over `letters` with min_len <= length <= max_len, shortest first. */
std::vector<Word> all_words(const std::vector<char>& letters, int min_len, int max_len);

/* Each rewrite rule as the free element lhs - rhs (they all vanish under nf). */
std::vector<Element> relation_elements(const Presentation& p);

struct ConfluenceReport {
    bool confluent = true;
    Word witness;             // first word whose two normal forms disagree
    std::size_t checked = 0;  // number of words reduced
};

/* Reduce every word of length <= max_len under both strategies and compare. */
ConfluenceReport check_local_confluence(const Presentation& p, int max_len);
/* Same on `count` seeded random words of length word_len. */
ConfluenceReport check_confluence_random(const Presentation& p, std::size_t count,
                                         int word_len, std::uint64_t seed);

}  // namespace z3q
