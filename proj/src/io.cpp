#include "z3q/io.hpp"

#include <algorithm>
#include <vector>

namespace z3q {

namespace {

bool rank_lex_less(const Presentation* p, const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) {
            if (p) return p->rank(a[i]) < p->rank(b[i]);
            return a[i] < b[i];
        }
    return false;
}

void append_term(std::string& out, bool first, bool neg, const std::string& body) {
    if (first) {
        if (neg) out += "0 - ";
    } else {
        out += neg ? " - " : " + ";
    }
    out += body;
}

std::string joined(const ScalarPrint& sp, const std::string& words) {
    if (words.empty()) return sp.body;
    if (sp.body == "1") return words;
    return sp.body + "*" + words;
}

}  // namespace

std::string word_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = i;
        while (run < w.size() && w[run] == w[i]) ++run;
        if (!out.empty()) out += "*";
        out += generator_symbol(w[i]);
        if (run - i > 1) out += "^" + std::to_string(run - i);
        i = run;
    }
    return out;
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    /* A lone scalar prints as the scalar, so parsing the result and printing
       again is stable even though the reparse yields a plain scalar value. */
    if (e.terms().size() == 1 && e.terms().begin()->first.empty())
        return to_string(e.terms().begin()->second);
    std::vector<const Word*> order;
    order.reserve(e.terms().size());
    for (auto& [w, c] : e.terms()) order.push_back(&w);
    std::sort(order.begin(), order.end(), [&](const Word* a, const Word* b) {
        return rank_lex_less(e.pres(), *a, *b);
    });
    std::string out;
    bool first = true;
    for (const Word* w : order) {
        ScalarPrint sp = print_for_product(e.terms().at(*w));
        append_term(out, first, sp.negative, joined(sp, w->empty() ? "" : word_string(*w)));
        first = false;
    }
    return out;
}

std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::vector<const std::pair<Word, Word>*> order;
    for (auto& [w, c] : t.terms()) order.push_back(&w);
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        if (a->first != b->first) return rank_lex_less(t.left_pres(), a->first, b->first);
        return rank_lex_less(t.right_pres(), a->second, b->second);
    });
    std::string out;
    bool first = true;
    for (auto* w : order) {
        ScalarPrint sp = print_for_product(t.terms().at(*w));
        std::string body = joined(sp, w->first.empty() ? "" : word_string(w->first)) + " @ " +
                           word_string(w->second);
        append_term(out, first, sp.negative, body);
        first = false;
    }
    return out;
}

std::string to_string(const Tensor3& t) {
    if (t.is_zero()) return "0";
    std::vector<const std::tuple<Word, Word, Word>*> order;
    for (auto& [w, c] : t.terms()) order.push_back(&w);
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        if (std::get<0>(*a) != std::get<0>(*b))
            return rank_lex_less(t.pres(0), std::get<0>(*a), std::get<0>(*b));
        if (std::get<1>(*a) != std::get<1>(*b))
            return rank_lex_less(t.pres(1), std::get<1>(*a), std::get<1>(*b));
        return rank_lex_less(t.pres(2), std::get<2>(*a), std::get<2>(*b));
    });
    std::string out;
    bool first = true;
    for (auto* w : order) {
        ScalarPrint sp = print_for_product(t.terms().at(*w));
        std::string body = joined(sp, std::get<0>(*w).empty() ? "" : word_string(std::get<0>(*w))) +
                           " @ " + word_string(std::get<1>(*w)) + " @ " +
                           word_string(std::get<2>(*w));
        append_term(out, first, sp.negative, body);
        first = false;
    }
    return out;
}

}  // namespace z3q
