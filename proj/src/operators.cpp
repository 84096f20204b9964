#include "z3q/operators.hpp"

#include "z3q/calculus.hpp"
#include "z3q/costructure.hpp"
#include "z3q/io.hpp"
#include "z3q/presentations.hpp"
#include "z3q/tensor.hpp"

namespace z3q {

PlaneComb plane_mono(long m, int k, Scalar c) {
    PlaneComb f;
    if (k <= 2 && !c.is_zero()) f[PlaneMono{m, k}] = std::move(c);
    return f;
}

PlaneComb comb_add(const PlaneComb& a, const PlaneComb& b) {
    PlaneComb r = a;
    for (auto& [mono, c] : b) {
        auto it = r.find(mono);
        if (it == r.end()) {
            r.emplace(mono, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

PlaneComb comb_sub(const PlaneComb& a, const PlaneComb& b) {
    return comb_add(a, comb_scale(-Scalar::one(), b));
}

PlaneComb comb_scale(const Scalar& s, const PlaneComb& a) {
    PlaneComb r;
    if (s.is_zero()) return r;
    for (auto& [mono, c] : a) r[mono] = s * c;
    return r;
}

PlaneComb comb_mul(const PlaneComb& a, const PlaneComb& b) {
    PlaneComb r;
    for (auto& [ma, ca] : a)
        for (auto& [mb, cb] : b) {
            if (ma.k + mb.k > 2) continue;
            Scalar c = ca * cb * Scalar::q(-static_cast<long>(ma.k) * mb.m);
            PlaneMono mono{ma.m + mb.m, ma.k + mb.k};
            auto it = r.find(mono);
            if (it == r.end()) {
                if (!c.is_zero()) r.emplace(mono, std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    return r;
}

namespace {

PlaneComb mul_x(const PlaneComb& f, long shift) {
    PlaneComb r;
    for (auto& [mono, c] : f) r[PlaneMono{mono.m + shift, mono.k}] = c;
    return r;
}

/* th (m,k) = q^-m (m,k+1); the theta cube collapses. */
PlaneComb mul_theta(const PlaneComb& f) {
    PlaneComb r;
    for (auto& [mono, c] : f)
        if (mono.k < 2) r[PlaneMono{mono.m, mono.k + 1}] = Scalar::q(-mono.m) * c;
    return r;
}

PlaneComb t_mono(PlaneMono w);
PlaneComb nabla_mono(PlaneMono w);
PlaneComb px_mono(PlaneMono w);
PlaneComb pth_mono(PlaneMono w);

template <PlaneComb (*Op)(PlaneMono)>
PlaneComb extend(const PlaneComb& f) {
    PlaneComb r;
    for (auto& [mono, c] : f) r = comb_add(r, comb_scale(c, Op(mono)));
    return r;
}

const Scalar kJ = Scalar::j(1);
const Scalar kJ2 = Scalar::j(2);

/* T(x f) = x f + j^2 x T(f);  T(th f) = th f + j^2 th T(f);
   T(x^-1 f) = j x^-1 (T(f) - f). */
PlaneComb t_mono(PlaneMono w) {
    if (w.m > 0) {
        PlaneComb f = plane_mono(w.m - 1, w.k);
        return comb_add(plane_mono(w.m, w.k), comb_scale(kJ2, mul_x(extend<t_mono>(f), 1)));
    }
    if (w.m < 0) {
        PlaneComb f = plane_mono(w.m + 1, w.k);
        return comb_scale(kJ, mul_x(comb_sub(extend<t_mono>(f), f), -1));
    }
    if (w.k > 0) {
        PlaneComb f = plane_mono(0, w.k - 1);
        return comb_add(mul_theta(f), comb_scale(kJ2, mul_theta(extend<t_mono>(f))));
    }
    return {};
}

/* nabla(x f) = q x nabla(f);  nabla(th f) = x f + q j^2 th nabla(f);
   nabla(x^-1 f) = q^-1 x^-1 nabla(f). */
PlaneComb nabla_mono(PlaneMono w) {
    if (w.m > 0)
        return comb_scale(Scalar::q(1), mul_x(extend<nabla_mono>(plane_mono(w.m - 1, w.k)), 1));
    if (w.m < 0)
        return comb_scale(Scalar::q(-1), mul_x(extend<nabla_mono>(plane_mono(w.m + 1, w.k)), -1));
    if (w.k > 0) {
        PlaneComb f = plane_mono(0, w.k - 1);
        return comb_add(mul_x(f, 1),
                        comb_scale(Scalar::q(1) * kJ2, mul_theta(extend<nabla_mono>(f))));
    }
    return {};
}

/* partial_theta(x f) = q x partial_theta(f);
   partial_theta(th f) = f + j^2 th partial_theta(f);
   partial_theta(x^-1 f) = q^-1 x^-1 partial_theta(f). */
PlaneComb pth_mono(PlaneMono w) {
    if (w.m > 0)
        return comb_scale(Scalar::q(1), mul_x(extend<pth_mono>(plane_mono(w.m - 1, w.k)), 1));
    if (w.m < 0)
        return comb_scale(Scalar::q(-1), mul_x(extend<pth_mono>(plane_mono(w.m + 1, w.k)), -1));
    if (w.k > 0) {
        PlaneComb f = plane_mono(0, w.k - 1);
        return comb_add(f, comb_scale(kJ2, mul_theta(extend<pth_mono>(f))));
    }
    return {};
}

/* partial_x(x f) = f + j^2 x partial_x(f) + (j^2 - 1) th partial_theta(f);
   partial_x(th f) = j^2 q^-1 th partial_x(f);
   partial_x(x^-1 f) = j x^-1 (partial_x(f) - x^-1 f - (j^2-1) th partial_theta(x^-1 f)). */
PlaneComb px_mono(PlaneMono w) {
    if (w.m > 0) {
        PlaneComb f = plane_mono(w.m - 1, w.k);
        PlaneComb r = comb_add(f, comb_scale(kJ2, mul_x(extend<px_mono>(f), 1)));
        return comb_add(r, comb_scale(kJ2 - Scalar::one(),
                                      mul_theta(extend<pth_mono>(f))));
    }
    if (w.m < 0) {
        PlaneComb f = plane_mono(w.m + 1, w.k);
        PlaneComb xinv_f = mul_x(f, -1);
        PlaneComb r = comb_sub(extend<px_mono>(f), xinv_f);
        r = comb_sub(r, comb_scale(kJ2 - Scalar::one(),
                                   mul_theta(extend<pth_mono>(xinv_f))));
        return comb_scale(kJ, mul_x(r, -1));
    }
    if (w.k > 0)
        return comb_scale(kJ2 * Scalar::q(-1),
                          mul_theta(extend<px_mono>(plane_mono(0, w.k - 1))));
    return {};
}

}  // namespace

PlaneComb act_T(const PlaneComb& f) { return extend<t_mono>(f); }
PlaneComb act_nabla(const PlaneComb& f) { return extend<nabla_mono>(f); }
PlaneComb act_partial_x(const PlaneComb& f) { return extend<px_mono>(f); }
PlaneComb act_partial_theta(const PlaneComb& f) { return extend<pth_mono>(f); }

PlaneComb act_N(const PlaneComb& f) {
    PlaneComb r;
    for (auto& [mono, c] : f) {
        Scalar s = Scalar(mono.m + mono.k) * c;
        if (!s.is_zero()) r[mono] = s;
    }
    return r;
}

Element embed(const PlaneComb& f, const Presentation& p) {
    Element out = Element::zero(p);
    for (auto& [mono, c] : f) {
        Word w;
        for (long i = 0; i < (mono.m >= 0 ? mono.m : -mono.m); ++i)
            w.push_back(mono.m >= 0 ? gen::x : gen::xi);
        for (int i = 0; i < mono.k; ++i) w.push_back(gen::th);
        out += Element::from_word(p, w, c);
    }
    return out;
}

/* ---------------- Check suites ---------------- */

namespace {

/* The closed form of T: multiplier 0, 1, -j as N(f) mod 3 is 0, 1, 2. */
PlaneComb closed_T(const PlaneComb& f) {
    PlaneComb r;
    for (auto& [mono, c] : f) {
        long n = ((mono.m + mono.k) % 3 + 3) % 3;
        if (n == 0) continue;
        r[mono] = n == 1 ? c : -(Scalar::j(1) * c);
    }
    return r;
}

std::string comb_string(const PlaneComb& f) { return to_string(embed(f, plane())); }

}  // namespace

std::vector<CheckResult> check_lie_relations(int max_degree) {
    Checks c("lie");
    const Presentation& o = omega();
    auto J = [](long k) { return Scalar::j(k); };
    auto Q = [](long k) { return Scalar::q(k); };
    const Element w = cartan_w(), u = cartan_u();

    std::vector<PlaneMono> grid;
    for (long m = -3; m <= max_degree; ++m)
        for (int k = 0; k <= 2; ++k) grid.push_back(PlaneMono{m, k});

    auto grid_check = [&](const std::string& id, const std::string& ref, auto&& residual) {
        c.holds(id, ref, [&](std::string& detail) {
            for (auto& mono : grid) {
                PlaneComb f = plane_mono(mono.m, mono.k);
                PlaneComb r = residual(f);
                if (!r.empty()) {
                    detail = "monomial " + comb_string(f) + ", residual " + comb_string(r);
                    return false;
                }
            }
            return true;
        });
    };

    grid_check("lie:T-nabla-commute", "T nabla = nabla T",
               [](const PlaneComb& f) { return comb_sub(act_T(act_nabla(f)),
                                                        act_nabla(act_T(f))); });
    grid_check("lie:nabla-cubed", "nabla^3 = 0",
               [](const PlaneComb& f) { return act_nabla(act_nabla(act_nabla(f))); });
    grid_check("lie:partials-exchange", "px pth = j q pth px", [&](const PlaneComb& f) {
        return comb_sub(act_partial_x(act_partial_theta(f)),
                        comb_scale(J(1) * Q(1), act_partial_theta(act_partial_x(f))));
    });
    grid_check("lie:partial-theta-cubed", "pth^3 = 0", [](const PlaneComb& f) {
        return act_partial_theta(act_partial_theta(act_partial_theta(f)));
    });
    grid_check("lie:euler-decomposition", "T = x px + th pth", [](const PlaneComb& f) {
        return comb_sub(act_T(f), comb_add(mul_x(act_partial_x(f), 1),
                                           mul_theta(act_partial_theta(f))));
    });
    grid_check("lie:nabla-decomposition", "nabla = x pth", [](const PlaneComb& f) {
        return comb_sub(act_nabla(f), mul_x(act_partial_theta(f), 1));
    });

    c.holds("lie:T-closed-form", "T scales x^m th^k by 0, 1, -j as m+k mod 3 is 0, 1, 2",
            [&](std::string& detail) {
                for (long m = -3; m <= 12; ++m)
                    for (int k = 0; k <= 2; ++k) {
                        PlaneComb f = plane_mono(m, k);
                        if (act_T(f) != closed_T(f)) {
                            detail = "monomial " + comb_string(f);
                            return false;
                        }
                    }
                return true;
            });

    c.vanishes("lie:partial-x-sample", "px(x th) = j^2 th", [&] {
        return embed(comb_sub(act_partial_x(plane_mono(1, 1)), plane_mono(0, 1, J(2))),
                     plane());
    });
    c.vanishes("lie:partial-theta-sample", "pth(x th) = q x", [&] {
        return embed(comb_sub(act_partial_theta(plane_mono(1, 1)), plane_mono(1, 0, Q(1))),
                     plane());
    });

    c.holds("lie:monomial-w", "x^m th^k commutes with w up to j^(2N - k)",
            [&](std::string& detail) {
                for (auto& mono : grid) {
                    Element f = embed(plane_mono(mono.m, mono.k), o);
                    Scalar tw = J(2 * (mono.m + mono.k) - mono.k);
                    if (!normal_form(f * w - tw * (w * f)).is_zero()) {
                        detail = "monomial " + comb_string(plane_mono(mono.m, mono.k));
                        return false;
                    }
                }
                return true;
            });

    c.holds("lie:monomial-u", "x^m th^k commutes with u up to j^k q^N",
            [&](std::string& detail) {
                for (auto& mono : grid) {
                    Element f = embed(plane_mono(mono.m, mono.k), o);
                    Scalar tw = J(mono.k) * Q(mono.m + mono.k);
                    if (!normal_form(f * u - tw * (u * f)).is_zero()) {
                        detail = "monomial " + comb_string(plane_mono(mono.m, mono.k));
                        return false;
                    }
                }
                return true;
            });

    c.holds("lie:d-decomposition", "d f = w T(f) + u nabla(f)",
            [&](std::string& detail) {
                for (long m = -3; m <= 6; ++m)
                    for (int k = 0; k <= 2; ++k) {
                        PlaneComb f = plane_mono(m, k);
                        Element lhs = normal_form(differentiate(embed(f, o)));
                        Element rhs = normal_form(w * embed(act_T(f), o) +
                                                  u * embed(act_nabla(f), o));
                        if (lhs != rhs) {
                            detail = "monomial " + comb_string(f);
                            return false;
                        }
                    }
                return true;
            });

    c.holds("lie:partial-bridge",
            "the dx / dth components of d f are px(f) and pth(f)",
            [&](std::string& detail) {
                for (long m = -3; m <= 6; ++m)
                    for (int k = 0; k <= 2; ++k) {
                        PlaneComb f = plane_mono(m, k);
                        auto [ea, eb] = left_extract(normal_form(differentiate(embed(f, o))));
                        if (normal_form(ea) != normal_form(embed(act_partial_x(f), o)) ||
                            normal_form(eb) != normal_form(embed(act_partial_theta(f), o))) {
                            detail = "monomial " + comb_string(f);
                            return false;
                        }
                    }
                return true;
            });

    return c.take();
}

std::vector<CheckResult> check_operator_coproducts() {
    Checks c("lie");
    auto J = [](long k) { return Scalar::j(k); };
    auto Q = [](long k) { return Scalar::q(k); };

    std::vector<PlaneMono> grid;
    for (long m = -2; m <= 5; ++m)
        for (int k = 0; k <= 1; ++k) grid.push_back(PlaneMono{m, k});

    c.holds("lie:T-leibniz", "T(f g) = T(f) g + j^(2 N(f)) f T(g)",
            [&](std::string& detail) {
                for (auto& mf : grid)
                    for (auto& mg : grid) {
                        PlaneComb f = plane_mono(mf.m, mf.k), g = plane_mono(mg.m, mg.k);
                        PlaneComb lhs = act_T(comb_mul(f, g));
                        PlaneComb rhs = comb_add(
                            comb_mul(act_T(f), g),
                            comb_scale(J(2 * (mf.m + mf.k)), comb_mul(f, act_T(g))));
                        if (lhs != rhs) {
                            detail = "f = " + comb_string(f) + ", g = " + comb_string(g);
                            return false;
                        }
                    }
                return true;
            });

    c.holds("lie:nabla-leibniz", "nabla(f g) = nabla(f) g + j^(2 grade f) q^(N(f)) f nabla(g)",
            [&](std::string& detail) {
                for (auto& mf : grid)
                    for (auto& mg : grid) {
                        PlaneComb f = plane_mono(mf.m, mf.k), g = plane_mono(mg.m, mg.k);
                        PlaneComb lhs = act_nabla(comb_mul(f, g));
                        PlaneComb rhs = comb_add(
                            comb_mul(act_nabla(f), g),
                            comb_scale(J(2 * mf.k) * Q(mf.m + mf.k),
                                       comb_mul(f, act_nabla(g))));
                        if (lhs != rhs) {
                            detail = "f = " + comb_string(f) + ", g = " + comb_string(g);
                            return false;
                        }
                    }
                return true;
            });

    c.scalar_vanishes("lie:twist-period-six", "j^6 = 1",
                      [&] { return Scalar::j(6) - Scalar::one(); });
    c.scalar_vanishes("lie:twist-period-minus-three", "j^-3 = 1",
                      [&] { return Scalar::j(-3) - Scalar::one(); });

    return c.take();
}

std::vector<CheckResult> check_partial_noninvariance(int max_word_len) {
    Checks c("partial");
    const Presentation& mp = mixed_partial();

    TensorHom D(mp, mp, mp);
    auto g = [&](char v) { return Element::gen(mp, v); };
    D.set_image(gen::x, TensorElement::of(g(gen::x), g(gen::x)));
    D.set_image(gen::th, TensorElement::of(g(gen::th), g(gen::x)) +
                             TensorElement::of(g(gen::x), g(gen::th)));
    D.set_image(gen::px, TensorElement::of(g(gen::px), g(gen::px)));
    D.set_image(gen::pth, TensorElement::of(g(gen::pth), g(gen::px)) +
                              TensorElement::of(g(gen::px), g(gen::pth)));

    auto rel = [&](char a, char b) {
        const Rule* r = mp.pair_rule(a, b);
        Element e = Element::from_word(mp, r->lhs);
        for (auto& [word, s] : r->rhs) e -= Element::from_word(mp, word, s);
        return e;
    };

    auto letter_eps = [](char v) -> Scalar {
        switch (v) {
            case gen::x:
            case gen::px: return Scalar::one();
            default: return Scalar::zero();
        }
    };
    auto eps = [&](const Element& e) {
        Scalar s = Scalar::zero();
        for (auto& [word, cf] : e.terms()) {
            Scalar p = cf;
            for (char v : word) {
                p = p * letter_eps(v);
                if (p.is_zero()) break;
            }
            s += p;
        }
        return s;
    };

    c.tensor_vanishes("partial:coproduct-plane-sector",
                      "the coproduct respects the th x relation", [&] {
                          return D.apply(rel(gen::th, gen::x));
                      });
    c.tensor_vanishes("partial:coproduct-partial-sector",
                      "the coproduct respects the pth px relation", [&] {
                          return D.apply(rel(gen::pth, gen::px));
                      });
    c.tensor_nonzero("partial:coproduct-px-x",
                     "the coproduct does not respect the inhomogeneous px x relation",
                     [&] { return D.apply(rel(gen::px, gen::x)); });
    c.tensor_nonzero("partial:coproduct-pth-th",
                     "the coproduct does not respect the inhomogeneous pth th relation",
                     [&] { return D.apply(rel(gen::pth, gen::th)); });
    c.tensor_nonzero("partial:coproduct-px-th",
                     "even the homogeneous px th relation breaks: its tensor square "
                     "already meets the inhomogeneous one",
                     [&] { return D.apply(rel(gen::px, gen::th)); });
    c.tensor_nonzero("partial:coproduct-pth-x",
                     "the homogeneous pth x relation breaks the same way",
                     [&] { return D.apply(rel(gen::pth, gen::x)); });
    c.tensor_vanishes("partial:coproduct-pth-cubed", "the coproduct respects pth^3 = 0", [&] {
        Word cube(3, gen::pth);
        return D.apply(Element::from_word(mp, cube));
    });

    c.scalar_nonzero("partial:counit-px-x",
                     "the counit residual of the px x relation is -j^2, not zero",
                     [&] { return eps(rel(gen::px, gen::x)); });
    c.holds("partial:counit-px-x-value", "that residual equals -j^2",
            [&](std::string& detail) {
                Scalar got = eps(rel(gen::px, gen::x));
                if (got != -Scalar::j(2)) {
                    detail = "residual " + to_string(got);
                    return false;
                }
                return true;
            });
    c.scalar_nonzero("partial:counit-pth-th",
                     "the counit residual of the pth th relation is -1, not zero",
                     [&] { return eps(rel(gen::pth, gen::th)); });
    c.holds("partial:counit-pth-th-value", "that residual equals -1",
            [&](std::string& detail) {
                Scalar got = eps(rel(gen::pth, gen::th));
                if (got != -Scalar::one()) {
                    detail = "residual " + to_string(got);
                    return false;
                }
                return true;
            });

    c.scalar_vanishes("partial:counit-px-th", "the px th relation has zero counit residual",
                      [&] { return eps(rel(gen::px, gen::th)); });
    c.scalar_vanishes("partial:counit-pth-x", "the pth x relation has zero counit residual",
                      [&] { return eps(rel(gen::pth, gen::x)); });
    c.scalar_vanishes("partial:counit-pth-px", "the pth px relation has zero counit residual",
                      [&] { return eps(rel(gen::pth, gen::px)); });

    c.holds("partial:counit-axiom",
            "m (eps ox id) Delta = id on each sector (coordinates or partials alone)",
            [&](std::string& detail) {
                auto words = all_words({gen::x, gen::th}, 0, max_word_len);
                auto pwords = all_words({gen::px, gen::pth}, 1, max_word_len);
                words.insert(words.end(), pwords.begin(), pwords.end());
                for (auto& word : words) {
                    Element el = Element::from_word(mp, word);
                    TensorElement t = D.apply(el);
                    Element back = Element::zero(mp);
                    for (auto& [ws, cf] : t.terms()) {
                        Scalar p = cf;
                        for (char v : ws.first) {
                            p = p * letter_eps(v);
                            if (p.is_zero()) break;
                        }
                        if (!p.is_zero()) back += Element::from_word(mp, ws.second, p);
                    }
                    if (normal_form(back) != normal_form(el)) {
                        detail = "word " + word_string(word);
                        return false;
                    }
                }
                return true;
            });

    return c.take();
}

}  // namespace z3q
