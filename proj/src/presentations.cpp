#include "z3q/presentations.hpp"

namespace z3q {

namespace {

namespace G = gen;

Scalar J(long k) { return Scalar::j(k); }
Scalar Q(long k) { return Scalar::q(k); }
Scalar C(long n) { return Scalar(n); }

Word W(std::initializer_list<char> ls) { return Word(ls); }

void add_plane_core(Presentation& p) {
    p.add_pair_rule(G::th, G::x, {{W({G::x, G::th}), Q(-1)}});
    p.add_power_rule(G::th, 3);
}

void add_inverse_rules(Presentation& p) {
    p.add_pair_rule(G::x, G::xi, {{W({}), C(1)}});
    p.add_pair_rule(G::xi, G::x, {{W({}), C(1)}});
    p.add_pair_rule(G::th, G::xi, {{W({G::xi, G::th}), Q(1)}});
}

Presentation build_plane() {
    Presentation p("plane", {G::xi, G::x, G::th});
    add_plane_core(p);
    add_inverse_rules(p);
    return p;
}

Presentation build_omega() {
    Presentation p("omega", {G::xi, G::x, G::th, G::dx, G::dth, G::d2x, G::d2th},
                   {0, 0, 1, 1, 3, 1, 3});
    add_plane_core(p);
    add_inverse_rules(p);

    // coordinates against first-order differentials
    p.add_pair_rule(G::dx, G::x, {{W({G::x, G::dx}), J(1)}});
    p.add_pair_rule(G::dth, G::x,
                    {{W({G::x, G::dth}), Q(-1)}, {W({G::dx, G::th}), Q(-1) * (C(1) - J(2))}});
    p.add_pair_rule(G::dx, G::th, {{W({G::th, G::dx}), J(2) * Q(1)}});
    p.add_pair_rule(G::dth, G::th, {{W({G::th, G::dth}), J(2)}});

    // among first-order differentials
    p.add_pair_rule(G::dth, G::dx, {{W({G::dx, G::dth}), J(2) * Q(-1)}});
    p.add_power_rule(G::dx, 3);

    // coordinates against second-order differentials
    p.add_pair_rule(G::d2x, G::x, {{W({G::x, G::d2x}), J(1)}});
    p.add_pair_rule(G::d2th, G::x,
                    {{W({G::x, G::d2th}), Q(-1)}, {W({G::d2x, G::th}), Q(-1) * (C(1) - J(2))}});
    p.add_pair_rule(G::d2x, G::th, {{W({G::th, G::d2x}), Q(1)}});
    p.add_pair_rule(G::d2th, G::th, {{W({G::th, G::d2th}), C(1)}});

    // first order against second order
    p.add_pair_rule(G::d2x, G::dx, {{W({G::dx, G::d2x}), J(2)}});
    p.add_pair_rule(G::d2th, G::dx,
                    {{W({G::dx, G::d2th}), Q(-1)}, {W({G::d2x, G::dth}), Q(-1) * (J(2) - J(1))}});
    p.add_pair_rule(G::d2x, G::dth, {{W({G::dth, G::d2x}), J(1) * Q(1)}});
    p.add_pair_rule(G::d2th, G::dth, {{W({G::dth, G::d2th}), C(1)}});

    // among second-order differentials
    p.add_pair_rule(G::d2th, G::d2x, {{W({G::d2x, G::d2th}), J(1) * Q(-1)}});

    // inverse conjugates of the rules above
    p.add_pair_rule(G::dx, G::xi, {{W({G::xi, G::dx}), J(2)}});
    p.add_pair_rule(G::dth, G::xi,
                    {{W({G::xi, G::dth}), Q(1)},
                     {W({G::xi, G::xi, G::th, G::dx}), Q(2) * (C(1) - J(1))}});
    p.add_pair_rule(G::d2x, G::xi, {{W({G::xi, G::d2x}), J(2)}});
    p.add_pair_rule(G::d2th, G::xi,
                    {{W({G::xi, G::d2th}), Q(1)},
                     {W({G::xi, G::xi, G::th, G::d2x}), Q(2) * (J(1) - J(2))}});
    return p;
}

Presentation build_dual() {
    Presentation p("dual", {G::phi, G::y});
    p.add_pair_rule(G::y, G::phi, {{W({G::phi, G::y}), J(2) * Q(-1)}});
    p.add_power_rule(G::phi, 3);
    return p;
}

/* Matrix-entry relations, optionally with coefficient slot `mutate` perturbed. */
void add_gl_rules(Presentation& p, int mutate) {
    auto tweak = [&](int slot, Scalar s) { return slot == mutate ? s * Q(1) : s; };
    p.add_pair_rule(G::be, G::a, {{W({G::a, G::be}), tweak(0, J(1) * Q(1))}});
    p.add_pair_rule(G::ga, G::a, {{W({G::a, G::ga}), tweak(1, Q(-1))}});
    if (mutate == 3) {
        // drop the be*ga correction entirely
        p.add_pair_rule(G::dd, G::a, {{W({G::a, G::dd}), tweak(2, C(1))}});
    } else {
        p.add_pair_rule(G::dd, G::a,
                        {{W({G::a, G::dd}), tweak(2, C(1))},
                         {W({G::be, G::ga}), -Q(-1) * (C(1) - J(1))}});
    }
    p.add_pair_rule(G::ga, G::be, {{W({G::be, G::ga}), tweak(4, Q(-2))}});
    p.add_pair_rule(G::dd, G::be, {{W({G::be, G::dd}), tweak(5, J(1) * Q(-1))}});
    p.add_pair_rule(G::dd, G::ga, {{W({G::ga, G::dd}), tweak(6, Q(1))}});
    p.add_power_rule(G::ga, 3);
    /* Covariance of the dual plane forces this: the cube of the transformed dual
       generator expands to exactly be^3 y^3, so it vanishes only if be^3 does. */
    p.add_power_rule(G::be, 3);
}

/* Matrix entries j-commute with plane and dual letters; entries normal-order first. */
void add_cross_rules(Presentation& p, std::initializer_list<char> letters) {
    for (char l : letters)
        for (char e : {G::a, G::be, G::ga, G::dd})
            p.add_pair_rule(l, e,
                            {{W({e, l}), J(generator_grade(l) * generator_grade(e))}});
}

Presentation build_gl(int mutate) {
    Presentation p("gl", {G::a, G::be, G::ga, G::dd});
    add_gl_rules(p, mutate);
    return p;
}

Presentation build_gl_plane(int mutate) {
    Presentation p("gl-plane", {G::a, G::be, G::ga, G::dd, G::x, G::th});
    add_gl_rules(p, mutate);
    add_cross_rules(p, {G::x, G::th});
    add_plane_core(p);
    return p;
}

Presentation build_gl_dual(int mutate) {
    Presentation p("gl-dual", {G::a, G::be, G::ga, G::dd, G::phi, G::y});
    add_gl_rules(p, mutate);
    add_cross_rules(p, {G::phi, G::y});
    p.add_pair_rule(G::y, G::phi, {{W({G::phi, G::y}), J(2) * Q(-1)}});
    p.add_power_rule(G::phi, 3);
    return p;
}

Presentation build_mixed_partial() {
    Presentation p("mixed-partial", {G::x, G::th, G::px, G::pth});
    add_plane_core(p);
    p.add_pair_rule(G::px, G::x,
                    {{W({}), C(1)}, {W({G::x, G::px}), J(2)}, {W({G::th, G::pth}), J(2) - C(1)}});
    p.add_pair_rule(G::px, G::th, {{W({G::th, G::px}), J(2) * Q(-1)}});
    p.add_pair_rule(G::pth, G::x, {{W({G::x, G::pth}), Q(1)}});
    p.add_pair_rule(G::pth, G::th, {{W({}), C(1)}, {W({G::th, G::pth}), J(2)}});
    p.add_pair_rule(G::pth, G::px, {{W({G::px, G::pth}), J(2) * Q(-1)}});
    p.add_power_rule(G::pth, 3);
    return p;
}

}  // namespace

const Presentation& plane() {
    static const Presentation p = build_plane();
    return p;
}

const Presentation& omega() {
    static const Presentation p = build_omega();
    return p;
}

const Presentation& dual() {
    static const Presentation p = build_dual();
    return p;
}

const Presentation& gl() {
    static const Presentation p = build_gl(-1);
    return p;
}

const Presentation& gl_plane() {
    static const Presentation p = build_gl_plane(-1);
    return p;
}

const Presentation& gl_dual() {
    static const Presentation p = build_gl_dual(-1);
    return p;
}

const Presentation& mixed_partial() {
    static const Presentation p = build_mixed_partial();
    return p;
}

const Presentation& presentation_by_name(const std::string& name) {
    if (name == "plane") return plane();
    if (name == "omega") return omega();
    if (name == "dual") return dual();
    if (name == "gl") return gl();
    if (name == "gl-plane") return gl_plane();
    if (name == "mixed-partial") return mixed_partial();
    throw Error("unknown algebra '" + name +
                "' (expected plane | omega | dual | gl | gl-plane | mixed-partial)");
}

int gl_mutation_count() { return 7; }

std::string gl_mutation_label(int slot) {
    static const char* labels[] = {
        "be*a coefficient",       "ga*a coefficient",     "dd*a leading coefficient",
        "dd*a correction dropped", "ga*be coefficient",    "dd*be coefficient",
        "dd*ga coefficient",
    };
    if (slot < 0 || slot >= gl_mutation_count()) throw Error("bad mutation slot");
    return labels[slot];
}

Presentation build_gl_mutated(int slot) { return build_gl(slot); }
Presentation build_gl_plane_mutated(int slot) { return build_gl_plane(slot); }
Presentation build_gl_dual_mutated(int slot) { return build_gl_dual(slot); }

}  // namespace z3q
