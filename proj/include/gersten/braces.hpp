#pragma once

#include "gersten/operad.hpp"

namespace gersten {

/* x0{x1,...,xn}: sum over increasing insertion positions of iterated
 * compositions; zero when n exceeds the arity of x0. */
Cochain brace(const Cochain& x0, const std::vector<Cochain>& args);

/* [x,y] = x{y} - (-1)^{(p+q-1)(s+t-1)} y{x}. */
Cochain g_bracket(const Cochain& x, const Cochain& y);

/* A multiplication: arity-2, vertical-degree-0 cochain with m2{m2} = 0,
 * validated at construction. */
struct Multiplication {
    Cochain m2;
    static Multiplication make(Cochain m2);
};

/* d(x) = [m2, x], bidegree (1,0). */
Cochain differential(const Multiplication& m, const Cochain& x);

/* x . y = (-1)^{|x|-1} m2{x,y}. */
Cochain cup(const Multiplication& m, const Cochain& x, const Cochain& y);

/* Sq(x) = x{x}; equals (1/2)[x,x] on even total degrees away from
 * characteristic 2. Requires char 2 or |x| even. */
Cochain gerstenhaber_square(const Cochain& x);

/* x o y = x{y} for cochains of an associative operadic ideal. */
Cochain circle(const OperadIdeal& ideal, const Cochain& x, const Cochain& y);

} // namespace gersten
