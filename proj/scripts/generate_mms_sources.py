#!/usr/bin/env python3
"""Generates src/mms_sources_generated.cpp.

Differentiates the closed-form test fields symbolically and emits the source
closures that make them satisfy the coupled phase-field / flow / induction
system, for both the exponential coefficient laws and constant coefficients.
Run from the repository root:  python3 scripts/generate_mms_sources.py
"""

import sympy as sp
from sympy.printing.cxx import CXX17CodePrinter

x, y, t = sp.symbols("x y t", real=True)
eps, lam, sc = sp.symbols("eps lam sc", positive=True)
kappa0, nu0, eta0 = sp.symbols("kappa0 nu0 eta0", positive=True)
pi = sp.pi

phi = 2 + sp.sin(t) * sp.cos(pi * x) * sp.cos(pi * y)
u1 = pi * sp.sin(2 * pi * y) * sp.sin(pi * x) ** 2 * sp.sin(t)
u2 = -pi * sp.sin(2 * pi * x) * sp.sin(pi * y) ** 2 * sp.sin(t)
p = sp.cos(pi * x) * sp.sin(pi * y) * sp.sin(t)
B1 = sp.sin(pi * x) * sp.cos(pi * y) * sp.sin(t)
B2 = -sp.sin(pi * y) * sp.cos(pi * x) * sp.sin(t)

lap = lambda f: sp.diff(f, x, 2) + sp.diff(f, y, 2)
mu = -eps * lap(phi) + (phi**3 - phi) / eps


def sources(kappa, nu, eta):
    # phase equation: dphi/dt - eps div(kappa grad mu) + u . grad phi
    g_phi = (
        sp.diff(phi, t)
        - eps * (sp.diff(kappa * sp.diff(mu, x), x) + sp.diff(kappa * sp.diff(mu, y), y))
        + u1 * sp.diff(phi, x)
        + u2 * sp.diff(phi, y)
    )

    # momentum: du/dt - div(2 nu D(u)) + (u.grad)u + sc B x curl B + grad p
    #           - lam mu grad phi
    D11 = sp.diff(u1, x)
    D22 = sp.diff(u2, y)
    D12 = sp.Rational(1, 2) * (sp.diff(u1, y) + sp.diff(u2, x))
    visc1 = sp.diff(2 * nu * D11, x) + sp.diff(2 * nu * D12, y)
    visc2 = sp.diff(2 * nu * D12, x) + sp.diff(2 * nu * D22, y)
    curlB = sp.diff(B2, x) - sp.diff(B1, y)
    g_u1 = (
        sp.diff(u1, t) - visc1 + u1 * sp.diff(u1, x) + u2 * sp.diff(u1, y)
        + sc * B2 * curlB + sp.diff(p, x) - lam * mu * sp.diff(phi, x)
    )
    g_u2 = (
        sp.diff(u2, t) - visc2 + u1 * sp.diff(u2, x) + u2 * sp.diff(u2, y)
        - sc * B1 * curlB + sp.diff(p, y) - lam * mu * sp.diff(phi, y)
    )

    # induction: dB/dt + curl(eta curl B) - curl(u x B); 2D curl of a scalar w
    # is (dw/dy, -dw/dx)
    w = eta * curlB
    s = u1 * B2 - u2 * B1
    g_B1 = sp.diff(B1, t) + sp.diff(w, y) - sp.diff(s, y)
    g_B2 = sp.diff(B2, t) - sp.diff(w, x) + sp.diff(s, x)

    return [sp.simplify(e) for e in (g_phi, g_u1, g_u2, g_B1, g_B2)]


class Printer(CXX17CodePrinter):
    def _print_Pow(self, expr):
        if expr.exp.is_Integer and 0 < expr.exp <= 6:
            base = self._print(expr.base)
            return "*".join(["(%s)" % base] * int(expr.exp))
        return super()._print_Pow(expr)


printer = Printer()


def emit(name, exprs, params):
    subs, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    for sym, val in subs:
        lines.append(f"  const double {sym} = {printer.doprint(val)};")
    body = "\n".join(lines)
    outs = [printer.doprint(r) for r in reduced]
    sig = ", ".join(f"double {p}" for p in ["x", "y", "t"] + params)
    return (
        f"SourceValues {name}({sig}) {{\n{body}\n"
        f"  return {{{outs[0]},\n          {{{outs[1]}, {outs[2]}}},\n"
        f"          {{{outs[3]}, {outs[4]}}}}};\n}}\n"
    )


exp_srcs = sources(sp.exp(phi), sp.exp(-phi), sp.exp(phi))
const_srcs = sources(kappa0, nu0, eta0)

mu_exprs = [mu, sp.diff(mu, x), sp.diff(mu, y)]
subs, reduced = sp.cse([sp.simplify(e) for e in mu_exprs], optimizations="basic")
mu_body = "\n".join(f"  const double {s} = {printer.doprint(v)};" for s, v in subs)
mu_outs = [printer.doprint(r) for r in reduced]

code = f"""// Generated by scripts/generate_mms_sources.py -- do not edit by hand.

#include "chmhd/mms.hpp"

#include <cmath>

namespace chmhd::mms_detail {{

using std::cos;
using std::exp;
using std::pow;
using std::sin;

SourceValues sources_exp_laws(double x, double y, double t, double eps, double lam, double sc);
SourceValues sources_const_laws(double x, double y, double t, double eps, double lam, double sc,
                                double kappa0, double nu0, double eta0);

{emit("sources_exp_laws", exp_srcs, ["eps", "lam", "sc"])}
{emit("sources_const_laws", const_srcs, ["eps", "lam", "sc", "kappa0", "nu0", "eta0"])}
MuValues chemical_potential(double x, double y, double t, double eps) {{
{mu_body}
  return {{{mu_outs[0]}, {{{mu_outs[1]}, {mu_outs[2]}}}}};
}}

}}  // namespace chmhd::mms_detail
"""

with open("src/mms_sources_generated.cpp", "w") as f:
    f.write(code)
print("wrote src/mms_sources_generated.cpp")
