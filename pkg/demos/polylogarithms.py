"""Multiple polylogarithms: evaluation and the identities they satisfy.

Everything below runs at 40 trusted digits.  The evaluator handles any
convergent argument tuple on the closed unit polydisk; well inside the disk
it sums the nested series directly, on the boundary it switches to a split
iterated-integral representation with geometric term decay.
"""

import mpmath

from lawsonarea import PrecisionConfig, convert_word, letter, li, mpl_spec, \
    stuffle, zeta_signed
from lawsonarea.verify import li11_inversion_residual, zagier_residual

cfg = PrecisionConfig(target_digits=40)
ctx = cfg.context

print("classical values:")
print("  Li_2(1)  =", mpmath.nstr(li(mpl_spec([2], [1], cfg), cfg), 30))
print("  Li_2(-1) =", mpmath.nstr(li(mpl_spec([2], [-1], cfg), cfg), 30))
print("  Li_2(i)  =", mpmath.nstr(li(mpl_spec([2], [ctx.mpc(0, 1)], cfg), cfg), 30))
print("  (compare -pi^2/48 + i*Catalan =",
      mpmath.nstr(-ctx.pi ** 2 / 48 + ctx.mpc(0, 1) * ctx.catalan, 30), ")")

print("\ndepth 2 on the unit circle:")
eta = ctx.expjpi(ctx.mpf(1) / 4)            # primitive 8th root of unity
v = li(mpl_spec([1, 1], [-1, eta ** 3], cfg), cfg)
print("  Li_{1,1}(-1, eta^3) =", mpmath.nstr(v, 30))

print("\ninversion identity (depth 2, weight 2) at (-1, eta^3): residual",
      mpmath.nstr(li11_inversion_residual(ctx.mpc(-1), eta ** 3, cfg), 3))
print("Zagier reduction of Li_{1,1} at (0.3i, -0.7): residual",
      mpmath.nstr(zagier_residual(ctx.mpc(0, "0.3"), ctx.mpc("-0.7"), cfg), 3))

print("\nstuffle product: Li_1(-1)^2 = 2 Li_{1,1}(-1,-1) + Li_2(1)")
z = letter(1, ctx.mpc(-1))
for word, mult in sorted(stuffle((z,), (z,)).items(), key=str):
    print(f"  multiplicity {mult} on {[(l.n, complex(l.z)) for l in word]}")
lhs = li(mpl_spec([1], [-1], cfg), cfg) ** 2
rhs = 2 * li(mpl_spec([1, 1], [-1, -1], cfg), cfg) + li(mpl_spec([2], [1], cfg), cfg)
print("  residual", mpmath.nstr(abs(lhs - rhs), 3))

print("\nalternating zeta values (bars denote sign -1 on that index):")
print("  zeta(3bar)      =", mpmath.nstr(zeta_signed([3], [-1], cfg), 30))
print("  zeta(1,1,3bar)  =", mpmath.nstr(zeta_signed([1, 1, 3], [1, 1, -1], cfg), 30))

print("\na word integral as 4^n polylogarithms (n = 2 here, 16 terms):")
expansion = convert_word((2, 1), ctx.pi / 4, cfg)
value = expansion.value(cfg)
print("  omega(2,1) =", mpmath.nstr(value, 30))
print("  against -i pi log 2: residual",
      mpmath.nstr(abs(value + ctx.mpc(0, 1) * ctx.pi * ctx.ln(2)), 3))
