"""Exact scalars: rationals extended by square roots and i.

Every number in the library is a finite sum q0 + q1*sqrt(r1) + ... with
rational coefficients and square-free radicands; negative radicands
carry the imaginary unit.  Nothing is ever rounded.
"""

from fractions import Fraction

from nsvertex.scalars import I, Scalar

half = Scalar.of(Fraction(1, 2))
root2 = Scalar.root(2)
root3 = Scalar.root(3)

print("1/2 + sqrt(2)        =", half + root2)
print("sqrt(2) * sqrt(3)    =", root2 * root3)
print("sqrt(2) squared      =", root2 * root2)
print("i squared            =", I * I)
print("sqrt(-2)             =", Scalar.root(-2), "=", I * root2)

# inverses stay inside the same finite extension
x = half + root2
print("(1/2 + sqrt(2))^-1   =", x.inverse())
print("check                =", x * x.inverse())

# conjugation flips the sign of i
z = half + I * root3
print("conj(1/2 + i sqrt(3))=", z.conjugate())
print("z * conj(z)          =", z * z.conjugate())

# the wire format is a list of (numerator, denominator, radicand) terms
print("JSON of 1/2 + sqrt(2):", x.to_json())
print("round trip           =", Scalar.from_json(x.to_json()))

# square roots of arbitrary positive rationals normalize the radicand
q = Scalar.sqrt_fraction(Fraction(1, 3))
print("sqrt(1/3)            =", q, " squared =", q * q)
