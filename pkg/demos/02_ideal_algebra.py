"""Ideal algebra: intersection, colon, saturation, and Hilbert data.

Run with: python3 demos/02_ideal_algebra.py
"""

from liaison import (
    Ideal,
    eliminate,
    hilbert_data,
    ideal_colon,
    ideal_intersect,
    make_ring,
    saturate,
)

R = make_ring(["x", "y", "z", "u"], "Q", "grevlex")
x, y, z, u = R.gens()


def show(label, ideal):
    print(f"{label}:")
    for g in ideal.groebner():
        print("   ", g)


# Intersections go through one auxiliary variable t: eliminate t from
# t*I + (1-t)*J.
show("(x) cap (y)", ideal_intersect(Ideal(R, [x]), Ideal(R, [y])))

# The colon ideal (I : J) collects everything that multiplies J into I.
# This is the computational heart of linkage.
show("(xy) : (x)", ideal_colon(Ideal(R, [x * y]), Ideal(R, [x])))

Y = Ideal(R, [x**2, y**2])
I1 = Ideal(R, [z * x + u * y, x**2, x * y, y**2])
show("(x^2, y^2) : (zx+uy, x^2, xy, y^2)", ideal_colon(Y, I1))

# Saturation strips away the part of a scheme supported on another one.
show("(x^2 y) : y^infinity", saturate(Ideal(R, [x**2 * y]), Ideal(R, [y])))

# Hilbert data: dimension and degree from the leading-term ideal.
for label, I in (
    ("a double line", I1),
    ("the plane curve pair (x,y)^2", Ideal(R, [x**2, x * y, y**2])),
    ("the complete intersection (x^2, y^2)", Y),
):
    data = hilbert_data(I)
    print(
        f"{label}: projective dimension {data.projective_dimension}, "
        f"degree {data.degree}"
    )

# Elimination projects a variety to a coordinate subspace.
R3 = make_ring(["t", "a", "b"], "Q", "grevlex")
t, a, b = R3.gens()
curve = Ideal(R3, [a - t**2, b - t**3])
show("eliminating t from (a - t^2, b - t^3)", eliminate(curve, ["t"]))
