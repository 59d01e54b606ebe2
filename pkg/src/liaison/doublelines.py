"""Pairs of double lines in P^3: normal forms, the local-linkage
classification by explicit conditions, and an independent geometric oracle.

A double line is a multiplicity-two structure on a coordinate line, with
ideal (f*v1 + g*v2, v1^2, v1*v2, v2^2) for a pair of coprime binary forms
(f, g) in the two complementary variables.  Two double lines are locally
algebraically linked (l.a.l.) when some locally complete intersection
multiplicity-4 curve links them; the classifier decides this from the form
data, and the oracle re-decides it from scratch by intersecting the ideals
and running local complete-intersection tests.

Condition used in the meeting case with both tangency values zero: the
union is locally a complete intersection at the meeting point iff
c(0:1) * db/dz(0:1) = a(0:1) * dd/dy(0:1) (the proportionality of the two
initial generators; cross form).  This is pinned by the oracle on
randomized instances.
"""

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .ideals import Ideal, hilbert_data, ideal_colon, ideal_equal, ideal_intersect
from .linalg import kernel_basis, solve
from .localrings import RationalPoint, local_ci_test
from .polynomials import Polynomial, substitute


class ClassificationDiscrepancy(RuntimeError):
    """Condition-based verdict and geometric oracle disagree (build-failing)."""


def _univariate_coeffs(form, var_index, other_index, degree):
    """Coefficient list c_k of form = sum c_k * v^k * w^(degree-k)."""
    coeffs = [form.ring.field.zero] * (degree + 1)
    for e, c in form.terms.items():
        coeffs[e[var_index]] = c
    return coeffs


def _univariate_gcd_degree(a, b, field):
    """Degree of gcd of two univariate coefficient lists (may be empty)."""

    def trim(p):
        while p and p[-1] == field.zero:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        # remainder of a mod b
        while len(a) >= len(b) and a:
            factor = field.div(a[-1], b[-1])
            shift = len(a) - len(b)
            for i, coeff in enumerate(b):
                a[i + shift] = field.sub(a[i + shift], field.mul(coeff, factor))
            a = trim(a)
        a, b = b, a
    return len(a) - 1


def binary_forms_have_common_zero(f, g, var_pair):
    """Common zero on P^1 of two binary forms in the variables var_pair."""
    field = f.ring.field
    i, j = var_pair
    if f.is_zero() and g.is_zero():
        return True
    if f.is_zero():
        return g.total_degree() >= 1
    if g.is_zero():
        return f.total_degree() >= 1
    rf, rg = f.total_degree(), g.total_degree()
    # zero at (1:0): the pure v^r coefficient vanishes in both
    if f.coefficient(_pure(f.ring, i, rf)) == field.zero and g.coefficient(
        _pure(g.ring, i, rg)
    ) == field.zero:
        return True
    ca = _univariate_coeffs(f, i, j, rf)
    cb = _univariate_coeffs(g, i, j, rg)
    return _univariate_gcd_degree(ca, cb, field) >= 1


def _pure(ring, index, degree):
    e = [0] * ring.nvars
    e[index] = degree
    return tuple(e)


@dataclass(frozen=True)
class DoubleLine:
    """A double structure on the coordinate line {v1 = v2 = 0}.

    support holds the indices of (v1, v2); forms = (f, g) are the binary
    forms in the complementary variables, attached to v1 and v2 in that
    order, so the non-quadric generator is f*v1 + g*v2.
    """

    ring: object
    support: tuple
    forms: tuple

    def __post_init__(self):
        ring = self.ring
        if ring.nvars != 4:
            raise ValueError("double lines live in a 4-variable ring (P^3)")
        if len(self.support) != 2 or len(set(self.support)) != 2:
            raise ValueError("support must be two distinct variable indices")
        f, g = self.forms
        if f.ring != ring or g.ring != ring:
            raise ValueError("forms from a different ring context")
        pencil = self.pencil
        for form in (f, g):
            for e in form.terms:
                if any(e[k] > 0 for k in self.support):
                    raise ValueError("forms must involve only the pencil variables")
            if not form.is_homogeneous():
                raise ValueError("forms must be homogeneous")
        if f.is_zero() and g.is_zero():
            raise ValueError("both forms vanish")
        if not f.is_zero() and not g.is_zero() and f.total_degree() != g.total_degree():
            raise ValueError("forms must have equal degree")
        if binary_forms_have_common_zero(f, g, pencil):
            raise ValueError("forms share a zero on the support line (resultant 0)")

    @property
    def pencil(self):
        return tuple(k for k in range(4) if k not in self.support)

    @property
    def degree_of_forms(self):
        return max(self.forms[0].total_degree(), self.forms[1].total_degree(), 0)

    def scaled(self, c):
        return DoubleLine(self.ring, self.support, (self.forms[0].scale(c), self.forms[1].scale(c)))


def double_line_ideal(line):
    """(f*v1 + g*v2, v1^2, v1*v2, v2^2) in the ambient ring."""
    ring = line.ring
    v1 = Polynomial.variable(ring, ring.variables[line.support[0]])
    v2 = Polynomial.variable(ring, ring.variables[line.support[1]])
    f, g = line.forms
    return Ideal(ring, [f * v1 + g * v2, v1 * v1, v1 * v2, v2 * v2])


def support_relation(L1, L2):
    s1, s2 = set(L1.support), set(L2.support)
    common = s1 & s2
    if len(common) == 2:
        return "equal"
    if len(common) == 1:
        return "meeting"
    return "disjoint"


@dataclass
class ClassificationVerdict:
    lal: bool
    case_tag: str
    witness: dict | None = None
    mode: str = "conditions"
    oracle_verdict: str | None = None
    point_reports: list = dc_field(default_factory=list)

    def as_dict(self):
        return {
            "lal": self.lal,
            "case_tag": self.case_tag,
            "witness": self.witness,
            "mode": self.mode,
            "oracle_verdict": self.oracle_verdict,
            "points_tested": [r.as_dict() for r in self.point_reports],
        }


def _oriented_forms(line, shared):
    """(a, b) with a attached to the shared support variable."""
    if line.support[0] == shared:
        return line.forms
    return (line.forms[1], line.forms[0])


def _meeting_geometry(L1, L2):
    shared = (set(L1.support) & set(L2.support)).pop()
    free = (set(range(4)) - set(L1.support) - set(L2.support)).pop()
    other1 = next(k for k in L1.support if k != shared)
    other2 = next(k for k in L2.support if k != shared)
    return shared, other1, other2, free


def _eval_at(form, zero_var, one_var):
    ring = form.ring
    coords = [ring.field.zero] * 4
    coords[one_var] = ring.field.one
    coords[zero_var] = ring.field.zero
    return form.evaluate(coords)


def classify_meeting_pair(L1, L2):
    """Conditions-based classification when the supports meet in a point.

    Orients each line so a_i multiplies the shared variable and b_i the
    other support variable; b_1 is evaluated where the partner's support
    crosses (the meeting point of the pencils), likewise b_2.  Both values
    nonzero: linked.  Both zero: linked iff the tangent-coefficient identity
    c * db/dz = a * dd/dy holds at the point.  Exactly one zero: not linked.
    """
    if support_relation(L1, L2) != "meeting":
        raise ValueError("classify_meeting_pair needs supports meeting in one point")
    field = L1.ring.field
    shared, other1, other2, free = _meeting_geometry(L1, L2)
    a1, b1 = _oriented_forms(L1, shared)
    a2, b2 = _oriented_forms(L2, shared)
    # L1's pencil variables are {other2, free}; L2's are {other1, free}
    b1_at = _eval_at(b1, other2, free)
    b2_at = _eval_at(b2, other1, free)
    if b1_at != field.zero and b2_at != field.zero:
        return ClassificationVerdict(True, "meeting_a", witness={"b1": str(b1_at), "b2": str(b2_at)})
    if b1_at == field.zero and b2_at == field.zero:
        a1_at = _eval_at(a1, other2, free)
        a2_at = _eval_at(a2, other1, free)
        db1 = _eval_at(b1.derivative(other2), other2, free)
        db2 = _eval_at(b2.derivative(other1), other1, free)
        lhs = field.mul(a2_at, db1)
        rhs = field.mul(a1_at, db2)
        if lhs == rhs:
            lam = field.div(a1_at, a2_at)
            return ClassificationVerdict(True, "meeting_b", witness={"lambda": str(lam)})
        return ClassificationVerdict(
            False,
            "not_linked",
            witness={
                "failed": "tangent-coefficient identity",
                "a1": str(a1_at), "db1": str(db1), "a2": str(a2_at), "db2": str(db2),
            },
        )
    return ClassificationVerdict(
        False,
        "not_linked",
        witness={"failed": "one-sided tangency", "b1": str(b1_at), "b2": str(b2_at)},
    )


def _form_coeff_rows(a, b, pencil, degree):
    """Rows [coeff(a, m), coeff(b, m)] over the degree-d pencil monomials."""
    i, j = pencil
    ring = a.ring
    rows = []
    mons = []
    for k in range(degree + 1):
        e = [0] * 4
        e[i] = k
        e[j] = degree - k
        mons.append(tuple(e))
        rows.append([a.coefficient(tuple(e)), b.coefficient(tuple(e))])
    return rows, mons


def _pm_extension_ideal(ring, support, N):
    """The rational span of the squared eigenforms of a traceless N, as an
    ideal: the D-eigenspace (D = -det N) of q -> q(s_N) on quadrics in the
    support variables."""
    field = ring.field
    v1n, v2n = (ring.variables[k] for k in support)
    v1, v2 = Polynomial.variable(ring, v1n), Polynomial.variable(ring, v2n)
    (n11, n21), (n12, n22) = (N[0][0], N[1][0]), (N[0][1], N[1][1])
    image1 = v1.scale(n11) + v2.scale(n12)
    image2 = v1.scale(n21) + v2.scale(n22)
    assignment = {name: Polynomial.variable(ring, name) for name in ring.variables}
    assignment[v1n] = image1
    assignment[v2n] = image2
    basis = [v1 * v1, v1 * v2, v2 * v2]
    exps = [q.leading_monomial() for q in basis]
    index = {e: k for k, e in enumerate(exps)}
    rows = []
    for q in basis:
        image = substitute(q, assignment, ring=ring)
        row = [field.zero] * 3
        for e, c in image.terms.items():
            row[index[e]] = c
        rows.append(row)
    det = field.sub(field.mul(N[0][0], N[1][1]), field.mul(N[0][1], N[1][0]))
    D = field.neg(det)
    # matrix of the action on coordinate vectors is rows^T; eigenvectors for D
    mat = [[field.sub(rows[l][k], D if k == l else field.zero) for l in range(3)] for k in range(3)]
    kernel = kernel_basis(mat, 3, field)
    quadrics = []
    for vec in kernel:
        q = Polynomial.zero(ring)
        for c, b in zip(vec, basis):
            q = q + b.scale(c)
        quadrics.append(q)
    return Ideal(ring, quadrics)


def classify_same_support_pair(L1, L2, seed=0, oracle=False):
    """Classification for two double structures on the same line.

    Proportional form pairs define the same double line: linked.  Otherwise
    the pair is linked iff the degrees agree and (a2, b2) = (a1, b1) * N for
    a constant traceless matrix N with nonzero determinant; the witness
    extension is the span of the squared eigenforms of N, built rationally
    and verified through the colon identities (a failed verification is a
    hard error, never a silent answer).
    """
    if support_relation(L1, L2) != "equal":
        raise ValueError("classify_same_support_pair needs equal supports")
    ring = L1.ring
    field = ring.field
    shared = min(L1.support)
    a1, b1 = _oriented_forms(L1, shared)
    a2, b2 = _oriented_forms(L2, shared)
    if (a1 * b2 - a2 * b1).is_zero():
        return ClassificationVerdict(True, "same_support_equal")
    r1 = max(a1.total_degree(), b1.total_degree())
    r2 = max(a2.total_degree(), b2.total_degree())
    if r1 != r2:
        verdict = ClassificationVerdict(
            False, "not_linked", witness={"failed": "form degrees differ", "r1": r1, "r2": r2}
        )
        if oracle:
            _confirm_no_extension(L1, L2, seed)
        return verdict
    pencil = L1.pencil
    rows_ab, _ = _form_coeff_rows(a1, b1, pencil, r1)
    # unknowns (n11, n21, n12, n22); (a2, b2) = (a1, b1) * N columnwise
    rows = []
    rhs = []
    for row, target in zip(rows_ab, _form_coeff_rows(a2, b2, pencil, r1)[0]):
        rows.append([row[0], row[1], field.zero, field.zero])
        rhs.append(target[0])
        rows.append([field.zero, field.zero, row[0], row[1]])
        rhs.append(target[1])
    rows.append([field.one, field.zero, field.zero, field.one])  # trace = 0
    rhs.append(field.zero)
    particular = solve(rows, rhs, field)
    if particular is None:
        verdict = ClassificationVerdict(
            False, "not_linked", witness={"failed": "no traceless matrix relates the pairs"}
        )
        if oracle:
            _confirm_no_extension(L1, L2, seed)
        return verdict
    kernel = kernel_basis(rows, 4, field)

    def determinant(vec):
        return field.sub(field.mul(vec[0], vec[3]), field.mul(vec[1], vec[2]))

    witness_vec = None
    if not kernel:
        if determinant(particular) != field.zero:
            witness_vec = particular
    else:
        # det restricted to the solution family has degree <= 2 per
        # parameter, so a 3-value grid finds a nonzero value iff one exists
        samples = [field.normalize(v) for v in (0, 1, 2)]
        for values in itertools.product(samples, repeat=len(kernel)):
            vec = list(particular)
            for t, kv in zip(values, kernel):
                vec = [field.add(x, field.mul(t, k)) for x, k in zip(vec, kv)]
            if determinant(vec) != field.zero:
                witness_vec = vec
                break
    if witness_vec is None:
        verdict = ClassificationVerdict(
            False, "not_linked", witness={"failed": "every traceless solution is singular"}
        )
        if oracle:
            _confirm_no_extension(L1, L2, seed)
        return verdict

    N = [[witness_vec[0], witness_vec[2]], [witness_vec[1], witness_vec[3]]]
    Y = _pm_extension_ideal(ring, (shared, next(k for k in L1.support if k != shared)), N)
    I1, I2 = double_line_ideal(L1), double_line_ideal(L2)
    ok = (
        len(Y.gens) == 2
        and hilbert_data(Y).degree == 4
        and ideal_equal(ideal_colon(Y, I1), I2)
        and ideal_equal(ideal_colon(Y, I2), I1)
    )
    if not ok:
        raise ClassificationDiscrepancy(
            "traceless witness found but the colon verification failed: "
            f"N = {N}, pair1 = ({a1}, {b1}), pair2 = ({a2}, {b2})"
        )
    return ClassificationVerdict(
        True,
        "same_support_pm",
        witness={
            "N": [[str(x) for x in row] for row in N],
            "extension": [str(g) for g in Y.groebner().elements],
        },
    )


def _confirm_no_extension(L1, L2, seed, attempts=6):
    """Sampled confirmation of a negative same-support verdict: random
    coordinate squares must not produce a linking complete intersection."""
    ring = L1.ring
    field = ring.field
    rng = random.Random(seed)
    I1, I2 = double_line_ideal(L1), double_line_ideal(L2)
    v1 = Polynomial.variable(ring, ring.variables[L1.support[0]])
    v2 = Polynomial.variable(ring, ring.variables[L1.support[1]])
    sample = field.random_sample() + [field.zero]
    for _ in range(attempts):
        m = [rng.choice(sample) for _ in range(4)]
        det = field.sub(field.mul(m[0], m[3]), field.mul(m[1], m[2]))
        if det == field.zero:
            continue
        l1 = v1.scale(m[0]) + v2.scale(m[1])
        l2 = v1.scale(m[2]) + v2.scale(m[3])
        Y = Ideal(ring, [l1 * l1, l2 * l2])
        if ideal_equal(ideal_colon(Y, I1), I2) and ideal_equal(ideal_colon(Y, I2), I1):
            raise ClassificationDiscrepancy(
                "conditions said not linked, but a sampled complete intersection links the pair"
            )


def _support_points(line, rng, count, exclude_pencil_origin):
    """Random rational points on the support line, in pencil coordinates
    (t : 1); excludes t = 0 when the meeting point must be avoided."""
    ring = line.ring
    field = ring.field
    w1, w2 = line.pencil
    values = [v for v in field.random_sample() if not (exclude_pencil_origin and v == field.zero)]
    points = []
    used = set()
    for _ in range(count):
        t = rng.choice(values)
        for _retry in range(4):
            if t not in used:
                break
            t = rng.choice(values)
        used.add(t)
        coords = [field.zero] * 4
        coords[w1] = t
        coords[w2] = field.one
        points.append(RationalPoint.projective(ring, coords))
    return points


def oracle_lal(L1, L2, seed=0, samples_per_line=2, compute_gorenstein=False):
    """Geometric oracle: intersect the ideals and test local complete
    intersections at the meeting point plus sampled smooth points.

    Returns (verdict, reports) with verdict one of 'lal', 'not_lal',
    'inconclusive'.  Same-support pairs are decided by the witness-based
    oracle inside classify_same_support_pair instead.
    """
    relation = support_relation(L1, L2)
    if relation == "equal":
        raise ValueError("same-support pairs use the witness-based oracle")
    rng = random.Random(seed)
    reports = []
    if relation == "disjoint":
        for line in (L1, L2):
            I = double_line_ideal(line)
            for p in _support_points(line, rng, samples_per_line, exclude_pencil_origin=False):
                reports.append(
                    local_ci_test(I, p, seed=rng.randrange(10**6), compute_gorenstein=compute_gorenstein)
                )
        verdict = "lal" if all(r.lci for r in reports) else "not_lal"
        return verdict, reports
    shared, other1, other2, free = _meeting_geometry(L1, L2)
    I1, I2 = double_line_ideal(L1), double_line_ideal(L2)
    U = ideal_intersect(I1, I2)
    field = L1.ring.field
    meet_coords = [field.zero] * 4
    meet_coords[free] = field.one
    meeting = RationalPoint.projective(L1.ring, meet_coords)
    points = [meeting]
    # on each line the pencil coordinate of the meeting point is the
    # partner's support variable, which is the first pencil variable of the
    # line exactly when its index is smaller than the free variable's
    for line, partner_var in ((L1, other2), (L2, other1)):
        w1, w2 = line.pencil
        exclude = w1 == partner_var
        # meeting point sits at (t=0 : 1) in pencil coordinates iff the
        # partner variable is the scaled-by-t one
        points.extend(_support_points(line, rng, samples_per_line, exclude_pencil_origin=exclude))
    for p in points:
        reports.append(
            local_ci_test(U, p, seed=rng.randrange(10**6), compute_gorenstein=compute_gorenstein)
        )
    verdict = "lal" if all(r.lci for r in reports) else "not_lal"
    return verdict, reports


def classify(L1, L2, mode="both", seed=0):
    """Classify a pair of double lines.

    mode 'conditions' runs the explicit classification, 'oracle' the
    geometric one, and 'both' runs both and raises
    ClassificationDiscrepancy on any disagreement.
    """
    if mode not in ("conditions", "oracle", "both"):
        raise ValueError(f"unknown classification mode {mode!r}")
    if L1.ring != L2.ring:
        raise ValueError("double lines live in different ring contexts")
    relation = support_relation(L1, L2)
    if relation == "equal":
        verdict = classify_same_support_pair(L1, L2, seed=seed, oracle=(mode != "conditions"))
        verdict.mode = mode
        if mode != "conditions":
            verdict.oracle_verdict = "lal" if verdict.lal else "not_lal"
        return verdict
    if relation == "meeting":
        verdict = classify_meeting_pair(L1, L2)
    else:
        verdict = ClassificationVerdict(True, "disjoint")
    verdict.mode = mode
    if mode == "conditions":
        return verdict
    oracle_verdict, reports = oracle_lal(L1, L2, seed=seed)
    verdict.oracle_verdict = oracle_verdict
    verdict.point_reports = reports
    if mode == "oracle":
        verdict.lal = oracle_verdict == "lal"
        return verdict
    if (oracle_verdict == "lal") != verdict.lal:
        raise ClassificationDiscrepancy(
            f"conditions say lal={verdict.lal} ({verdict.case_tag}) but the "
            f"oracle says {oracle_verdict} for pair ({L1}, {L2})"
        )
    return verdict
