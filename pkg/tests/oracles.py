"""Independent reference computations used by the tests.

Nothing here goes through the diagram engine: each oracle works on plain
dicts of Fractions (or sympy polynomials) so that agreement with the package
is a genuine second route.
"""

from fractions import Fraction
from itertools import product

import sympy

# cyclotomic


def long_division_reduce(coeffs, N):
    """Reduce a polynomial in zeta_N (list of Fractions, low degree first) mod Phi_N."""
    x = sympy.Symbol("x")
    phi = [Fraction(int(c)) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(N, x), x).all_coeffs())]
    r = [Fraction(c) for c in coeffs]
    d = len(phi) - 1
    for top in range(len(r) - 1, d - 1, -1):
        c = r[top]
        if c:
            for k in range(d + 1):
                r[top - d + k] -= c * phi[k]
    r = r[:d] + [Fraction(0)] * max(0, d - len(r))
    return r


def sympy_zeta_coeffs(expr_powers, N):
    """Canonical coefficients of sum c_k zeta_N^k via sympy.rem against Phi_N."""
    x = sympy.Symbol("x")
    poly = sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in expr_powers)
    rem = sympy.Poly(sympy.rem(poly, sympy.cyclotomic_poly(N, x), x), x)
    d = sympy.totient(N)
    out = [Fraction(0)] * int(d)
    for (k,), c in rem.terms():
        out[k] = Fraction(int(c.p), int(c.q))
    return out


# classical Lie algebras over Q


def classical_antisymmetric(c, n):
    return all(c.get((i, j, k), 0) == -c.get((j, i, k), 0) for i in range(n) for j in range(n) for k in range(n))


def classical_jacobi(c, n):
    def br(u, v):
        out = {}
        for (i, a), (j, b) in product(u.items(), v.items()):
            for k in range(n):
                s = c.get((i, j, k), 0)
                if s:
                    out[k] = out.get(k, 0) + a * b * s
        return {k: v for k, v in out.items() if v}

    def add(*vs):
        out = {}
        for v in vs:
            for k, a in v.items():
                out[k] = out.get(k, 0) + a
        return {k: v for k, v in out.items() if v}

    e = [{i: 1} for i in range(n)]
    for x, y, z in product(range(n), repeat=3):
        # left-nested form; it differs from [x,[y,z]] + ... only without antisymmetry
        if add(br(br(e[x], e[y]), e[z]), br(br(e[y], e[z]), e[x]), br(br(e[z], e[x]), e[y])):
            return False
    return True


# 2x2 matrices for sl2 and gl2


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def commutator(a, b):
    ab, ba = matmul(a, b), matmul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(2)] for i in range(2)]


SL2 = {
    "h": [[1, 0], [0, -1]],
    "e": [[0, 1], [0, 0]],
    "f": [[0, 0], [1, 0]],
}


def sl2_coords(m):
    """Coordinates of a traceless 2x2 matrix in the basis h, e, f."""
    assert m[0][0] == -m[1][1]
    return {k: v for k, v in (("h", m[0][0]), ("e", m[0][1]), ("f", m[1][0])) if v}


def sl2_structure():
    return {(a, b): sl2_coords(commutator(SL2[a], SL2[b])) for a in SL2 for b in SL2}


def elementary(i, j):
    m = [[0, 0], [0, 0]]
    m[i][j] = 1
    return m


def gl2_structure():
    out = {}
    for (i, j), (k, l) in product(product(range(2), repeat=2), repeat=2):
        c = commutator(elementary(i, j), elementary(k, l))
        out[((i, j), (k, l))] = {(p, q): c[p][q] for p in range(2) for q in range(2) if c[p][q]}
    return out


# adjoint action and the classical Yang-Baxter sum


def ad_tensor(table, x, t):
    """(ad_x (x) id + id (x) ad_x) applied to t = {(a, b): c}."""
    out = {}
    for (a, b), c in t.items():
        for z, s in table[(x, a)].items():
            out[(z, b)] = out.get((z, b), 0) + c * s
        for z, s in table[(x, b)].items():
            out[(a, z)] = out.get((a, z), 0) + c * s
    return {k: v for k, v in out.items() if v}


def cybe_sum(table, R):
    """[R12, R13] + [R12, R23] + [R13, R23] for R = {(a, b): c} over a Lie algebra table."""
    out = {}

    def put(key, v):
        out[key] = out.get(key, 0) + v

    for ((a, b), c), ((p, q), d) in product(R.items(), repeat=2):
        for z, s in table[(a, p)].items():
            put((z, b, q), c * d * s)
        for z, s in table[(b, p)].items():
            put((a, z, q), c * d * s)
        for z, s in table[(b, q)].items():
            put((a, p, z), c * d * s)
    return {k: v for k, v in out.items() if v}


# generic index contraction for graded morphisms


def pairing(group, chi, g):
    """Exponent k with chi(g) = zeta_M^k, M the group exponent."""
    M = group.exponent
    return sum(c * x * (M // n) for c, x, n in zip(chi, g, group.cyclic_orders)) % M


def infinitesimal_braiding_oracle(A, H, alpha, phi):
    """Four-term contraction for the infinitesimal braiding A (x) A -> A (x) A.

    Scalars are returned as braidlie Scalars; the braiding coefficient of
    u (x) v -> v (x) u is chi_v(g_u).
    """
    from braidlie.cyclotomic import Scalar, root_of_unity

    group = A.group
    M = group.exponent

    def q(u, v):
        return root_of_unity(M, pairing(group, v.character, u.degree))

    def act(h, a):
        return alpha.entries.get((h, a), {})

    out = {}

    def put(key, s):
        out[key] = out.get(key, Scalar.zero()) + s

    for a, b in product(range(A.dim), repeat=2):
        ea, eb = A.basis[a], A.basis[b]
        # + (alpha (x) id)(C_{A,H} (x) id)(id (x) phi)
        for (h, b2), s in phi.entries.get((b,), {}).items():
            c = q(ea, H.basis[h])
            for (z,), t in act(h, a).items():
                put(((a, b), (z, b2)), s * c * t)
        # + (id (x) alpha)(C_{H,A} (x) id)(phi (x) id)
        for (h, a2), s in phi.entries.get((a,), {}).items():
            c = q(H.basis[h], A.basis[a2])
            for (z,), t in act(h, b).items():
                put(((a, b), (a2, z)), s * c * t)
        # - (alpha (x) id)(id (x) C_{A,A})(phi (x) id)
        for (h, a2), s in phi.entries.get((a,), {}).items():
            c = q(A.basis[a2], eb)
            for (z,), t in act(h, b).items():
                put(((a, b), (z, a2)), -(s * c * t))
        # - (id (x) alpha)(C_{H,A} (x) id)(id (x) C_{A,A})(C_{A,H} (x) id)(id (x) phi)
        for (h, b2), s in phi.entries.get((b,), {}).items():
            c = q(ea, H.basis[h]) * q(ea, A.basis[b2]) * q(H.basis[h], A.basis[b2])
            for (z,), t in act(h, a).items():
                put(((a, b), (b2, z)), -(s * c * t))
    return {k: v for k, v in out.items() if not v.is_zero()}


def morphism_dict(m):
    return {(i, j): s for i, j, s in m.triples()}


# the cop quantum double over a trivially graded H


def cop_double_oracle(c, d, n):
    """Bracket and cobracket tables of H*cop (+) H.

    ``c[(i, j)] = {k: c_ij^k}`` is the bracket of H and ``d[i] = {(a, b): ...}``
    its cobracket.  Indices 0..n-1 are the dual basis e^i, n..2n-1 are e_i.
    Pairing <e^i, e_j> = delta_ij.
    """
    br = {}

    def put(tab, key, out, v):
        if v:
            row = tab.setdefault(key, {})
            row[out] = row.get(out, 0) + v

    for i, j in product(range(n), repeat=2):
        # H block
        for k, v in c.get((i, j), {}).items():
            put(br, (n + i, n + j), n + k, v)
        # dual bracket: [e^i, e^j] = sum_k d_k^{ij} e^k
        for k in range(n):
            put(br, (i, j), k, d.get(k, {}).get((i, j), 0))
    for i, k in product(range(n), repeat=2):
        # [e_i, e^k] = alpha + beta; alpha(e_i, e^k) = -sum_j c_ij^k e^j, beta = sum_b d_i^{kb} e_b
        for j in range(n):
            v = -c.get((i, j), {}).get(k, 0)
            put(br, (n + i, k), j, v)
            put(br, (k, n + i), j, -v)
        for (a, b), v in d.get(i, {}).items():
            if a == k:
                put(br, (n + i, k), n + b, v)
                put(br, (k, n + i), n + b, -v)
    cob = {}
    for k in range(n):
        # delta_A(e^k) = -sum c_ij^k e^i (x) e^j
        for (i, j), row in c.items():
            v = row.get(k, 0)
            if v:
                put(cob, k, (i, j), -v)
        for (a, b), v in d.get(k, {}).items():
            put(cob, n + k, (n + a, n + b), v)
    strip = lambda t: {k: {o: v for o, v in r.items() if v} for k, r in t.items() if any(r.values())}
    return strip(br), strip(cob)


# quantum linear space product


def qls_product_oracle(spec, a, b):
    """x^a * x^b by bubble-sorting the word with x_i x_j = chi_j(g_i) x_j x_i.

    Returns (exponent tuple, Scalar), or None when a nilpotency kills it.
    """
    from braidlie.cyclotomic import Scalar, root_of_unity

    g = spec.group
    word = [i for i, k in enumerate(a) for _ in range(k)] + [i for i, k in enumerate(b) for _ in range(k)]
    s = Scalar.one()
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            i, j = word[k], word[k + 1]
            if i > j:
                s = s * root_of_unity(g.exponent, pairing(g, spec.characters[j], spec.degrees[i]))
                word[k], word[k + 1] = j, i
                changed = True
    c = tuple(word.count(i) for i in range(spec.theta))
    if any(x >= spec.nilpotency(i) for i, x in enumerate(c)):
        return None
    return c, s
